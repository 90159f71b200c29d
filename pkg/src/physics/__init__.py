from .constants import PhysicalConstants, DEFAULT_CONSTANTS
from .errors import PreconditionError, QuadratureError
from .types import (
    MomentumTag,
    Medium,
    FieldPoint,
    EMQuantities,
    PlaneWave,
    SourceDensities,
)

__all__ = [
    'PhysicalConstants',
    'DEFAULT_CONSTANTS',
    'PreconditionError',
    'QuadratureError',
    'MomentumTag',
    'Medium',
    'FieldPoint',
    'EMQuantities',
    'PlaneWave',
    'SourceDensities',
]
