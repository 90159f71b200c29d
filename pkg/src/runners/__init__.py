from .base_runner import BaseRunner
from .mirror import MirrorRunner
from .drag import DragRunner
from .wgm import WgmRunner
from .sphere_kick import SphereKickRunner
from .fiber import FiberRunner
from .bec import BecRunner
from .interface import InterfaceRunner
from .covariant_checks import CovariantChecksRunner

# Map scenario IDs to runner classes
AVAILABLE_RUNNERS = {
    'mirror': MirrorRunner,
    'drag': DragRunner,
    'wgm': WgmRunner,
    'sphere-kick': SphereKickRunner,
    'fiber': FiberRunner,
    'bec': BecRunner,
    'interface': InterfaceRunner,
    'covariant-checks': CovariantChecksRunner,
}

__all__ = [
    'BaseRunner',
    'MirrorRunner',
    'DragRunner',
    'WgmRunner',
    'SphereKickRunner',
    'FiberRunner',
    'BecRunner',
    'InterfaceRunner',
    'CovariantChecksRunner',
    'AVAILABLE_RUNNERS',
]
