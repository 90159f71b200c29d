import logging
import math
from abc import ABC, abstractmethod
from typing import Dict, List, Sequence, Tuple

from ..config.scenario_config import SCENARIO_CONFIGS
from ..physics.constants import PhysicalConstants, DEFAULT_CONSTANTS
from ..physics.types import MomentumTag

logger = logging.getLogger(__name__)

Column = Tuple[str, str]

RESIDUAL_SUFFIX = '_residual'
DIMENSIONLESS = '1'


def tagged(base: str, tag: MomentumTag) -> str:
    return f"{base}_{tag.value}"


def relative_difference(a: float, b: float) -> float:
    """|a - b| relative to the larger magnitude; 0 when both vanish"""
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


class BaseRunner(ABC):
    """One scenario: a fixed column layout and a pure evaluation per parameter point"""

    scenario_id: str = ''

    def __init__(self, constants: PhysicalConstants = DEFAULT_CONSTANTS):
        self.constants = constants
        self._config = SCENARIO_CONFIGS[self.scenario_id]

    @property
    def name(self) -> str:
        return self._config['name']

    @property
    def description(self) -> str:
        return self._config['description']

    @property
    def provenance(self) -> str:
        return self._config['provenance']

    @abstractmethod
    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        """(name, unit) of every output value, in emission order"""

    @abstractmethod
    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        """Values keyed by column name; raises PreconditionError on an invalid point"""

    def residual_columns(self, tags: Sequence[MomentumTag]) -> List[str]:
        return [name for name, _ in self.columns(tags) if name.endswith(RESIDUAL_SUFFIX)]

    def row(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> List[float]:
        values = self.evaluate(params, tags)
        layout = self.columns(tags)
        missing = [name for name, _ in layout if name not in values]
        if missing:
            raise RuntimeError(f"{self.scenario_id} runner produced no value for: {', '.join(missing)}")
        return [float(values[name]) for name, _ in layout]

    def empty_row(self, tags: Sequence[MomentumTag]) -> List[float]:
        return [math.nan] * len(self.columns(tags))
