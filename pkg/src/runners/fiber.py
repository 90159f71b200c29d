from typing import Dict, List, Sequence

from .base_runner import BaseRunner, Column
from ..physics.scenarios import fiber_exit_impulse
from ..physics.types import MomentumTag


class FiberRunner(BaseRunner):
    """Exit impulse is the Minkowski momentum deficit; it carries no tag suffix"""

    scenario_id = 'fiber'

    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        return [('impulse', 'N*s')]

    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        return {'impulse': fiber_exit_impulse(params['H'], params['n'], self.constants)}
