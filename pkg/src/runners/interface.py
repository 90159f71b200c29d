from typing import Dict, List, Sequence

from .base_runner import BaseRunner, Column
from ..physics.em_core import interface_pressure
from ..physics.types import MomentumTag


class InterfaceRunner(BaseRunner):
    scenario_id = 'interface'

    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        return [('surface_force', 'Pa')]

    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        return {
            'surface_force': interface_pressure(params['E_t'], params['n_from'], params['n_to'], self.constants)
        }
