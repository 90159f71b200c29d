from typing import Dict, List, Sequence

from .base_runner import BaseRunner, Column, DIMENSIONLESS
from ..physics.errors import PreconditionError
from ..physics.scenarios import bec_recoil
from ..physics.types import MomentumTag


class BecRunner(BaseRunner):
    scenario_id = 'bec'

    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        return [('recoil', 'kg*m/s'), ('recoil_over_vacuum', DIMENSIONLESS)]

    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        if not params['omega'] > 0:
            raise PreconditionError('omega', params['omega'], '> 0')
        recoil = bec_recoil(params['n'], params['omega'], self.constants)
        vacuum = bec_recoil(1.0, params['omega'], self.constants)
        return {'recoil': recoil, 'recoil_over_vacuum': recoil / vacuum}
