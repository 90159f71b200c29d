from typing import Dict, List, Sequence

from .base_runner import BaseRunner, Column, DIMENSIONLESS, tagged
from ..physics.scenarios import DragConfig, photon_drag_field
from ..physics.types import MomentumTag


class DragRunner(BaseRunner):
    scenario_id = 'drag'

    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        layout = [(tagged('field', tag), 'V/m') for tag in tags]
        # E.e.c/(I.sigma_a): n under Minkowski, 1/n under Abraham
        layout += [(tagged('momentum_per_photon_index', tag), DIMENSIONLESS) for tag in tags]
        return layout

    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        cfg = DragConfig(intensity=params['I'], sigma_a=params['sigma_a'], omega=params['omega'], n=params['n'])
        values = {}
        for tag in tags:
            field = photon_drag_field(cfg, tag, self.constants)
            values[tagged('field', tag)] = field
            values[tagged('momentum_per_photon_index', tag)] = (
                field * self.constants.e_charge * self.constants.c / (cfg.intensity * cfg.sigma_a)
            )
        return values
