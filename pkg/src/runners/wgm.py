from typing import Dict, List, Sequence

from .base_runner import BaseRunner, Column, DIMENSIONLESS, relative_difference, tagged
from ..physics.scenarios import TorqueConfig, wgm_torque, wgm_torque_volume_integral
from ..physics.types import MomentumTag


class WgmRunner(BaseRunner):
    scenario_id = 'wgm'

    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        layout = []
        for tag in tags:
            layout += [(tagged('torque', tag), 'N*m'), (tagged('amplitude', tag), 'N*m')]
        if MomentumTag.ABRAHAM in tags:
            layout += [('torque_volume_integral', 'N*m'), ('volume_integral_residual', DIMENSIONLESS)]
        return layout

    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        cfg = TorqueConfig(a=params['a'], P0=params['P0'], omega0=params['omega0'], n=params['n'])
        t = params['t']
        values = {}
        for tag in tags:
            result = wgm_torque(cfg, t, tag, self.constants)
            values[tagged('torque', tag)] = result.torque
            values[tagged('amplitude', tag)] = result.amplitude
        if MomentumTag.ABRAHAM in tags:
            integral = wgm_torque_volume_integral(cfg, t, constants=self.constants)
            values['torque_volume_integral'] = integral
            values['volume_integral_residual'] = relative_difference(
                integral, values[tagged('torque', MomentumTag.ABRAHAM)]
            )
        return values
