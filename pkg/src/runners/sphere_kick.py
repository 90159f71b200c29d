from typing import Dict, List, Sequence

from .base_runner import BaseRunner, Column, DIMENSIONLESS, tagged
from ..physics.scenarios import (
    SphereKickConfig,
    displacement_ratio,
    kick_correction_scale,
    sphere_kick_trajectory,
    sphere_kick_trajectory_numeric,
    sphere_kick_vmax,
    total_displacement,
)
from ..physics.types import Medium, MomentumTag


def _scaled_difference(a: float, b: float, scale: float) -> float:
    """|a - b| against the full-scale value (v_max or total displacement) of the trajectory"""
    if scale == 0.0:
        return abs(a - b)
    return abs(a - b) / abs(scale)

class SphereKickRunner(BaseRunner):
    scenario_id = 'sphere-kick'

    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        layout = [('correction_scale', DIMENSIONLESS)]
        for tag in tags:
            layout += [
                (tagged('v_max', tag), 'm/s'),
                (tagged('total_displacement', tag), 'm'),
                (tagged('velocity', tag), 'm/s'),
                (tagged('displacement', tag), 'm'),
                (tagged('displacement_ratio', tag), DIMENSIONLESS),
                (f"{tagged('trajectory', tag)}_residual", DIMENSIONLESS),
            ]
        return layout

    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        cfg = SphereKickConfig(
            M=params['M'],
            a=params['a'],
            delta_G=params['delta_G'],
            pulse_energy=params['H'],
            fluid=Medium.from_index(params['n'], viscosity=params['mu']),
            reference_fluid=Medium.from_index(params['n0'], viscosity=params['mu0']),
            L0=params['L0'],
        )
        t = params['t']
        values = {'correction_scale': kick_correction_scale(cfg, self.constants)}
        for tag in tags:
            closed = sphere_kick_trajectory(cfg, tag, t, self.constants)
            numeric = sphere_kick_trajectory_numeric(cfg, tag, t, self.constants)
            values[tagged('v_max', tag)] = sphere_kick_vmax(cfg, tag, self.constants)
            values[tagged('total_displacement', tag)] = total_displacement(cfg, tag, self.constants)
            values[tagged('velocity', tag)] = closed.velocity
            values[tagged('displacement', tag)] = closed.displacement
            values[tagged('displacement_ratio', tag)] = displacement_ratio(cfg, tag, self.constants)
            values[f"{tagged('trajectory', tag)}_residual"] = max(
                _scaled_difference(closed.velocity, numeric.velocity, values[tagged('v_max', tag)]),
                _scaled_difference(closed.displacement, numeric.displacement,
                                   values[tagged('total_displacement', tag)]),
            )
        return values
