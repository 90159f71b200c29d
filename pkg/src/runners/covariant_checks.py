import math
from typing import Dict, List, Sequence

import numpy as np

from .base_runner import BaseRunner, Column, DIMENSIONLESS, tagged
from ..physics.covariant import (
    convergence_ratio,
    divergence_residual,
    excitation_from_constitutive,
    field_tensor_from_EB,
    four_velocity,
    plane_wave_four_momentum,
    plane_wave_sampler,
)
from ..physics.em_core import mechanical_momentum_density, momentum_density
from ..physics.errors import PreconditionError
from ..physics.types import FieldPoint, Medium, MomentumTag, PlaneWave

# Wavenumber scaling of the deliberately inconsistent control field
CONTROL_DISPERSION_FACTOR = 1.1
# Phase of the probe point; any value with non-vanishing third derivatives works
_PROBE_PHASE = 0.3

_REST_E = np.array([0.3, -1.2, 0.7])
_REST_B_DIRECTION = np.array([0.5, 0.1, -0.9])


class CovariantChecksRunner(BaseRunner):
    scenario_id = 'covariant-checks'

    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        layout = [
            ('rest_frame_residual', DIMENSIONLESS),
            ('momentum_ledger_residual', DIMENSIONLESS),
            ('divergence_norm', 'N/m**3'),
            ('convergence_ratio', DIMENSIONLESS),
            ('control_convergence_ratio', DIMENSIONLESS),
        ]
        # (c^2 |G|^2 - W^2) / max(c^2 |G|^2, W^2): > 0 spacelike, 0 null, < 0 timelike
        layout += [(tagged('four_momentum_interval', tag), DIMENSIONLESS) for tag in tags]
        return layout

    def _wave(self, params: Dict[str, float]) -> PlaneWave:
        return PlaneWave(
            E0=params['E0'],
            omega=params['omega'],
            direction=np.array([1.0, 0.0, 0.0]),
            polarization=np.array([0.0, 1.0, 0.0]),
            medium=Medium.from_index(params['n']),
            constants=self.constants,
        )

    def _rest_frame_residual(self, medium: Medium, E0: float) -> float:
        c = self.constants
        E = E0 * _REST_E
        B = E0 * medium.n / c.c * _REST_B_DIRECTION
        F = field_tensor_from_EB(E, B, c)
        D, H = excitation_from_constitutive(F, four_velocity(constants=c), medium.n, medium.mu_r, c).to_si(c)
        expected = FieldPoint.from_medium(E, B / (c.mu0 * medium.mu_r), medium, c)
        return max(
            float(np.linalg.norm(D - expected.D) / np.linalg.norm(expected.D)),
            float(np.linalg.norm(H - expected.H) / np.linalg.norm(expected.H)),
        )

    def _ledger_residual(self, wave: PlaneWave) -> float:
        fp = wave.fields_at(np.zeros(3), 0.0)
        g_A = momentum_density(fp, MomentumTag.ABRAHAM, self.constants)
        g_M = momentum_density(fp, MomentumTag.MINKOWSKI, self.constants)
        g_mech = mechanical_momentum_density(wave.medium, fp, self.constants)
        scale = float(np.max(np.abs(g_M)))
        if scale == 0.0:
            return 0.0
        return float(np.max(np.abs(g_A + g_mech - g_M)) / scale)

    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        if not 0 < params['grid_fraction'] < 0.5:
            raise PreconditionError('grid_fraction', params['grid_fraction'], 'in (0, 0.5)')
        if not params['E0'] > 0:
            raise PreconditionError('E0', params['E0'], '> 0')
        wave = self._wave(params)
        grid_step = params['grid_fraction'] * 2.0 * math.pi / wave.k
        point = np.array([_PROBE_PHASE / wave.k, 0.0, 0.0, 0.0])

        sampler = plane_wave_sampler(wave)
        control = plane_wave_sampler(wave, CONTROL_DISPERSION_FACTOR)
        values = {
            'rest_frame_residual': self._rest_frame_residual(wave.medium, wave.E0),
            'momentum_ledger_residual': self._ledger_residual(wave),
            'divergence_norm': float(np.linalg.norm(
                divergence_residual(sampler, point, grid_step, self.constants)[:3]
            )),
            'convergence_ratio': convergence_ratio(sampler, point, grid_step, self.constants),
            'control_convergence_ratio': convergence_ratio(control, point, grid_step, self.constants),
        }
        for tag in tags:
            p = plane_wave_four_momentum(wave, tag)
            spatial = self.constants.c2 * float(np.dot(p.G, p.G))
            temporal = p.W ** 2
            values[tagged('four_momentum_interval', tag)] = (spatial - temporal) / max(spatial, temporal)
        return values
