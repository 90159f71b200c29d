from typing import Dict, List, Sequence

from .base_runner import BaseRunner, Column, DIMENSIONLESS, relative_difference
from ..physics.scenarios import (
    MirrorConfig,
    mirror_pressure_divergence,
    mirror_pressure_flux,
    mirror_pressure_lorentz,
    reference_pressure_ratio,
)
from ..physics.types import Medium, MomentumTag


class MirrorRunner(BaseRunner):
    scenario_id = 'mirror'

    def columns(self, tags: Sequence[MomentumTag]) -> List[Column]:
        return [
            ('k_over_alpha', DIMENSIONLESS),
            ('reflectance', DIMENSIONLESS),
            ('phase', 'rad'),
            ('pressure_flux', 'Pa'),
            ('pressure_lorentz', 'Pa'),
            ('pressure_divergence', 'Pa'),
            ('pressure_ratio_to_air', DIMENSIONLESS),
            ('flux_lorentz_residual', DIMENSIONLESS),
            ('flux_divergence_residual', DIMENSIONLESS),
            ('lorentz_divergence_residual', DIMENSIONLESS),
        ]

    def evaluate(self, params: Dict[str, float], tags: Sequence[MomentumTag]) -> Dict[str, float]:
        cfg = MirrorConfig(
            medium=Medium.from_index(params['n']),
            E0=params['E0'],
            omega=params['omega'],
            conductivity=params['sigma'],
            max_k_over_alpha=params['max_k_over_alpha'],
            constants=self.constants,
        )
        flux = mirror_pressure_flux(cfg)
        lorentz = mirror_pressure_lorentz(cfg, params['quadrature_tol'])
        divergence = mirror_pressure_divergence(cfg)
        return {
            'k_over_alpha': cfg.k_over_alpha,
            'reflectance': flux.reflectance,
            'phase': flux.phase,
            'pressure_flux': flux.pressure,
            'pressure_lorentz': lorentz,
            'pressure_divergence': divergence,
            'pressure_ratio_to_air': reference_pressure_ratio(cfg),
            'flux_lorentz_residual': relative_difference(flux.pressure, lorentz),
            'flux_divergence_residual': relative_difference(flux.pressure, divergence),
            'lorentz_divergence_residual': relative_difference(lorentz, divergence),
        }
