import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from ..config import ABMINK_TOL
from ..physics.constants import PhysicalConstants, DEFAULT_CONSTANTS
from ..physics.covariant import classify_four_momentum, FourMomentumClass, plane_wave_four_momentum
from ..physics.em_core import abraham_term, mechanical_momentum_density, momentum_density, time_average
from ..physics.scenarios import (
    MirrorConfig,
    SphereKickConfig,
    TorqueConfig,
    reference_pressure_ratio,
    wgm_torque,
    wgm_torque_volume_integral,
)
from ..physics.types import FieldPoint, Medium, MomentumTag, PlaneWave
from ..runners import CovariantChecksRunner, MirrorRunner, SphereKickRunner

logger = logging.getLogger(__name__)

LEDGER_SEED = 20240521
LEDGER_POINTS = 1000
NULLING_PERIODS = 10
SAMPLES_PER_PERIOD = 64
CONVERGENCE_TARGET = 4.0
CONVERGENCE_BAND = 0.2

_VISIBLE_WAVELENGTHS = (700e-9, 400e-9)


@dataclass(frozen=True)
class CheckResult:
    """residual is compared against tolerance; a negative control passes when it exceeds it"""
    name: str
    residual: float
    tolerance: float
    passed: bool
    detail: str = ''

    @classmethod
    def at_most(cls, name: str, residual: float, tolerance: float, detail: str = '') -> 'CheckResult':
        return cls(name, residual, tolerance, bool(residual <= tolerance), detail)

    @classmethod
    def above(cls, name: str, residual: float, tolerance: float, detail: str = '') -> 'CheckResult':
        return cls(name, residual, tolerance, bool(residual > tolerance), detail)


def _plane_wave(n: float, constants: PhysicalConstants, E0: float = 1.0) -> PlaneWave:
    return PlaneWave(
        E0=E0,
        omega=2.0 * math.pi * constants.c / 1e-6,
        direction=np.array([1.0, 0.0, 0.0]),
        polarization=np.array([0.0, 1.0, 0.0]),
        medium=Medium.from_index(n),
        constants=constants,
    )


class CheckService:
    """Built-in cross-check suite behind `abmink check`"""

    def __init__(self, tolerance: float = ABMINK_TOL, constants: PhysicalConstants = DEFAULT_CONSTANTS):
        self.tolerance = tolerance
        self.constants = constants

    def checks(self) -> List[Callable[[], CheckResult]]:
        return [
            self.check_three_way_mirror,
            self.check_air_reference_ratio,
            self.check_divergence_convergence,
            self.check_divergence_control,
            self.check_momentum_ledger,
            self.check_abraham_nulling,
            self.check_rest_frame_reduction,
            self.check_four_momentum_classes,
            self.check_sphere_trajectory,
            self.check_wgm_volume_integral,
        ]

    def run_all(self) -> List[CheckResult]:
        results = []
        for check in self.checks():
            result = check()
            level = logging.INFO if result.passed else logging.ERROR
            logger.log(level, f"check {result.name}: residual {result.residual:.3e} "
                              f"(tolerance {result.tolerance:.1e}) {'passed' if result.passed else 'FAILED'}")
            results.append(result)
        return results

    def check_three_way_mirror(self) -> CheckResult:
        runner = MirrorRunner(self.constants)
        omegas = [2.0 * math.pi * self.constants.c / wavelength for wavelength in _VISIBLE_WAVELENGTHS]
        grid = itertools.product(
            np.linspace(1.0, 1.6, 5),
            np.geomspace(1e6, 1e8, 5),
            np.linspace(omegas[0], omegas[1], 5),
        )
        worst = 0.0
        evaluated = 0
        for n, sigma, omega in grid:
            cfg = MirrorConfig(medium=Medium.from_index(float(n)), E0=1e3, omega=float(omega),
                               conductivity=float(sigma), constants=self.constants)
            if not cfg.k_over_alpha < cfg.max_k_over_alpha:
                continue
            values = runner.evaluate(
                {'n': float(n), 'E0': 1e3, 'omega': float(omega), 'sigma': float(sigma),
                 'quadrature_tol': 1e-8, 'max_k_over_alpha': cfg.max_k_over_alpha},
                (),
            )
            worst = max(worst, values['flux_lorentz_residual'], values['flux_divergence_residual'],
                        values['lorentz_divergence_residual'])
            evaluated += 1
        if evaluated == 0:
            return CheckResult('three_way_mirror', math.nan, self.tolerance, False, 'no point inside the regime guard')
        return CheckResult.at_most('three_way_mirror', worst, self.tolerance, f"{evaluated} points")

    def check_air_reference_ratio(self) -> CheckResult:
        worst = 0.0
        for n in (1.33, 1.50, 1.60):
            cfg = MirrorConfig(medium=Medium.from_index(n), E0=1e3, omega=2.0 * math.pi * self.constants.c / 500e-9,
                               conductivity=1e8, constants=self.constants)
            worst = max(worst, abs(reference_pressure_ratio(cfg) - n))
        return CheckResult.at_most('air_reference_ratio', worst, 1e-12)

    def _covariant_values(self):
        runner = CovariantChecksRunner(self.constants)
        params = {'n': 1.5, 'E0': 1.0, 'omega': 2.0 * math.pi * self.constants.c / 1e-6, 'grid_fraction': 0.02}
        return runner.evaluate(params, (MomentumTag.MINKOWSKI,))

    def check_divergence_convergence(self) -> CheckResult:
        ratio = self._covariant_values()['convergence_ratio']
        return CheckResult.at_most('divergence_convergence', abs(ratio - CONVERGENCE_TARGET) / CONVERGENCE_TARGET,
                                   CONVERGENCE_BAND, f"ratio {ratio:.4f}")

    def check_divergence_control(self) -> CheckResult:
        ratio = self._covariant_values()['control_convergence_ratio']
        return CheckResult.above('divergence_control', abs(ratio - CONVERGENCE_TARGET) / CONVERGENCE_TARGET,
                                 CONVERGENCE_BAND, f"non-Maxwellian field ratio {ratio:.4f}")

    def check_momentum_ledger(self) -> CheckResult:
        rng = np.random.default_rng(LEDGER_SEED)
        worst = 0.0
        for _ in range(LEDGER_POINTS):
            medium = Medium.from_index(float(rng.uniform(1.0, 2.5)))
            fp = FieldPoint.from_medium(rng.normal(size=3), rng.normal(size=3), medium, self.constants)
            g_A = momentum_density(fp, MomentumTag.ABRAHAM, self.constants)
            g_M = momentum_density(fp, MomentumTag.MINKOWSKI, self.constants)
            g_mech = mechanical_momentum_density(medium, fp, self.constants)
            scale = float(np.max(np.abs(g_M)))
            if scale == 0.0:
                continue
            worst = max(worst,
                        float(np.max(np.abs(g_A + g_mech - g_M))) / scale,
                        float(np.max(np.abs(medium.n ** 2 * g_A - g_M))) / scale)
        return CheckResult.at_most('momentum_ledger', worst, 1e-12, f"{LEDGER_POINTS} random field points")

    def check_abraham_nulling(self) -> CheckResult:
        wave = _plane_wave(1.5, self.constants)
        dt = wave.period / SAMPLES_PER_PERIOD
        origin = np.zeros(3)
        samples = [(i * dt, abraham_term(wave.medium, wave.poynting_rate(origin, i * dt), self.constants))
                   for i in range(NULLING_PERIODS * SAMPLES_PER_PERIOD)]
        peak = max(float(np.max(np.abs(value))) for _, value in samples)
        mean = time_average(samples, wave.period)
        return CheckResult.at_most('abraham_nulling', float(np.max(np.abs(mean))) / peak, 1e-9,
                                   f"{NULLING_PERIODS} periods")

    def check_rest_frame_reduction(self) -> CheckResult:
        return CheckResult.at_most('rest_frame_reduction', self._covariant_values()['rest_frame_residual'], 1e-12)

    def check_four_momentum_classes(self) -> CheckResult:
        dense = classify_four_momentum(plane_wave_four_momentum(_plane_wave(1.5, self.constants), MomentumTag.MINKOWSKI),
                                       self.constants)
        vacuum = classify_four_momentum(plane_wave_four_momentum(_plane_wave(1.0, self.constants), MomentumTag.MINKOWSKI),
                                        self.constants)
        passed = dense is FourMomentumClass.SPACELIKE and vacuum is FourMomentumClass.NULL
        return CheckResult('four_momentum_classes', 0.0 if passed else 1.0, 0.0, passed,
                           f"n=1.5: {dense.value}, n=1: {vacuum.value}")

    def check_sphere_trajectory(self) -> CheckResult:
        runner = SphereKickRunner(self.constants)
        params = {'M': 1e-10, 'a': 25e-6, 'delta_G': 8.1e-12, 'H': 5.9e-6, 'n': 1.33, 'mu': 8.9e-4,
                  'n0': 1.0, 'mu0': 1.8e-5, 'L0': 300e-6}
        worst = 0.0
        for t in (1e-7, 1e-6, 1e-5):
            values = runner.evaluate({**params, 't': t}, (MomentumTag.ABRAHAM, MomentumTag.MINKOWSKI))
            worst = max(worst, values['trajectory_abraham_residual'], values['trajectory_minkowski_residual'])
        return CheckResult.at_most('sphere_trajectory', worst, self.tolerance)

    def check_wgm_volume_integral(self) -> CheckResult:
        cfg = TorqueConfig(a=100e-6, P0=100.0, omega0=1000.0)
        t = 0.4e-3
        closed = wgm_torque(cfg, t, MomentumTag.ABRAHAM, self.constants).torque
        integral = wgm_torque_volume_integral(cfg, t, constants=self.constants)
        return CheckResult.at_most('wgm_volume_integral', abs(integral - closed) / abs(closed), self.tolerance)
