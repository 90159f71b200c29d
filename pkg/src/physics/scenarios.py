"""Predictions for the radiation-optics experiments and the two proposed ones.

Each operation works from an immutable config and returns Abraham- and/or
Minkowski-tagged values in SI units.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.integrate import quad, solve_ivp

from .constants import PhysicalConstants, DEFAULT_CONSTANTS
from .em_core import abraham_term, momentum_density, time_average
from .errors import PreconditionError, QuadratureError
from .types import Medium, MomentumTag, PlaneWave

logger = logging.getLogger(__name__)

DEFAULT_MAX_K_OVER_ALPHA = 0.2
DEFAULT_WGM_INDEX = 1.45

_AVERAGING_SAMPLES = 64
# alpha*x at which the metal integral is truncated; e^(-2*50) is far below any tolerance
_METAL_DEPTH_CUTOFF = 50.0


# ---------------------------------------------------------------------------
# Immersed mirror
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MirrorConfig:
    """Plane wave in a liquid reflected at normal incidence by a good conductor"""
    medium: Medium
    E0: float
    omega: float
    conductivity: float
    max_k_over_alpha: float = DEFAULT_MAX_K_OVER_ALPHA
    constants: PhysicalConstants = DEFAULT_CONSTANTS

    def __post_init__(self):
        if not self.omega > 0:
            raise PreconditionError('omega', self.omega, '> 0')
        if not self.conductivity > 0:
            raise PreconditionError('conductivity', self.conductivity, '> 0')
        if self.E0 < 0:
            raise PreconditionError('E0', self.E0, '>= 0')

    @property
    def alpha(self) -> float:
        """Skin attenuation constant sqrt(mu0 sigma omega / 2)"""
        return math.sqrt(self.constants.mu0 * self.conductivity * self.omega / 2.0)

    @property
    def k(self) -> float:
        return self.medium.n * self.omega / self.constants.c

    @property
    def k_over_alpha(self) -> float:
        return self.k / self.alpha

    @property
    def reflectance(self) -> float:
        return 1.0 - 2.0 * self.k_over_alpha

    @property
    def phase(self) -> float:
        return math.atan(-self.k_over_alpha)

    def incident_wave(self) -> PlaneWave:
        return PlaneWave(
            E0=self.E0,
            omega=self.omega,
            direction=np.array([1.0, 0.0, 0.0]),
            polarization=np.array([0.0, 1.0, 0.0]),
            medium=self.medium,
            constants=self.constants,
        )

    @property
    def incident_flux(self) -> float:
        """Time-averaged incident Poynting flux in the liquid"""
        return self.incident_wave().intensity

    def require_good_conductor(self) -> None:
        if not self.k_over_alpha < self.max_k_over_alpha:
            raise PreconditionError('k/alpha', self.k_over_alpha, f"< {self.max_k_over_alpha}",
                                    "good-conductor approximation breaks down")


@dataclass(frozen=True)
class MirrorPressure:
    pressure: float
    reflectance: float
    phase: float


@dataclass(frozen=True)
class MetalFieldSample:
    E_y: complex
    H_z: complex
    x: float


def momentum_flux_pressure(n: float, reflectance: float, incident_flux: float,
                           constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    return n / constants.c * (1.0 + reflectance) * incident_flux


def mirror_pressure_flux(cfg: MirrorConfig) -> MirrorPressure:
    cfg.require_good_conductor()
    pressure = momentum_flux_pressure(cfg.medium.n, cfg.reflectance, cfg.incident_flux, cfg.constants)
    return MirrorPressure(pressure=pressure, reflectance=cfg.reflectance, phase=cfg.phase)


def reference_pressure_ratio(cfg: MirrorConfig) -> float:
    """Pressure relative to the same flux and reflectance in air (n = 1)"""
    in_liquid = mirror_pressure_flux(cfg).pressure
    in_air = momentum_flux_pressure(1.0, cfg.reflectance, cfg.incident_flux, cfg.constants)
    return in_liquid / in_air


def metal_fields(cfg: MirrorConfig, x: float) -> MetalFieldSample:
    """Complex E_y and H_z inside the metal at depth x, t = 0"""
    if x < 0:
        raise PreconditionError('x', x, '>= 0', "fields are defined inside the metal only")
    ratio = cfg.k_over_alpha
    propagator = math.exp(-cfg.alpha * x) * cmath.exp(1j * cfg.alpha * x)
    E_y = cfg.k * cfg.E0 / cfg.alpha * (1 - 1j) * propagator
    H_z = cfg.k * cfg.E0 / (cfg.constants.mu0 * cfg.omega) * (2 + (1j - 1) * ratio) * propagator
    return MetalFieldSample(E_y=E_y, H_z=H_z, x=x)


def mirror_pressure_lorentz(cfg: MirrorConfig, quadrature_tol: float = 1e-8) -> float:
    """Integrated Lorentz force density on the conduction current in the metal"""
    cfg.require_good_conductor()
    if not quadrature_tol > 0:
        raise PreconditionError('quadrature_tol', quadrature_tol, '> 0')
    if cfg.E0 == 0:
        return 0.0

    alpha = cfg.alpha

    def integrand(u: float) -> float:
        sample = metal_fields(cfg, u / alpha)
        return (sample.E_y * sample.H_z.conjugate()).real / alpha

    result = quad(integrand, 0.0, _METAL_DEPTH_CUTOFF, epsabs=0.0, epsrel=quadrature_tol,
                  limit=200, full_output=1)
    if len(result) > 3:
        value, abserr, _, message = result
        logger.error(f"Lorentz-force quadrature failed: {message} (estimate {value:.6e} +/- {abserr:.3e})")
        raise QuadratureError(f"Quadrature did not reach relative tolerance {quadrature_tol}: {message}")
    value, abserr, info = result
    logger.debug(f"Lorentz-force quadrature: {value:.12e} +/- {abserr:.3e} in {info['neval']} evaluations")
    return 0.5 * cfg.constants.mu0 * cfg.conductivity * value


def incident_momentum_flux(cfg: MirrorConfig) -> float:
    """S_xx of the incident wave as c g_x / n, g_x the period-averaged Minkowski density"""
    wave = cfg.incident_wave()
    dt = wave.period / _AVERAGING_SAMPLES
    origin = np.zeros(3)
    samples = [
        (i * dt, momentum_density(wave.fields_at(origin, i * dt), MomentumTag.MINKOWSKI, cfg.constants))
        for i in range(_AVERAGING_SAMPLES)
    ]
    g_x = time_average(samples, wave.period)[0]
    return cfg.constants.c * g_x / cfg.medium.n


def mirror_pressure_divergence(cfg: MirrorConfig) -> float:
    cfg.require_good_conductor()
    incident = incident_momentum_flux(cfg)
    reflected = cfg.medium.n * cfg.reflectance * cfg.incident_flux / cfg.constants.c
    return incident + reflected


# ---------------------------------------------------------------------------
# Photon momentum: drag, BEC recoil, fiber exit
# ---------------------------------------------------------------------------

def photon_momentum(n: float, omega: float, tag: MomentumTag,
                    constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    if tag is MomentumTag.MINKOWSKI:
        return constants.hbar * n * omega / constants.c
    return constants.hbar * omega / (n * constants.c)


@dataclass(frozen=True)
class DragConfig:
    intensity: float
    sigma_a: float
    omega: float
    n: float

    def __post_init__(self):
        for name in ('intensity', 'sigma_a', 'omega', 'n'):
            value = getattr(self, name)
            if not value > 0:
                raise PreconditionError(name, value, '> 0')


def photon_drag_field(cfg: DragConfig, tag: MomentumTag,
                      constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Longitudinal field balancing the photon momentum delivered per carrier"""
    p = photon_momentum(cfg.n, cfg.omega, tag, constants)
    return cfg.intensity * cfg.sigma_a * p / (constants.hbar * cfg.omega * constants.e_charge)


def bec_recoil(n: float, omega: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    return photon_momentum(n, omega, MomentumTag.MINKOWSKI, constants)


def fiber_exit_impulse(pulse_energy: float, n: float,
                       constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Momentum released along the fiber axis when a pulse leaves into vacuum"""
    if pulse_energy < 0:
        raise PreconditionError('pulse_energy', pulse_energy, '>= 0')
    return (n - 1.0) * pulse_energy / constants.c


# ---------------------------------------------------------------------------
# Whispering-gallery torque
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TorqueConfig:
    a: float
    P0: float
    omega0: float
    n: float = DEFAULT_WGM_INDEX

    def __post_init__(self):
        if not self.a > 0:
            raise PreconditionError('a', self.a, '> 0')
        if self.P0 < 0:
            raise PreconditionError('P0', self.P0, '>= 0')
        if not self.omega0 > 0:
            raise PreconditionError('omega0', self.omega0, '> 0')
        if self.n < 1:
            raise PreconditionError('n', self.n, '>= 1')


@dataclass(frozen=True)
class WgmTorque:
    torque: float
    amplitude: float


def wgm_torque(cfg: TorqueConfig, t: float, tag: MomentumTag = MomentumTag.ABRAHAM,
               constants: PhysicalConstants = DEFAULT_CONSTANTS) -> WgmTorque:
    """Azimuthal torque on a cylinder carrying an intensity-modulated rim mode"""
    if tag is MomentumTag.MINKOWSKI:
        return WgmTorque(torque=0.0, amplitude=0.0)
    amplitude = (cfg.n ** 2 - 1.0) / constants.c2 * 2.0 * math.pi * cfg.a ** 2 * cfg.omega0 * cfg.P0
    return WgmTorque(torque=-amplitude * math.sin(cfg.omega0 * t), amplitude=amplitude)


def wgm_torque_volume_integral(cfg: TorqueConfig, t: float, rim_fraction: float = 1e-7,
                               constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Torque from integrating the Abraham force density over a thin rim annulus.

    The circulating power flows uniformly through an annulus [a - w, a] of
    unit height, w = rim_fraction * a; the result tends to the closed form
    as rim_fraction -> 0 with relative error ~ rim_fraction.
    """
    if not 0 < rim_fraction < 1:
        raise PreconditionError('rim_fraction', rim_fraction, 'in (0, 1)')
    width = rim_fraction * cfg.a
    height = 1.0
    medium = Medium.from_index(cfg.n)
    dS_phi_dt = -cfg.omega0 * cfg.P0 * math.sin(cfg.omega0 * t) / (width * height)
    f_phi = abraham_term(medium, (0.0, dS_phi_dt, 0.0), constants)[1]
    moment, _ = quad(lambda r: r * r, cfg.a - width, cfg.a, epsabs=0.0, epsrel=1e-12)
    return 2.0 * math.pi * height * f_phi * moment


# ---------------------------------------------------------------------------
# Microsphere kick in a viscous fluid
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SphereKickConfig:
    M: float
    a: float
    delta_G: float
    pulse_energy: float
    fluid: Medium
    reference_fluid: Medium = field(default_factory=lambda: Medium(eps_r=1.0, viscosity=1.8e-5))
    L0: Optional[float] = None

    def __post_init__(self):
        if not self.M > 0:
            raise PreconditionError('M', self.M, '> 0')
        if not self.a > 0:
            raise PreconditionError('a', self.a, '> 0')
        if self.pulse_energy < 0:
            raise PreconditionError('pulse_energy', self.pulse_energy, '>= 0')
        for name in ('fluid', 'reference_fluid'):
            if getattr(self, name).viscosity is None:
                raise ValueError(f"{name} must carry a viscosity for the Stokes drag")
        if self.L0 is not None and not self.L0 > 0:
            raise PreconditionError('L0', self.L0, '> 0')


@dataclass(frozen=True)
class KickState:
    velocity: float
    displacement: float


def pulse_momentum(pulse_energy: float, n: float, tag: MomentumTag,
                   constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    if tag is MomentumTag.MINKOWSKI:
        return n * pulse_energy / constants.c
    return pulse_energy / (n * constants.c)


def _stokes_coefficient(cfg: SphereKickConfig, fluid: Medium) -> float:
    return 6.0 * math.pi * fluid.viscosity * cfg.a


def sphere_kick_vmax(cfg: SphereKickConfig, tag: MomentumTag,
                     constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    return (cfg.delta_G + pulse_momentum(cfg.pulse_energy, cfg.fluid.n, tag, constants)) / cfg.M


def total_displacement(cfg: SphereKickConfig, tag: MomentumTag,
                       constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    return cfg.M * sphere_kick_vmax(cfg, tag, constants) / _stokes_coefficient(cfg, cfg.fluid)


def sphere_kick_trajectory(cfg: SphereKickConfig, tag: MomentumTag, t: float,
                           constants: PhysicalConstants = DEFAULT_CONSTANTS) -> KickState:
    """Stokes-damped motion after the kick, t = 0 at maximum velocity"""
    if t < 0:
        raise PreconditionError('t', t, '>= 0')
    rate = _stokes_coefficient(cfg, cfg.fluid) / cfg.M
    decay = math.exp(-rate * t)
    return KickState(
        velocity=sphere_kick_vmax(cfg, tag, constants) * decay,
        displacement=total_displacement(cfg, tag, constants) * -math.expm1(-rate * t),
    )


def sphere_kick_trajectory_numeric(cfg: SphereKickConfig, tag: MomentumTag, t: float,
                                   constants: PhysicalConstants = DEFAULT_CONSTANTS,
                                   rtol: float = 1e-11) -> KickState:
    """Same motion from integrating M dv/dt = -6 pi mu a v numerically"""
    if t < 0:
        raise PreconditionError('t', t, '>= 0')
    v_max = sphere_kick_vmax(cfg, tag, constants)
    if t == 0:
        return KickState(velocity=v_max, displacement=0.0)
    rate = _stokes_coefficient(cfg, cfg.fluid) / cfg.M
    scale = max(abs(v_max), np.finfo(float).tiny)

    def rhs(_, state):
        return [-rate * state[0], state[0]]

    solution = solve_ivp(rhs, (0.0, t), [v_max, 0.0], method='DOP853', rtol=rtol,
                         atol=[scale * rtol, scale * rtol / rate])
    if not solution.success:
        raise RuntimeError(f"Trajectory integration failed: {solution.message}")
    return KickState(velocity=float(solution.y[0, -1]), displacement=float(solution.y[1, -1]))


def kick_correction_scale(cfg: SphereKickConfig, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """H / (6 pi a c L0 mu0): relative weight of the photon term against the reference track"""
    if cfg.L0 is None:
        raise ValueError("A reference displacement L0 is required")
    return cfg.pulse_energy / (_stokes_coefficient(cfg, cfg.reference_fluid) * constants.c * cfg.L0)


def displacement_ratio(cfg: SphereKickConfig, tag: MomentumTag,
                       constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """L / L0 with the ablation momentum eliminated through the reference run.

    Assumes delta_G depends only on the absorbed pulse energy, identical in
    both fluids.
    """
    if cfg.L0 is None:
        raise ValueError("A reference displacement L0 is required")
    reference_drag = _stokes_coefficient(cfg, cfg.reference_fluid)
    photon_shift = (pulse_momentum(cfg.pulse_energy, cfg.fluid.n, tag, constants)
                    - pulse_momentum(cfg.pulse_energy, cfg.reference_fluid.n, tag, constants))
    viscosity_ratio = cfg.reference_fluid.viscosity / cfg.fluid.viscosity
    return viscosity_ratio * (1.0 + photon_shift / (reference_drag * cfg.L0))
