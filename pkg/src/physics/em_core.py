"""Rest-frame 3+1 electromagnetic quantities and force densities, SI units.

Stress tensor, Poynting vector and energy density are shared by the Abraham
and Minkowski formalisms; only the momentum density differs.
"""
import logging
import math
from typing import Sequence, Tuple, Union

import numpy as np
from scipy.integrate import trapezoid

from .constants import PhysicalConstants, DEFAULT_CONSTANTS
from .errors import PreconditionError
from .types import EMQuantities, FieldPoint, Medium, MomentumTag, SourceDensities, as_vector

logger = logging.getLogger(__name__)

Value = Union[float, np.ndarray]

# Relative spacing jitter accepted by time_average
_SPACING_RTOL = 1e-9


def poynting(fp: FieldPoint) -> np.ndarray:
    return np.cross(fp.E, fp.H)


def momentum_density(fp: FieldPoint, tag: MomentumTag,
                     constants: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    if tag is MomentumTag.MINKOWSKI:
        return np.cross(fp.D, fp.B)
    if tag is MomentumTag.ABRAHAM:
        return np.cross(fp.E, fp.H) / constants.c2
    raise ValueError(f"Unsupported momentum tag: {tag!r}")


def energy_density(fp: FieldPoint) -> float:
    return 0.5 * (float(np.dot(fp.E, fp.D)) + float(np.dot(fp.H, fp.B)))


def stress_tensor(fp: FieldPoint) -> np.ndarray:
    stress = -np.outer(fp.E, fp.D) - np.outer(fp.H, fp.B)
    return stress + np.eye(3) * energy_density(fp)


def em_quantities(fp: FieldPoint, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> EMQuantities:
    w = energy_density(fp)
    if w < 0:
        raise ValueError(f"Energy density must be non-negative, got {w}")
    return EMQuantities(
        S=poynting(fp),
        w=w,
        g_A=momentum_density(fp, MomentumTag.ABRAHAM, constants),
        g_M=momentum_density(fp, MomentumTag.MINKOWSKI, constants),
        stress=stress_tensor(fp),
    )


def minkowski_force_density(src: SourceDensities, fp: FieldPoint, grad_eps, grad_mu,
                            constants: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    grad_eps = as_vector(grad_eps, 'grad_eps')
    grad_mu = as_vector(grad_mu, 'grad_mu')
    E2 = float(np.dot(fp.E, fp.E))
    H2 = float(np.dot(fp.H, fp.H))
    return (
        src.rho * fp.E
        + np.cross(src.J, fp.B)
        - 0.5 * constants.eps0 * E2 * grad_eps
        - 0.5 * constants.mu0 * H2 * grad_mu
    )


def abraham_minkowski_force(fp: FieldPoint, grad_n2,
                            constants: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    """Gradient force -(eps0/2) E^2 grad(n^2), common to both formalisms"""
    grad_n2 = as_vector(grad_n2, 'grad_n2')
    return -0.5 * constants.eps0 * float(np.dot(fp.E, fp.E)) * grad_n2


def abraham_term(medium: Medium, dS_dt, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    medium.require_nonmagnetic('abraham_term')
    dS_dt = as_vector(dS_dt, 'dS_dt')
    return (medium.n ** 2 - 1.0) / constants.c2 * dS_dt


def abraham_force_density(medium: Medium, fp: FieldPoint, grad_n2, dS_dt,
                          constants: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    medium.require_nonmagnetic('abraham_force_density')
    return abraham_minkowski_force(fp, grad_n2, constants) + abraham_term(medium, dS_dt, constants)


def mechanical_momentum_density(medium: Medium, fp: FieldPoint,
                                constants: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    """Momentum the Abraham term deposits in the medium, travelling with the wave"""
    medium.require_nonmagnetic('mechanical_momentum_density')
    return (medium.n ** 2 - 1.0) / constants.c2 * np.cross(fp.E, fp.H)


def time_average(samples: Sequence[Tuple[float, Value]], period: float) -> Value:
    """Mean of uniformly spaced samples over an integer number of periods.

    When the period holds a whole number of steps the rectangle rule is used,
    which is exact for trigonometric signals; each sample then stands for
    [t_i, t_i + dt) and N samples cover N*dt. Otherwise the trapezoid rule runs
    between sample instants up to the last complete period, interpolating the
    end, and N samples cover (N - 1)*dt. Either coverage must reach one period.
    """
    if not period > 0:
        raise PreconditionError('period', period, '> 0')
    if len(samples) < 2:
        raise PreconditionError('sample count', len(samples), '>= 2')

    times = np.array([float(t) for t, _ in samples])
    values = np.array([np.asarray(v, dtype=float) for _, v in samples])

    steps = np.diff(times)
    dt = float(steps[0])
    if not dt > 0:
        raise ValueError("Sample times must be strictly increasing")
    if np.max(np.abs(steps - dt)) > _SPACING_RTOL * dt:
        raise ValueError(f"Samples are not uniformly spaced (max deviation {np.max(np.abs(steps - dt)):.3e} s)")

    per_period = period / dt
    whole_steps = round(per_period)
    commensurate = whole_steps >= 1 and abs(per_period - whole_steps) <= _SPACING_RTOL * per_period
    coverage = len(times) * dt if commensurate else float(times[-1] - times[0])
    if coverage < period * (1.0 - _SPACING_RTOL):
        raise PreconditionError('sample span', coverage, f">= one period ({period:.6g} s)")

    if commensurate:
        count = (len(times) // whole_steps) * whole_steps
        logger.debug(f"time_average: rectangle rule over {count // whole_steps} period(s), {count} samples")
        return values[:count].mean(axis=0)

    periods = max(1, math.floor(coverage / period))
    t_end = min(times[0] + periods * period, float(times[-1]))
    inside = times <= t_end
    t_used = times[inside]
    v_used = values[inside]
    if t_used[-1] < t_end:
        j = len(t_used)
        weight = (t_end - times[j - 1]) / (times[j] - times[j - 1])
        v_end = values[j - 1] + weight * (values[j] - values[j - 1])
        t_used = np.append(t_used, t_end)
        v_used = np.concatenate([v_used, np.asarray(v_end)[np.newaxis, ...]], axis=0)
    logger.debug(f"time_average: trapezoid rule over {periods} period(s)")
    return trapezoid(v_used, t_used, axis=0) / (t_end - times[0])


def interface_pressure(E_t: float, n_from: float, n_to: float,
                       constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Integrated gradient force across a thin index transition at normal incidence.

    Positive values push toward the n_to side.
    """
    return 0.5 * constants.eps0 * E_t ** 2 * (n_from ** 2 - n_to ** 2)
