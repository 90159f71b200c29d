"""Four-tensor form of the Minkowski formalism.

Conventions: x_4 = ict and V_mu V_mu = -c^2. Every tensor is stored as a real
4x4 array in which an entry carrying a factor i (one per index equal to 4) is
stored with that factor removed. Contractions over an index then pick up the
metric ETA = diag(1, 1, 1, -1), which reproduces the imaginary-coordinate
algebra exactly without complex arithmetic.

Internally the excitation uses eps0 = mu0 = 1 units: D_n = D/eps0 and
H_n = mu0*H, so that D_n = eps*E and B = mu*H_n at rest. Every quantity built
from the pair (F, H) is then mu0 times its SI value; the EMTensor4 accessors
undo that factor.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Tuple

import numpy as np

from .constants import PhysicalConstants, DEFAULT_CONSTANTS
from .em_core import energy_density, momentum_density, time_average
from .errors import PreconditionError
from .types import FieldPoint, MomentumTag, PlaneWave, as_vector

logger = logging.getLogger(__name__)

ETA = np.diag([1.0, 1.0, 1.0, -1.0])

_NORM_RTOL = 1e-12
_AVERAGING_SAMPLES = 64

# (row, column) of the spatial entry holding component l of an axial vector
_AXIAL_SLOTS = ((1, 2), (2, 0), (0, 1))


def _antisymmetric(axial: np.ndarray, polar: np.ndarray, c: float) -> np.ndarray:
    """Real storage of a tensor with X_ik = a_l (cyclic) and X_4k = (i/c) p_k"""
    arr = np.zeros((4, 4))
    for l, (i, k) in enumerate(_AXIAL_SLOTS):
        arr[i, k] = axial[l]
        arr[k, i] = -axial[l]
    arr[3, :3] = polar / c
    arr[:3, 3] = -polar / c
    return arr


def _split_antisymmetric(arr: np.ndarray, c: float) -> Tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(arr, dtype=float)
    if arr.shape != (4, 4):
        raise ValueError(f"Expected a 4x4 array, got shape {arr.shape}")
    if not np.array_equal(arr, -arr.T):
        raise ValueError("Field and excitation tensors must be antisymmetric")
    axial = np.array([arr[i, k] for i, k in _AXIAL_SLOTS])
    polar = arr[3, :3] * c
    return axial, polar


@dataclass(frozen=True, eq=False)
class FourVelocity:
    """Real storage (V_1, V_2, V_3, V_4 / i)"""
    V: np.ndarray
    c: float = DEFAULT_CONSTANTS.c

    def __post_init__(self):
        V = np.asarray(self.V, dtype=float)
        if V.shape != (4,):
            raise ValueError(f"Four-velocity must have 4 components, got shape {V.shape}")
        norm = float(V @ ETA @ V)
        if abs(norm + self.c ** 2) > _NORM_RTOL * self.c ** 2:
            raise PreconditionError('V_mu V_mu', norm, f"== -c^2 ({-self.c ** 2:.6g})", "four-velocity not normalized")
        object.__setattr__(self, 'V', V)

    @property
    def velocity(self) -> np.ndarray:
        return self.V[:3] * self.c / self.V[3]


def four_velocity(v=(0.0, 0.0, 0.0), constants: PhysicalConstants = DEFAULT_CONSTANTS) -> FourVelocity:
    v = as_vector(v, 'v')
    beta2 = float(np.dot(v, v)) / constants.c2
    if beta2 >= 1.0:
        raise PreconditionError('|v|/c', math.sqrt(beta2), '< 1')
    gamma = 1.0 / math.sqrt(1.0 - beta2)
    return FourVelocity(V=np.append(gamma * v, gamma * constants.c), c=constants.c)


@dataclass(frozen=True, eq=False)
class FieldTensor4:
    """F_mu_nu, held as its E and B content"""
    E: np.ndarray
    B: np.ndarray
    c: float = DEFAULT_CONSTANTS.c

    @property
    def array(self) -> np.ndarray:
        return _antisymmetric(self.B, self.E, self.c)

    @classmethod
    def from_array(cls, arr, c: float = DEFAULT_CONSTANTS.c) -> 'FieldTensor4':
        B, E = _split_antisymmetric(arr, c)
        return cls(E=E, B=B, c=c)


@dataclass(frozen=True, eq=False)
class ExcitationTensor4:
    """H_mu_nu in eps0 = mu0 = 1 units: D_n = D/eps0, H_n = mu0 H"""
    D: np.ndarray
    H: np.ndarray
    c: float = DEFAULT_CONSTANTS.c

    @property
    def array(self) -> np.ndarray:
        return _antisymmetric(self.H, self.D, self.c)

    @classmethod
    def from_array(cls, arr, c: float = DEFAULT_CONSTANTS.c) -> 'ExcitationTensor4':
        H, D = _split_antisymmetric(arr, c)
        return cls(D=D, H=H, c=c)

    @classmethod
    def from_si(cls, D, H, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> 'ExcitationTensor4':
        return cls(D=as_vector(D, 'D') / constants.eps0, H=as_vector(H, 'H') * constants.mu0, c=constants.c)

    def to_si(self, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> Tuple[np.ndarray, np.ndarray]:
        return self.D * constants.eps0, self.H / constants.mu0


@dataclass(frozen=True, eq=False)
class EMTensor4:
    """Minkowski S_mu_nu in internal units, with SI accessors"""
    array: np.ndarray
    constants: PhysicalConstants = DEFAULT_CONSTANTS

    @property
    def si_array(self) -> np.ndarray:
        return self.array / self.constants.mu0

    def stress(self) -> np.ndarray:
        return self.si_array[:3, :3]

    def poynting(self) -> np.ndarray:
        """From S_4k = (i/c) S_k"""
        return self.si_array[3, :3] * self.constants.c

    def momentum(self) -> np.ndarray:
        """From S_k4 = i c g_k"""
        return self.si_array[:3, 3] / self.constants.c

    def energy(self) -> float:
        """S_44 = -w, stored without its factor i^2"""
        return float(self.si_array[3, 3])

    def is_symmetric(self, rtol: float = 1e-12) -> bool:
        scale = max(float(np.max(np.abs(self.array))), np.finfo(float).tiny)
        return bool(np.max(np.abs(self.array - self.array.T)) <= rtol * scale)


class FourMomentumClass(str, Enum):
    TIMELIKE = 'timelike'
    SPACELIKE = 'spacelike'
    NULL = 'null'


@dataclass(frozen=True, eq=False)
class FourMomentum:
    G: np.ndarray
    W: float

    def __post_init__(self):
        object.__setattr__(self, 'G', as_vector(self.G, 'G'))


def field_tensor_from_EB(E, B, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> FieldTensor4:
    return FieldTensor4(E=as_vector(E, 'E'), B=as_vector(B, 'B'), c=constants.c)


def normalize_fields(fp: FieldPoint,
                     constants: PhysicalConstants = DEFAULT_CONSTANTS) -> Tuple[FieldTensor4, ExcitationTensor4]:
    """SI field point -> (F, H) pair in internal units"""
    return field_tensor_from_EB(fp.E, fp.B, constants), ExcitationTensor4.from_si(fp.D, fp.H, constants)


def excitation_from_constitutive(F: FieldTensor4, V: FourVelocity, n: float, mu_r: float,
                                 constants: PhysicalConstants = DEFAULT_CONSTANTS) -> ExcitationTensor4:
    """Moving-medium constitutive relation solved for H_mu_nu:

        mu H = F - ((n^2 - 1)/c^2) (F_mu_a V_nu - F_nu_a V_mu) V_a
    """
    if not isinstance(V, FourVelocity):
        V = FourVelocity(V=V, c=constants.c)
    if not mu_r > 0:
        raise PreconditionError('mu_r', mu_r, '> 0')
    f = F.array
    u = f @ ETA @ V.V
    coupling = (n * n - 1.0) / constants.c2
    h = (f - coupling * (np.outer(u, V.V) - np.outer(V.V, u))) / mu_r
    return ExcitationTensor4.from_array(h, constants.c)


def minkowski_tensor4(F: FieldTensor4, H: ExcitationTensor4,
                      constants: PhysicalConstants = DEFAULT_CONSTANTS) -> EMTensor4:
    """S_mu_nu = F_mu_a H_nu_a - (1/4) delta_mu_nu F_ab H_ab.

    The trace term carries 1/4 for a sum over all ordered index pairs, which
    is the normalization that reduces the spatial block to the rest-frame
    stress tensor.
    """
    f = F.array
    h = H.array
    invariant = float(np.einsum('ab,ab,a,b->', f, h, np.diag(ETA), np.diag(ETA)))
    return EMTensor4(array=f @ ETA @ h.T - 0.25 * invariant * ETA, constants=constants)


Sampler = Callable[[np.ndarray], Tuple[FieldTensor4, ExcitationTensor4]]


def divergence_residual(field_sampler: Sampler, point, grid_step: float,
                        constants: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    """Central-difference estimate of d_nu S_mu_nu at point = (x, y, z, t).

    x_4 = ict makes d_4 S_mu4 equal to d_(ct) of the stored entry, so the
    time direction is differenced with step grid_step / c and shares the
    spatial stencil. Returned in SI (rows 1-3: N/m^3, row 4: W/m^3 / c).
    """
    if not grid_step > 0:
        raise PreconditionError('grid_step', grid_step, '> 0')
    point = np.asarray(point, dtype=float)
    if point.shape != (4,):
        raise ValueError(f"Spacetime point must have 4 components, got shape {point.shape}")

    steps = np.array([grid_step, grid_step, grid_step, grid_step / constants.c])
    residual = np.zeros(4)
    for nu in range(4):
        offset = np.zeros(4)
        offset[nu] = steps[nu]
        forward = minkowski_tensor4(*field_sampler(point + offset), constants=constants).si_array
        backward = minkowski_tensor4(*field_sampler(point - offset), constants=constants).si_array
        residual += (forward[:, nu] - backward[:, nu]) / (2.0 * grid_step)
    return residual


def convergence_ratio(field_sampler: Sampler, point, grid_step: float,
                      constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """|R(h)| / |R(h/2)|; close to 4 for a second-order consistent sampler"""
    coarse = np.linalg.norm(divergence_residual(field_sampler, point, grid_step, constants))
    fine = np.linalg.norm(divergence_residual(field_sampler, point, 0.5 * grid_step, constants))
    logger.debug(f"divergence residual: h={grid_step:.3e} -> {coarse:.3e}, h/2 -> {fine:.3e}")
    if fine == 0.0:
        return math.inf if coarse > 0 else 1.0
    return float(coarse / fine)


def plane_wave_sampler(wave: PlaneWave, dispersion_factor: float = 1.0) -> Sampler:
    """Analytic (F, H) sampler for a plane wave.

    A dispersion_factor other than 1 scales the wavenumber away from n*omega/c
    while keeping the amplitude relations, producing fields that violate
    Maxwell's equations.
    """
    k = wave.k * dispersion_factor
    E_amp = wave.E0 * wave.polarization
    H_amp = wave.H0 * wave.magnetic_direction

    def sample(point: np.ndarray) -> Tuple[FieldTensor4, ExcitationTensor4]:
        phase = k * float(np.dot(wave.direction, point[:3])) - wave.omega * point[3]
        amplitude = math.cos(phase)
        fp = FieldPoint.from_medium(amplitude * E_amp, amplitude * H_amp, wave.medium, wave.constants)
        return normalize_fields(fp, wave.constants)

    return sample


def classify_four_momentum(p: FourMomentum, constants: PhysicalConstants = DEFAULT_CONSTANTS,
                           rtol: float = 1e-9) -> FourMomentumClass:
    spatial = constants.c2 * float(np.dot(p.G, p.G))
    temporal = p.W ** 2
    scale = max(spatial, temporal)
    interval = spatial - temporal
    if scale == 0.0 or abs(interval) <= rtol * scale:
        return FourMomentumClass.NULL
    return FourMomentumClass.SPACELIKE if interval > 0 else FourMomentumClass.TIMELIKE


def plane_wave_four_momentum(wave: PlaneWave, tag: MomentumTag) -> FourMomentum:
    """Per-volume momentum and energy of a plane-wave pulse, averaged over one period"""
    dt = wave.period / _AVERAGING_SAMPLES
    origin = np.zeros(3)
    fields = [(i * dt, wave.fields_at(origin, i * dt)) for i in range(_AVERAGING_SAMPLES)]
    G = time_average([(t, momentum_density(fp, tag, wave.constants)) for t, fp in fields], wave.period)
    W = time_average([(t, energy_density(fp)) for t, fp in fields], wave.period)
    return FourMomentum(G=G, W=float(W))
