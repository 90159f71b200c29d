import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .constants import PhysicalConstants, DEFAULT_CONSTANTS
from .errors import PreconditionError

logger = logging.getLogger(__name__)

_INDEX_RTOL = 1e-12
_UNIT_TOL = 1e-12


def as_vector(value, name: str = "vector") -> np.ndarray:
    """Coerce a 3-vector-like input to a float array of shape (3,)"""
    vec = np.asarray(value, dtype=float)
    if vec.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector, got shape {vec.shape}")
    if not np.all(np.isfinite(vec)):
        raise ValueError(f"{name} must be finite, got {vec}")
    return vec


class MomentumTag(str, Enum):
    ABRAHAM = 'abraham'
    MINKOWSKI = 'minkowski'

    @classmethod
    def parse(cls, text: str) -> 'MomentumTag':
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"Unknown momentum tag: {text!r} (expected 'abraham' or 'minkowski')")


@dataclass(frozen=True)
class Medium:
    """Isotropic, non-dispersive medium in its rest frame.

    ``viscosity`` is the dynamic viscosity of a fluid medium; it is kept apart
    from ``mu_r`` because both are conventionally written as mu.
    """
    eps_r: float
    mu_r: float = 1.0
    n: Optional[float] = None
    conductivity: float = 0.0
    viscosity: Optional[float] = None

    def __post_init__(self):
        if self.eps_r < 1.0:
            raise PreconditionError('eps_r', self.eps_r, '>= 1')
        if not self.mu_r > 0:
            raise PreconditionError('mu_r', self.mu_r, '> 0')
        if self.conductivity < 0:
            raise PreconditionError('conductivity', self.conductivity, '>= 0')
        if self.viscosity is not None and not self.viscosity > 0:
            raise PreconditionError('viscosity', self.viscosity, '> 0')

        expected = math.sqrt(self.eps_r * self.mu_r)
        if self.n is None:
            object.__setattr__(self, 'n', expected)
        elif abs(self.n - expected) > _INDEX_RTOL * expected:
            raise ValueError(
                f"Refractive index n={self.n!r} is inconsistent with sqrt(eps_r*mu_r)={expected!r}"
            )

    @classmethod
    def from_index(cls, n: float, mu_r: float = 1.0, conductivity: float = 0.0,
                   viscosity: Optional[float] = None) -> 'Medium':
        return cls(eps_r=n * n / mu_r, mu_r=mu_r, n=n, conductivity=conductivity, viscosity=viscosity)

    @classmethod
    def vacuum(cls) -> 'Medium':
        return cls(eps_r=1.0, mu_r=1.0, n=1.0)

    @property
    def is_nonmagnetic(self) -> bool:
        return self.mu_r == 1.0

    def require_nonmagnetic(self, operation: str) -> None:
        if not self.is_nonmagnetic:
            raise PreconditionError('mu_r', self.mu_r, '== 1', f"{operation} is defined for nonmagnetic media only")


@dataclass(frozen=True, eq=False)
class FieldPoint:
    """E, D, H, B at one point and instant, SI units"""
    E: np.ndarray
    D: np.ndarray
    H: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        for name in ('E', 'D', 'H', 'B'):
            object.__setattr__(self, name, as_vector(getattr(self, name), name))

    @classmethod
    def from_medium(cls, E, H, medium: Medium,
                    constants: PhysicalConstants = DEFAULT_CONSTANTS) -> 'FieldPoint':
        E = as_vector(E, 'E')
        H = as_vector(H, 'H')
        return cls(
            E=E,
            D=constants.eps0 * medium.eps_r * E,
            H=H,
            B=constants.mu0 * medium.mu_r * H,
        )

    @classmethod
    def zero(cls) -> 'FieldPoint':
        return cls(E=np.zeros(3), D=np.zeros(3), H=np.zeros(3), B=np.zeros(3))


@dataclass(frozen=True, eq=False)
class EMQuantities:
    S: np.ndarray
    w: float
    g_A: np.ndarray
    g_M: np.ndarray
    stress: np.ndarray


@dataclass(frozen=True, eq=False)
class SourceDensities:
    rho: float = 0.0
    J: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        if not math.isfinite(self.rho):
            raise ValueError(f"Charge density must be finite, got {self.rho}")
        object.__setattr__(self, 'J', as_vector(self.J, 'J'))


@dataclass(frozen=True, eq=False)
class PlaneWave:
    """Monochromatic linearly polarized plane wave in a homogeneous medium.

    Fields are real: E = E0 cos(k d·r - ωt) p and H = H0 cos(k d·r - ωt) (d × p),
    with H0 = n E0 / (μ0 μ_r c).
    """
    E0: float
    omega: float
    direction: np.ndarray
    polarization: np.ndarray
    medium: Medium
    constants: PhysicalConstants = DEFAULT_CONSTANTS

    def __post_init__(self):
        direction = as_vector(self.direction, 'direction')
        polarization = as_vector(self.polarization, 'polarization')
        for name, vec in (('direction', direction), ('polarization', polarization)):
            if abs(np.linalg.norm(vec) - 1.0) > _UNIT_TOL:
                raise ValueError(f"{name} must be a unit vector, got norm {np.linalg.norm(vec)!r}")
        if abs(float(np.dot(direction, polarization))) > _UNIT_TOL:
            raise ValueError("Polarization must be perpendicular to the propagation direction")
        if not self.omega > 0:
            raise PreconditionError('omega', self.omega, '> 0')
        object.__setattr__(self, 'direction', direction)
        object.__setattr__(self, 'polarization', polarization)

    @property
    def k(self) -> float:
        return self.medium.n * self.omega / self.constants.c

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    @property
    def H0(self) -> float:
        return self.medium.n * self.E0 / (self.constants.mu0 * self.medium.mu_r * self.constants.c)

    @property
    def magnetic_direction(self) -> np.ndarray:
        return np.cross(self.direction, self.polarization)

    def phase(self, r, t: float) -> float:
        return self.k * float(np.dot(self.direction, as_vector(r, 'r'))) - self.omega * t

    def fields_at(self, r, t: float) -> FieldPoint:
        amplitude = math.cos(self.phase(r, t))
        return FieldPoint.from_medium(
            self.E0 * amplitude * self.polarization,
            self.H0 * amplitude * self.magnetic_direction,
            self.medium,
            self.constants,
        )

    def poynting_rate(self, r, t: float) -> np.ndarray:
        """Analytic time derivative of E × H"""
        return self.E0 * self.H0 * self.omega * math.sin(2.0 * self.phase(r, t)) * self.direction

    @property
    def intensity(self) -> float:
        """Time-averaged Poynting flux magnitude"""
        return 0.5 * self.E0 * self.H0

    def mean_poynting(self) -> np.ndarray:
        return self.intensity * self.direction

    def mean_energy_density(self) -> float:
        eps = self.constants.eps0 * self.medium.eps_r
        mu = self.constants.mu0 * self.medium.mu_r
        return 0.25 * (eps * self.E0 ** 2 + mu * self.H0 ** 2)
