from dataclasses import dataclass

import scipy.constants as const

# Tolerance of the c² ε₀ μ₀ = 1 check
_MAXWELL_RTOL = 1e-12


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants shared by every physics module.

    The permittivity defaults to 1/(μ₀c²) rather than the tabulated CODATA
    value so that c²ε₀μ₀ = 1 holds to roundoff.
    """
    c: float = const.c
    mu0: float = const.mu_0
    eps0: float = 1.0 / (const.mu_0 * const.c ** 2)
    hbar: float = const.hbar
    e_charge: float = const.e

    def __post_init__(self):
        for name in ('c', 'eps0', 'mu0', 'hbar', 'e_charge'):
            if not getattr(self, name) > 0:
                raise ValueError(f"Physical constant {name} must be strictly positive, got {getattr(self, name)}")
        product = self.c ** 2 * self.eps0 * self.mu0
        if abs(product - 1.0) > _MAXWELL_RTOL:
            raise ValueError(f"c^2 * eps0 * mu0 = {product!r} deviates from 1 by more than {_MAXWELL_RTOL}")

    @property
    def c2(self) -> float:
        return self.c ** 2


DEFAULT_CONSTANTS = PhysicalConstants()
