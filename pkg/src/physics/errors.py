from typing import Optional


class PreconditionError(ValueError):
    """A physical precondition of an operation is violated.

    Carries the offending quantity, its supplied value and the bound it broke,
    so callers can report all three.
    """

    def __init__(self, quantity: str, value: float, bound: str, detail: Optional[str] = None):
        self.quantity = quantity
        self.value = value
        self.bound = bound
        message = f"{quantity} = {value:.6g} violates bound {bound}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class QuadratureError(RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance."""
