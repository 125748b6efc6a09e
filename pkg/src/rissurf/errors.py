"""Exception types shared by all modules."""


class RisError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RisError, ValueError):
    """An input lies outside the domain of the formula."""


class SingularPointError(RisError, ArithmeticError):
    """A closed form hit a vanishing denominator at surface coordinate ``x``."""

    def __init__(self, x, what="denominator"):
        self.x = float(x)
        self.what = what
        super().__init__(f"vanishing {what} at x = {self.x!r} m")


class NumericalError(RisError, RuntimeError):
    """Quadrature or root finding ran out of budget before reaching tolerance."""

    def __init__(self, message, estimate=None, error=None):
        self.estimate = estimate
        self.error = error
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")


class RegimeError(RisError):
    """An asymptotic formula was requested outside its regime of validity."""
