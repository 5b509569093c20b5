"""Precision policy and certified-value plumbing shared by all modules.

Every numeric result that feeds an inequality verdict is carried as a
SpecialValue: a value together with an absolute error bound, so that
comparisons can be made interval-safely instead of on bare floats.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from mpmath import mp

# Extra decimal digits of mpmath working precision beyond what is quoted
# in error bounds; absorbs rounding in the elementary-function calls.
GUARD_DIGITS = 10


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class ParameterError(ValueError):
    """Family or shape parameter outside its admissible range."""


class NumericalError(RuntimeError):
    """A quadrature or search failed to reach its certified target."""


@dataclass(frozen=True)
class PrecisionConfig:
    """Working precision, quadrature and tolerance policy.

    working_digits: decimal digits of quoted precision (>= 15).
    quad_nodes: node budget for quadrature rules.
    quad_cutoff: truncation point T for improper integrals; individual
        operations may enlarge it (e.g. to max(T, 60/x)) so that the
        analytic tail bound stays negligible.
    eq_tolerance: margins smaller than this (in scaled units) are
        classified "equality within precision" rather than strict.
    """

    working_digits: int = 15
    quad_nodes: int = 200
    quad_cutoff: float = 50.0
    eq_tolerance: float = 1e-12

    def __post_init__(self) -> None:
        if self.working_digits < 15:
            raise ParameterError("working_digits must be >= 15")
        if self.quad_nodes < 1:
            raise ParameterError("quad_nodes must be positive")
        if not self.quad_cutoff > 0:
            raise ParameterError("quad_cutoff must be positive")
        if not 0 < self.eq_tolerance <= 1e-8:
            raise ParameterError("eq_tolerance must be in (0, 1e-8]")

    @property
    def dps(self) -> int:
        """mpmath working precision actually used internally."""
        return self.working_digits + GUARD_DIGITS

    def doubled(self) -> "PrecisionConfig":
        """Same policy at twice the working precision (indeterminate retry)."""
        return replace(self, working_digits=2 * self.working_digits)


DEFAULT_CONFIG = PrecisionConfig()


@dataclass(frozen=True)
class SpecialValue:
    """A real value with a certified absolute error bound.

    The truth lies in [value - abs_error_bound, value + abs_error_bound];
    downstream comparisons must consume this interval, never the bare value.
    """

    value: object  # mpmath.mpf (kept exact at the producing precision)
    abs_error_bound: float

    def __post_init__(self) -> None:
        if not mp.isfinite(mp.mpf(self.abs_error_bound)) or self.abs_error_bound < 0:
            raise ParameterError("abs_error_bound must be finite and nonnegative")

    def __float__(self) -> float:
        return float(self.value)

    @property
    def lo(self) -> float:
        return float(self.value - self.abs_error_bound)

    @property
    def hi(self) -> float:
        return float(self.value + self.abs_error_bound)

    def definitely_positive(self) -> bool:
        return self.lo > 0

    def definitely_negative(self) -> bool:
        return self.hi < 0


def require_positive(name: str, x) -> None:
    if not x > 0:
        raise DomainError(f"{name} must be positive, got {x!r}")
