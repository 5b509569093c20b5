"""Closed-form two-sided bound families for Gamma(x+1), harmonic numbers,
factorials and the Bernoulli-type fraction x/(e^x - 1).

Each family evaluates the displayed lower/upper expressions verbatim; the
"corrected" factorial and harmonic variants use the constants forced by the
defining construction (equality at n = 1), while the *AsPrinted variants
reproduce the printed forms so the harness can falsify them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from mpmath import mp

from .config import (
    DEFAULT_CONFIG,
    DomainError,
    ParameterError,
    PrecisionConfig,
    require_positive,
)
from . import specfun

__all__ = [
    "FamilyId",
    "BoundFamily",
    "BoundPair",
    "eval_gamma_bound",
    "eval_harmonic_bound",
    "eval_factorial_bound",
    "eval_bernoulli_fraction_bound",
    "compare_families",
    "FamilyComparison",
    "PairOrdering",
    "gamma_bound_log",
    "factorial_bound_log",
    "H_AT_ONE_UPPER_SHIFT",
    "H_AT_ONE_LOWER_SHIFT",
    "PRINTED_HARMONIC_CONSTANT",
    "CORRECTED_HARMONIC_CONSTANT",
]


class FamilyId(enum.Enum):
    BUKAC_GAMMA = "BukacGamma"
    SEVLI_BATIR_GAMMA = "SevliBatirGamma"
    QI_GAMMA_LOW = "QiGammaLow"
    QI_GAMMA_HIGH = "QiGammaHigh"
    QI_GAMMA_GENERIC = "QiGammaGeneric"
    HARMONIC_LOW = "HarmonicLow"
    HARMONIC_HIGH = "HarmonicHigh"
    FACTORIAL_LOW = "FactorialLow"
    FACTORIAL_HIGH = "FactorialHigh"
    FACTORIAL_AS_PRINTED = "FactorialAsPrinted"
    BERNOULLI_FRACTION = "BernoulliFraction"
    BERNOULLI_CLASSIC = "BernoulliClassic"


_GAMMA_FAMILIES = {
    FamilyId.BUKAC_GAMMA,
    FamilyId.SEVLI_BATIR_GAMMA,
    FamilyId.QI_GAMMA_LOW,
    FamilyId.QI_GAMMA_HIGH,
    FamilyId.QI_GAMMA_GENERIC,
}


@dataclass(frozen=True)
class BoundFamily:
    """A bound family id plus its shape parameter (QiGammaGeneric only)."""

    id: FamilyId
    lam: Optional[float] = None

    def __post_init__(self) -> None:
        if self.id is FamilyId.QI_GAMMA_GENERIC:
            if self.lam is None or not 0 <= self.lam <= 0.5:
                raise ParameterError(
                    "QiGammaGeneric requires a parameter lambda in [0, 1/2]"
                )
        elif self.lam is not None:
            raise ParameterError(f"{self.id.value} takes no lambda parameter")


@dataclass(frozen=True)
class BoundPair:
    """A certified (lower, upper) bracket of a target quantity at x."""

    lower: float
    upper: float
    family: BoundFamily
    x: float

    def __post_init__(self) -> None:
        # the printed factorial sides genuinely cross at small n; they must
        # be representable so the harness can report them as falsified
        if self.family.id is not FamilyId.FACTORIAL_AS_PRINTED and not self.lower <= self.upper:
            raise ParameterError(f"lower {self.lower} exceeds upper {self.upper}")

    def contains(self, value: float, slop: float = 0.0) -> bool:
        return self.lower - slop <= value <= self.upper + slop


def _pref_log(x):
    """ln[ sqrt(2 pi) ((x+1/2)/e)^(x+1/2) ], the shared Stirling prefactor."""
    return mp.log(2 * mp.pi) / 2 + (x + mp.mpf(1) / 2) * (mp.log(x + mp.mpf(1) / 2) - 1)


# H_lambda(1) = (1/24)[1/(lambda+1) + 36 - 12 ln(2 pi) - 36 ln(3/2)];
# the exponent shifts of the corrected factorial bounds.
def _H_at_one(lam):
    return (1 / (lam + mp.mpf(1)) + 36 - 12 * mp.log(2 * mp.pi) - 36 * mp.log(mp.mpf(3) / 2)) / 24


def H_AT_ONE_UPPER_SHIFT():
    return float(_H_at_one(mp.mpf(1) / 2))


def H_AT_ONE_LOWER_SHIFT():
    return float(_H_at_one(mp.mpf(3) / 2))


def gamma_bound_log(family: BoundFamily, x, cfg: PrecisionConfig = DEFAULT_CONFIG):
    """(ln lower, ln upper) for a gamma-target family at x; upper may be +inf
    (QiGammaGeneric at lambda = 0 has no finite upper side)."""
    if family.id not in _GAMMA_FAMILIES:
        raise ParameterError(f"{family.id.value} is not a gamma-target family")
    require_positive("x", x)
    with mp.workdps(cfg.dps):
        xm = mp.mpf(x)
        p = _pref_log(xm)
        fid = family.id
        if fid is FamilyId.BUKAC_GAMMA:
            lo = p - 1 / (24 * xm)
            hi = p - 1 / (24 * (mp.sqrt(xm ** 2 + 3 * xm + mp.mpf(5) / 2) - mp.mpf(1) / 2))
        elif fid is FamilyId.SEVLI_BATIR_GAMMA:
            lo = p - 1 / (24 * (xm + mp.mpf(1) / 2))
            # beta = sqrt(2) e^(7/12): upper constant exceeds sqrt(2 pi)
            hi = p - 1 / (24 * (xm + mp.mpf(1) / 2)) + mp.mpf(7) / 12 - mp.log(mp.pi) / 2
        elif fid is FamilyId.QI_GAMMA_HIGH:
            lo = p + (2 * xm / (3 * (xm + mp.mpf(3) / 2)) - 12 * (mp.log(mp.pi) - 1)) / 24
            hi = p - 1 / (24 * (xm + mp.mpf(3) / 2))
        else:
            lam = mp.mpf(1) / 2 if fid is FamilyId.QI_GAMMA_LOW else mp.mpf(family.lam)
            lo = p - 1 / (24 * (xm + lam))
            if lam == 0:
                hi = mp.inf
            else:
                hi = p + (1 / lam + 12 - 12 * mp.log(mp.pi) - 1 / (xm + lam)) / 24
        return lo, hi


def eval_gamma_bound(family: BoundFamily, x, cfg: PrecisionConfig = DEFAULT_CONFIG) -> BoundPair:
    """Closed-form bracket of Gamma(x+1) for a gamma-target family."""
    lo, hi = gamma_bound_log(family, x, cfg)
    with mp.workdps(cfg.dps):
        return BoundPair(float(mp.exp(lo)), float(mp.exp(hi)), family, float(x))


PRINTED_HARMONIC_CONSTANT = Fraction(1, 90)
CORRECTED_HARMONIC_CONSTANT = Fraction(1, 150)  # forces equality at n = 1


def eval_harmonic_bound(
    family: BoundFamily,
    n: int,
    cfg: PrecisionConfig = DEFAULT_CONFIG,
    constant: Fraction = CORRECTED_HARMONIC_CONSTANT,
) -> BoundPair:
    """Bracket of the n-th harmonic number.

    HarmonicLow:  ln(n+1/2) + 1/(24(n+1/2)^2) + [1 - ln(3/2) - 1/54, gamma]
    HarmonicHigh: ln(n+1/2) + 1/(24(n+3/2)^2) + [gamma, 1 - ln(3/2) - C]

    C defaults to the corrected 1/150; pass constant=PRINTED_HARMONIC_CONSTANT
    to reproduce (and falsify) the printed 1/90.
    """
    if family.id not in (FamilyId.HARMONIC_LOW, FamilyId.HARMONIC_HIGH):
        raise ParameterError(f"{family.id.value} is not a harmonic family")
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    gamma_c = specfun.euler_gamma(cfg).value
    with mp.workdps(cfg.dps):
        nm = mp.mpf(n)
        if family.id is FamilyId.HARMONIC_LOW:
            base = mp.log(nm + mp.mpf(1) / 2) + 1 / (24 * (nm + mp.mpf(1) / 2) ** 2)
            lo = base + 1 - mp.log(mp.mpf(3) / 2) - mp.mpf(1) / 54
            hi = base + gamma_c
        else:
            base = mp.log(nm + mp.mpf(1) / 2) + 1 / (24 * (nm + mp.mpf(3) / 2) ** 2)
            lo = base + gamma_c
            c = mp.mpf(constant.numerator) / constant.denominator
            hi = base + 1 - mp.log(mp.mpf(3) / 2) - c
        return BoundPair(float(lo), float(hi), family, float(n))


def factorial_bound_log(family: BoundFamily, n: int, cfg: PrecisionConfig = DEFAULT_CONFIG):
    """(ln lower, ln upper) for a factorial family at integer n >= 1."""
    if family.id not in (
        FamilyId.FACTORIAL_LOW,
        FamilyId.FACTORIAL_HIGH,
        FamilyId.FACTORIAL_AS_PRINTED,
    ):
        raise ParameterError(f"{family.id.value} is not a factorial family")
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    with mp.workdps(cfg.dps):
        nm = mp.mpf(n)
        p = _pref_log(nm)
        if family.id is FamilyId.FACTORIAL_HIGH:
            # corrected Eq. (3.12): exponent shift H_{1/2}(1) - 1/(24(n+1/2))
            lo = p - 1 / (24 * (nm + mp.mpf(1) / 2))
            hi = p + _H_at_one(mp.mpf(1) / 2) - 1 / (24 * (nm + mp.mpf(1) / 2))
        elif family.id is FamilyId.FACTORIAL_LOW:
            # corrected Eq. (3.13): exponent shift H_{3/2}(1) - 1/(24(n+3/2))
            lo = p + _H_at_one(mp.mpf(3) / 2) - 1 / (24 * (nm + mp.mpf(3) / 2))
            hi = p - 1 / (24 * (nm + mp.mpf(3) / 2))
        else:
            # printed x-dependent exponent terms, kept verbatim for falsification
            const = 12 * (3 - mp.log(mp.pi) + mp.log(mp.mpf(4) / 27))
            lo = p + (const + 1 / (5 * (nm + mp.mpf(3) / 2))) / 24
            hi = p + (const - 1 / (3 * (nm + mp.mpf(1) / 2))) / 24
        return lo, hi


def eval_factorial_bound(
    family: BoundFamily, n: int, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> BoundPair:
    """Bracket of n!; FactorialAsPrinted pairs the printed (3.13) lower with
    the printed (3.12) upper, both of which fail at n = 1."""
    lo, hi = factorial_bound_log(family, n, cfg)
    with mp.workdps(cfg.dps):
        return BoundPair(float(mp.exp(lo)), float(mp.exp(hi)), family, float(n))


def eval_bernoulli_fraction_bound(
    x, family: BoundFamily = BoundFamily(FamilyId.BERNOULLI_FRACTION)
) -> BoundPair:
    """Bracket of x/(e^x - 1).

    BernoulliFraction: e^{-x/2} - x^2/(24 e^{x/2}) <= x/(e^x-1)
                                 <= e^{-x/2} - x^2/(24 e^{3x/2})
    BernoulliClassic:  e^{-x} < x/(e^x-1) < e^{-x/2}
    """
    require_positive("x", x)
    if family.id is FamilyId.BERNOULLI_CLASSIC:
        return BoundPair(math.exp(-x), math.exp(-x / 2), family, float(x))
    if family.id is not FamilyId.BERNOULLI_FRACTION:
        raise ParameterError(f"{family.id.value} is not a Bernoulli-fraction family")
    with mp.workdps(DEFAULT_CONFIG.dps):
        xm = mp.mpf(x)
        lo = mp.exp(-xm / 2) - xm ** 2 / (24 * mp.exp(xm / 2))
        hi = mp.exp(-xm / 2) - xm ** 2 / (24 * mp.exp(3 * xm / 2))
        return BoundPair(float(lo), float(hi), family, float(x))


@dataclass(frozen=True)
class PairOrdering:
    """Head-to-head tightness of two gamma families at one x."""

    family_a: BoundFamily
    family_b: BoundFamily
    better_lower: str  # "a" | "b" | "indeterminate" (larger lower bound wins)
    better_upper: str  # "a" | "b" | "indeterminate" (smaller upper bound wins)


@dataclass(frozen=True)
class FamilyComparison:
    x: float
    orderings: tuple


_COMPARE_SET = (
    BoundFamily(FamilyId.BUKAC_GAMMA),
    BoundFamily(FamilyId.SEVLI_BATIR_GAMMA),
    BoundFamily(FamilyId.QI_GAMMA_LOW),
    BoundFamily(FamilyId.QI_GAMMA_HIGH),
)


def compare_families(x, cfg: PrecisionConfig = DEFAULT_CONFIG) -> FamilyComparison:
    """Pairwise tightness report for the gamma-target families at x.

    Comparisons are interval-safe: a winner is declared only when the gap
    exceeds the evaluation-error allowance, else "indeterminate".
    """
    require_positive("x", x)
    logs = {f: gamma_bound_log(f, x, cfg) for f in _COMPARE_SET}
    orderings = []
    for i, fa in enumerate(_COMPARE_SET):
        for fb in _COMPARE_SET[i + 1 :]:
            with mp.workdps(cfg.dps):
                tol = mp.mpf(10) ** (2 - cfg.dps)
                lo_a, hi_a = logs[fa]
                lo_b, hi_b = logs[fb]
                if lo_a > lo_b + tol:
                    better_lower = "a"
                elif lo_b > lo_a + tol:
                    better_lower = "b"
                else:
                    better_lower = "indeterminate"
                if hi_a < hi_b - tol:
                    better_upper = "a"
                elif hi_b < hi_a - tol:
                    better_upper = "b"
                else:
                    better_upper = "indeterminate"
            orderings.append(PairOrdering(fa, fb, better_lower, better_upper))
    return FamilyComparison(x=float(x), orderings=tuple(orderings))
