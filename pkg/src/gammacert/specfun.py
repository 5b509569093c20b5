"""Reference evaluation of gamma-related special functions.

ln Gamma, psi and the polygammas are computed by recurrence-shifting the
argument upward and applying the Stirling-type asymptotic series; on the
positive real axis the truncation error of these series is bounded by the
first omitted term, which is folded into the returned error bound.  The
Binet remainder theta(x) is evaluated by quadrature of its Laplace-type
integral with an analytic tail bound.

mpmath supplies the arbitrary-precision arithmetic, Bernoulli numbers and
the tanh-sinh quadrature rule; the special-function algorithms themselves
live here so their error bounds are explicit.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import mp

from .config import (
    DEFAULT_CONFIG,
    DomainError,
    NumericalError,
    PrecisionConfig,
    SpecialValue,
    require_positive,
)

__all__ = [
    "ln_gamma",
    "binet_theta",
    "digamma",
    "polygamma",
    "harmonic_exact",
    "mathieu_partial",
    "euler_gamma",
]


def _shift_threshold(digits: int) -> float:
    # The Stirling series at argument z bottoms out near exp(-2*pi*z); keep
    # that floor a few digits below the requested target.
    return max(10.0, 0.367 * (digits + 8))


def _quad_maxdegree(cfg: PrecisionConfig) -> int:
    # tanh-sinh at degree d uses on the order of 20 * 2^d nodes.
    return max(6, math.ceil(math.log2(max(cfg.quad_nodes, 64))))


def _stirling_ln_gamma(z, target):
    """Stirling series for ln Gamma at large z; returns (value, remainder)."""
    s = (z - mp.mpf(1) / 2) * mp.log(z) - z + mp.log(2 * mp.pi) / 2
    prev = mp.inf
    k = 1
    while True:
        term = mp.bernoulli(2 * k) / ((2 * k) * (2 * k - 1) * z ** (2 * k - 1))
        if abs(term) >= prev or k > 300:
            # series started diverging: remainder <= first omitted term
            return s, abs(term)
        s += term
        prev = abs(term)
        k += 1
        nxt = abs(mp.bernoulli(2 * k) / ((2 * k) * (2 * k - 1) * z ** (2 * k - 1)))
        if nxt < target:
            return s, nxt


def _stirling_digamma(z, target):
    s = mp.log(z) - 1 / (2 * z)
    prev = mp.inf
    k = 1
    while True:
        term = -mp.bernoulli(2 * k) / ((2 * k) * z ** (2 * k))
        if abs(term) >= prev or k > 300:
            return s, abs(term)
        s += term
        prev = abs(term)
        k += 1
        nxt = abs(mp.bernoulli(2 * k) / ((2 * k) * z ** (2 * k)))
        if nxt < target:
            return s, nxt


def _stirling_polygamma(m: int, z, target):
    """Asymptotic series for psi^(m), m >= 1, at large z."""
    sign = mp.mpf(-1) ** (m - 1)
    s = mp.factorial(m - 1) / z ** m + mp.factorial(m) / (2 * z ** (m + 1))
    prev = mp.inf
    k = 1
    while True:
        term = (
            mp.bernoulli(2 * k)
            * mp.factorial(2 * k + m - 1)
            / (mp.factorial(2 * k) * z ** (2 * k + m))
        )
        if abs(term) >= prev or k > 300:
            return sign * s, abs(term)
        s += term
        prev = abs(term)
        k += 1
        nxt = abs(
            mp.bernoulli(2 * k)
            * mp.factorial(2 * k + m - 1)
            / (mp.factorial(2 * k) * z ** (2 * k + m))
        )
        if nxt < target:
            return sign * s, nxt


def ln_gamma(x, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """ln Gamma(x) for x > 0 with a certified absolute error bound."""
    require_positive("x", x)
    with mp.workdps(cfg.dps):
        xm = mp.mpf(x)
        target = mp.mpf(10) ** (-(cfg.working_digits + 6))
        thr = _shift_threshold(cfg.working_digits)
        rem = mp.inf
        for _ in range(4):
            z = xm
            shift = mp.mpf(0)
            while z < thr:
                shift += mp.log(z)
                z += 1
            val, rem = _stirling_ln_gamma(z, target)
            if rem <= target:
                break
            thr *= 2
        val = val - shift
        # rounding slack for the shift products and elementary calls
        slack = (abs(val) + abs(shift) + 1) * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, float(rem + slack))


def digamma(x, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    require_positive("x", x)
    with mp.workdps(cfg.dps):
        xm = mp.mpf(x)
        target = mp.mpf(10) ** (-(cfg.working_digits + 6))
        thr = _shift_threshold(cfg.working_digits)
        rem = mp.inf
        for _ in range(4):
            z = xm
            shift = mp.mpf(0)
            while z < thr:
                shift += 1 / z
                z += 1
            val, rem = _stirling_digamma(z, target)
            if rem <= target:
                break
            thr *= 2
        val = val - shift
        slack = (abs(val) + abs(shift) + 1) * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, float(rem + slack))


def polygamma(m: int, x, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """psi^(m)(x) for m >= 1, x > 0; sign satisfies (-1)^(m+1) psi^(m) > 0."""
    if not (isinstance(m, int) and m >= 1):
        raise DomainError(f"m must be a positive integer, got {m!r}")
    require_positive("x", x)
    with mp.workdps(cfg.dps):
        xm = mp.mpf(x)
        target = mp.mpf(10) ** (-(cfg.working_digits + 6))
        thr = _shift_threshold(cfg.working_digits) + m
        rem = mp.inf
        for _ in range(4):
            z = xm
            shift = mp.mpf(0)
            while z < thr:
                shift += 1 / z ** (m + 1)
                z += 1
            val, rem = _stirling_polygamma(m, z, target)
            if rem <= target:
                break
            thr *= 2
        # psi^(m)(x) = psi^(m)(x+n) - (-1)^m m! sum_j (x+j)^(-m-1)
        val = val - mp.mpf(-1) ** m * mp.factorial(m) * shift
        scale = abs(val) + mp.factorial(m) * (abs(shift) + 1)
        slack = scale * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, float(rem + slack))


# Maclaurin coefficients of (1/(e^t - 1) - 1/t + 1/2)/t = sum B_2k t^(2k-2)/(2k)!
_THETA_KERNEL_COEFFS = [
    Fraction(1, 12),
    Fraction(-1, 720),
    Fraction(1, 30240),
    Fraction(-1, 1209600),
    Fraction(1, 47900160),
    Fraction(-691, 1307674368000),
]


def _theta_kernel(t):
    """(1/(e^t-1) - 1/t + 1/2)/t with the removable singularity patched."""
    if t < mp.mpf("1e-2"):
        t2 = t * t
        s = mp.mpf(0)
        for c in reversed(_THETA_KERNEL_COEFFS):
            s = s * t2 + mp.mpf(c.numerator) / c.denominator
        return s
    return (1 / mp.expm1(t) - 1 / t + mp.mpf(1) / 2) / t


def binet_theta(x, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """Binet remainder theta(x) = int_0^inf (1/(e^t-1) - 1/t + 1/2) e^{-xt}/t dt.

    The kernel is completely monotonic with value 1/12 at t = 0, so the
    truncated tail beyond T is at most e^{-xT}/(12 x).
    """
    require_positive("x", x)
    with mp.workdps(cfg.dps):
        xm = mp.mpf(x)
        T = mp.mpf(max(cfg.quad_cutoff, 60.0 / float(x)))
        f = lambda t: _theta_kernel(t) * mp.exp(-xm * t)
        pts = sorted({mp.mpf(0), min(1, T), min(10, T), T})
        try:
            val, qerr = mp.quad(f, pts, error=True, maxdegree=_quad_maxdegree(cfg))
        except Exception as exc:  # pragma: no cover
            raise NumericalError(f"theta quadrature failed at x={x}") from exc
        tail = mp.exp(-xm * T) / (12 * xm)
        err = 10 * abs(qerr) + tail + abs(val) * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, float(err))


def harmonic_exact(n: int) -> Fraction:
    """Exact n-th harmonic number sum_{k=1}^n 1/k as a rational."""
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k)
    return total


def mathieu_partial(r, terms: int) -> SpecialValue:
    """Partial sum of Mathieu's series sum_{n>=1} 2n/(n^2+r^2)^2.

    The tail beyond N is below int_N^inf 2u/(u^2+r^2)^2 du = 1/(N^2+r^2),
    which is folded into the error bound.
    """
    require_positive("r", r)
    if not (isinstance(terms, int) and terms >= 1):
        raise DomainError(f"terms must be a positive integer, got {terms!r}")
    r2 = float(r) * float(r)
    total = math.fsum(2.0 * n / (n * n + r2) ** 2 for n in range(1, terms + 1))
    tail = 1.0 / (terms * terms + r2)
    return SpecialValue(mp.mpf(total), tail + 1e-14 * total)


def euler_gamma(cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """Euler-Mascheroni constant produced as -psi(1), the shared provenance."""
    sv = digamma(1, cfg)
    return SpecialValue(-sv.value, sv.abs_error_bound)
