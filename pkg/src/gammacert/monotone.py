"""The shifted Stirling-defect family H_lambda and its monotonicity machinery.

H_lambda(x) = ln Gamma(x+1) - (x+1/2) ln(x+1/2) + x + 1/2 - ln sqrt(2 pi)
              + 1/(24 (x+lambda))

H_lambda'(x) has the Laplace representation  int_0^inf phi_lambda(t) e^{-xt} dt
with  phi_lambda(t) = e^{-t/2}/t - 1/(e^t - 1) - t e^{-lambda t}/24,  so the
complete monotonicity of +-H_lambda reduces to the sign of phi_lambda:

    phi_lambda <= 0 on (0, inf)  <=>  H_lambda  is completely monotonic
                                      (holds iff lambda <= 1/2),
    phi_lambda >= 0 on (0, inf)  <=>  -H_lambda is completely monotonic
                                      (holds iff lambda >= lambda_star).

lambda_star = sup_t h(t) with h(t) = -(1/t) ln[(24/t^2)(e^{-t/2} - t/(e^t-1))],
which lies in [1/2, 3/2]; the solver below locates it numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from mpmath import mp

from .config import (
    DEFAULT_CONFIG,
    DomainError,
    NumericalError,
    PrecisionConfig,
    SpecialValue,
    require_positive,
)
from . import specfun

__all__ = [
    "H_lambda",
    "H_lambda_prime",
    "H_lambda_deriv",
    "phi_integrand",
    "laplace_check",
    "h_of_t",
    "lambda_star",
    "cm_check",
    "necessary_limit",
    "series_coeff_pivot",
    "series_coeff_lambda",
    "kth_root_bound",
    "midpoint_defect",
    "G_lambda",
    "G_lambda_mu",
    "g_beta",
    "g_beta_log_deriv",
    "G_lambda_mu_log_deriv",
    "CMReport",
    "ThresholdResult",
    "default_cm_grid",
]


def _check_lambda(lam) -> None:
    if lam < 0:
        raise DomainError(f"lambda must be nonnegative, got {lam!r}")


def H_lambda(x, lam, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """H_lambda(x); error bound propagated from the ln Gamma evaluation."""
    require_positive("x", x)
    _check_lambda(lam)
    with mp.workdps(cfg.dps):
        x1 = mp.mpf(x) + 1  # keep full precision; never truncate to float64
    lg = specfun.ln_gamma(x1, cfg)
    with mp.workdps(cfg.dps):
        xm, lm = mp.mpf(x), mp.mpf(lam)
        val = (
            lg.value
            - (xm + mp.mpf(1) / 2) * mp.log(xm + mp.mpf(1) / 2)
            + xm
            + mp.mpf(1) / 2
            - mp.log(2 * mp.pi) / 2
            + 1 / (24 * (xm + lm))
        )
        slack = (abs(val) + xm + abs(xm * mp.log(xm + 1)) + 1) * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, lg.abs_error_bound + float(slack))


def H_lambda_prime(x, lam, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """H_lambda'(x) = psi(x+1) - ln(x+1/2) - 1/(24 (x+lambda)^2)."""
    require_positive("x", x)
    _check_lambda(lam)
    with mp.workdps(cfg.dps):
        x1 = mp.mpf(x) + 1
    ps = specfun.digamma(x1, cfg)
    with mp.workdps(cfg.dps):
        xm, lm = mp.mpf(x), mp.mpf(lam)
        val = ps.value - mp.log(xm + mp.mpf(1) / 2) - 1 / (24 * (xm + lm) ** 2)
        slack = (abs(val) + abs(mp.log(xm + 1)) + 1) * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, ps.abs_error_bound + float(slack))


def H_lambda_deriv(n: int, x, lam, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """n-th derivative of H_lambda, n >= 1, in closed form.

    For n >= 2 (validated against central finite differences):

        H^(n)(x) = psi^(n-1)(x+1) + (-1)^(n-1) (n-2)! / (x+1/2)^(n-1)
                                  + (-1)^n n! / (24 (x+lambda)^(n+1))
    """
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if n == 1:
        return H_lambda_prime(x, lam, cfg)
    require_positive("x", x)
    _check_lambda(lam)
    with mp.workdps(cfg.dps):
        x1 = mp.mpf(x) + 1
    pg = specfun.polygamma(n - 1, x1, cfg)
    with mp.workdps(cfg.dps):
        xm, lm = mp.mpf(x), mp.mpf(lam)
        t_log = mp.mpf(-1) ** (n - 1) * mp.factorial(n - 2) / (xm + mp.mpf(1) / 2) ** (n - 1)
        t_cor = mp.mpf(-1) ** n * mp.factorial(n) / (24 * (xm + lm) ** (n + 1))
        val = pg.value + t_log + t_cor
        slack = (abs(pg.value) + abs(t_log) + abs(t_cor)) * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, pg.abs_error_bound + float(slack))


def phi_integrand(t, lam):
    """phi_lambda(t) = e^{-t/2}/t - 1/(e^t-1) - t e^{-lambda t}/24 for t > 0.

    Below t = 1e-3 the direct form loses ~6 digits to cancellation, so a
    Taylor form with leading coefficient (2 lambda - 1)/48 is used:

        phi = (2l-1)/48 t^2 + (23/5760 - l^2/48) t^3
              + (l^3/144 - 1/3840) t^4 + (1/46080 - 1/30240 - l^4/576) t^5
    """
    if not t > 0:
        raise DomainError(f"t must be positive, got {t!r}")
    tm, lm = mp.mpf(t), mp.mpf(lam)
    if tm < mp.mpf("1e-3"):
        c2 = (2 * lm - 1) / 48
        c3 = mp.mpf(23) / 5760 - lm ** 2 / 48
        c4 = lm ** 3 / 144 - mp.mpf(1) / 3840
        c5 = mp.mpf(1) / 46080 - mp.mpf(1) / 30240 - lm ** 4 / 576
        return ((((c5 * tm) + c4) * tm + c3) * tm + c2) * tm * tm
    return mp.exp(-tm / 2) / tm - 1 / mp.expm1(tm) - tm * mp.exp(-lm * tm) / 24


def laplace_check(x, lam, cfg: PrecisionConfig = DEFAULT_CONFIG) -> float:
    """Residual between the quadrature of the Laplace representation of
    H_lambda' and its closed form; expected within combined error bounds."""
    require_positive("x", x)
    _check_lambda(lam)
    closed = H_lambda_prime(x, lam, cfg)
    with mp.workdps(cfg.dps):
        xm = mp.mpf(x)
        T = mp.mpf(max(cfg.quad_cutoff, 60.0 / float(x)))
        f = lambda t: phi_integrand(t, lam) * mp.exp(-xm * t)
        pts = sorted({mp.mpf(0), min(1, T), min(10, T), min(30, T), T})
        try:
            val = mp.quad(f, pts, maxdegree=max(8, _maxdeg(cfg)))
        except Exception as exc:
            raise NumericalError(f"Laplace quadrature failed at x={x}, lambda={lam}") from exc
        return float(val - closed.value)


def _maxdeg(cfg: PrecisionConfig) -> int:
    return max(6, math.ceil(math.log2(max(cfg.quad_nodes, 64))))


def h_of_t(t):
    """h(t) = -(1/t) ln[(24/t^2)(e^{-t/2} - t/(e^t-1))]; h -> 1/2 at both ends.

    Near t = 0 the bracket is evaluated by its series
    1 - t/2 + 23 t^2/240 - t^3/160 - 11 t^4/40320 + O(t^5).
    """
    if not t > 0:
        raise DomainError(f"t must be positive, got {t!r}")
    tm = mp.mpf(t)
    if tm < mp.mpf("1e-3"):
        u = tm * (
            mp.mpf(-1) / 2
            + tm * (mp.mpf(23) / 240 + tm * (mp.mpf(-1) / 160 + tm * mp.mpf(-11) / 40320))
        )
        return -mp.log1p(u) / tm
    bracket = 24 / tm ** 2 * (mp.exp(-tm / 2) - tm / mp.expm1(tm))
    if not bracket > 0:
        raise NumericalError(f"bracket non-positive at t={t}: {bracket}")
    return -mp.log(bracket) / tm


@dataclass(frozen=True)
class ThresholdResult:
    """Numerically located lambda_star = sup_t h(t)."""

    lambda_star: float
    bracket: tuple
    t_star: float
    tolerance: float


_INV_PHI = (math.sqrt(5) - 1) / 2


def lambda_star(tol, cfg: PrecisionConfig = DEFAULT_CONFIG) -> ThresholdResult:
    """Locate lambda_star by coarse log-grid scan over (0, 200] followed by
    golden-section refinement; the returned bracket has width <= tol.

    Certification: every evaluated h is a lower bound for lambda_star, and
    h(mid) + M |b-a|^2 / 8 with M >= |h''| near the maximizer is an upper
    bound once the maximum is interior to [a, b].
    """
    require_positive("tol", tol)
    with mp.workdps(cfg.dps):
        n = 600
        lo_t, hi_t = mp.mpf("1e-4"), mp.mpf(200)
        ratio = (hi_t / lo_t) ** (mp.mpf(1) / (n - 1))
        ts = [lo_t * ratio ** i for i in range(n)]
        hs = [h_of_t(t) for t in ts]
        i = max(range(n), key=lambda j: hs[j])
        if i == 0 or i == n - 1:
            raise NumericalError("failed to bracket an interior maximum of h")
        # guard: h stays below the grid best beyond the scan cutoff
        for t_out in (400, 1000, 10000):
            if not h_of_t(t_out) < hs[i]:
                raise NumericalError(f"h({t_out}) exceeds grid maximum; enlarge scan domain")
        a, b = ts[i - 1], ts[i + 1]
        c = b - _INV_PHI * (b - a)
        d = a + _INV_PHI * (b - a)
        hc, hd = h_of_t(c), h_of_t(d)
        best_lo = max(hs[i], hc, hd)
        best_hi = mp.inf
        for _ in range(500):
            if hc >= hd:
                b, d, hd = d, c, hc
                c = b - _INV_PHI * (b - a)
                hc = h_of_t(c)
            else:
                a, c, hc = c, d, hd
                d = a + _INV_PHI * (b - a)
                hd = h_of_t(d)
            best_lo = max(best_lo, hc, hd)
            m = (a + b) / 2
            hm = h_of_t(m)
            best_lo = max(best_lo, hm)
            w = b - a
            if w < 1:
                # second-difference curvature estimate with a safety factor
                dd = abs(h_of_t(m + w) - 2 * hm + h_of_t(m - w)) / w ** 2
                best_hi = min(best_hi, hm + 4 * (dd + mp.mpf(10) ** (4 - cfg.dps)) * w ** 2 / 8)
            if best_hi - best_lo <= tol:
                break
        else:
            raise NumericalError("lambda_star refinement did not converge")
        lam = float(best_lo)
        result = ThresholdResult(
            lambda_star=lam,
            bracket=(float(best_lo), float(best_hi)),
            t_star=float(m),
            tolerance=float(tol),
        )
        if not 0.5 <= lam <= 1.5:
            raise NumericalError(f"lambda_star {lam} outside the proven [1/2, 3/2]")
        return result


def default_cm_grid(points: int = 48, lo: float = 1e-2, hi: float = 100.0) -> list:
    """Log-spaced default grid for complete-monotonicity sweeps."""
    ratio = (hi / lo) ** (1.0 / (points - 1))
    return [lo * ratio ** i for i in range(points)]


@dataclass(frozen=True)
class CMReport:
    """Verdict of a complete-monotonicity sweep over derivative orders."""

    lam: float
    sign: str  # "plus" checks H_lambda, "minus" checks -H_lambda
    max_order: int
    grid: tuple
    min_margin: float
    argmin: tuple  # (order, x)
    verdict: str  # "verified" | "falsified" | "indeterminate"


def cm_check(
    lam,
    sign: str,
    max_order: int = 6,
    grid: Sequence | None = None,
    cfg: PrecisionConfig = DEFAULT_CONFIG,
    _retried: bool = False,
) -> CMReport:
    """Check s * (-1)^n H_lambda^(n)(x) >= 0 for n = 0..max_order on a grid.

    Margins are computed interval-safely: "verified" needs every margin to
    exceed its evaluation-error bound, "falsified" needs some margin below
    minus its bound.  A borderline sweep is retried once at doubled
    working precision before reporting "indeterminate".
    """
    if sign not in ("plus", "minus"):
        raise DomainError(f"sign must be 'plus' or 'minus', got {sign!r}")
    if max_order < 1:
        raise DomainError("max_order must be >= 1")
    _check_lambda(lam)
    if grid is None:
        grid = default_cm_grid()
    if not grid or any(not x > 0 for x in grid):
        raise DomainError("grid must be nonempty with positive entries")
    s = 1.0 if sign == "plus" else -1.0

    min_margin = math.inf
    argmin = (0, float(grid[0]))
    all_clear = True
    any_falsifying = False
    for x in grid:
        for order in range(0, max_order + 1):
            if order == 0:
                sv = H_lambda(x, lam, cfg)
                margin = s * float(sv.value)
            else:
                sv = H_lambda_deriv(order, x, lam, cfg)
                margin = s * ((-1.0) ** order) * float(sv.value)
            if margin < min_margin:
                min_margin = margin
                argmin = (order, float(x))
            err = sv.abs_error_bound
            if margin <= err:
                all_clear = False
            if margin < -err:
                any_falsifying = True

    if all_clear:
        verdict = "verified"
    elif any_falsifying:
        verdict = "falsified"
    else:
        if not _retried:
            return cm_check(lam, sign, max_order, grid, cfg.doubled(), _retried=True)
        verdict = "indeterminate"

    return CMReport(
        lam=float(lam),
        sign=sign,
        max_order=max_order,
        grid=tuple(float(x) for x in grid),
        min_margin=min_margin,
        argmin=argmin,
        verdict=verdict,
    )


def necessary_limit(x, cfg: PrecisionConfig = DEFAULT_CONFIG) -> float:
    """-x - 1/(24 f(x)) with f(x) the unshifted Stirling defect; tends to 1/2."""
    require_positive("x", x)
    lg = specfun.ln_gamma(float(x) + 1, cfg)
    with mp.workdps(cfg.dps):
        xm = mp.mpf(x)
        f = (
            lg.value
            - (xm + mp.mpf(1) / 2) * mp.log(xm + mp.mpf(1) / 2)
            + xm
            + mp.mpf(1) / 2
            - mp.log(2 * mp.pi) / 2
        )
        if abs(f) <= lg.abs_error_bound:
            raise NumericalError(f"f(x) indistinguishable from 0 at x={x}")
        return float(-xm - 1 / (24 * f))


def series_coeff_pivot(k: int):
    """Exact coefficient data of (t^2-24)e^t + 24 t e^{t/2} - t^2 + 24.

    Returns (c_k, c_k/(k! 2^k)) with c_k = [k(k-1)-24] 2^k + 48 k; c_4 = 0,
    and the t^5 term is 7/240 (the printed 7/24 is a misprint).
    """
    if not (isinstance(k, int) and k >= 4):
        raise DomainError(f"k must be an integer >= 4, got {k!r}")
    c = (k * (k - 1) - 24) * 2 ** k + 48 * k
    return c, Fraction(c, math.factorial(k) * 2 ** k)


def series_coeff_lambda(k: int, lam):
    """Per-k sides of the order-k coefficient inequality behind the
    lambda >= 3/2 sufficiency:

        lhs = 24 [(l+1)^k - l^k - k (l+1/2)^(k-1)]
        rhs = k (k-1) [(3/2)^(k-2) - (1/2)^(k-2)]

    Exact when lam is rational (int/Fraction), float otherwise.
    """
    if not (isinstance(k, int) and k >= 3):
        raise DomainError(f"k must be an integer >= 3, got {k!r}")
    if isinstance(lam, (int, Fraction)):
        l = Fraction(lam)
        half = Fraction(1, 2)
    else:
        l = float(lam)
        half = 0.5
    lhs = 24 * ((l + 1) ** k - l ** k - k * (l + half) ** (k - 1))
    rhs = k * (k - 1) * (Fraction(3, 2) ** (k - 2) - Fraction(1, 2) ** (k - 2))
    if not isinstance(lhs, Fraction):
        rhs = float(rhs)
    return lhs, rhs


def kth_root_bound(k: int) -> float:
    """[(1/(k-2)) ((3/2)^(k-2) - (1/2)^(k-2))]^(1/(k-3)); stays <= 3/2 and
    tends to 3/2 as k grows."""
    if not (isinstance(k, int) and k >= 4):
        raise DomainError(f"k must be an integer >= 4, got {k!r}")
    with mp.workdps(30):
        base = (mp.mpf(3) / 2) ** (k - 2) - (mp.mpf(1) / 2) ** (k - 2)
        return float((base / (k - 2)) ** (mp.mpf(1) / (k - 3)))


def midpoint_defect(
    f: Callable,
    a: float,
    b: float,
    m: float,
    M: float,
    cfg: PrecisionConfig = DEFAULT_CONFIG,
):
    """Midpoint defect mean(f) - f((a+b)/2) on [a, b] with the two-sided
    bound (b-a)^2 m / 24 <= defect <= (b-a)^2 M / 24 for m <= f'' <= M.

    Returns (defect, lower, upper) and raises NumericalError if the bound
    fails beyond quadrature error.
    """
    if not a < b:
        raise DomainError("need a < b")
    if not m <= M:
        raise DomainError("need m <= M")
    with mp.workdps(cfg.dps):
        am, bm = mp.mpf(a), mp.mpf(b)
        try:
            integral, qerr = mp.quad(f, [am, bm], error=True, maxdegree=_maxdeg(cfg))
        except Exception as exc:
            raise NumericalError("midpoint-defect quadrature failed") from exc
        defect = integral / (bm - am) - mp.mpf(f((am + bm) / 2))
        lower = (bm - am) ** 2 * mp.mpf(m) / 24
        upper = (bm - am) ** 2 * mp.mpf(M) / 24
        tol = 10 * abs(qerr) + (abs(defect) + 1) * mp.mpf(10) ** (4 - cfg.dps)
        if defect < lower - tol or defect > upper + tol:
            raise NumericalError(
                f"midpoint defect {float(defect)} outside "
                f"[{float(lower)}, {float(upper)}] beyond tolerance"
            )
        return float(defect), float(lower), float(upper)


def _ln_G(x, lam, mu, cfg: PrecisionConfig) -> SpecialValue:
    lg = specfun.ln_gamma(float(x) + 1, cfg)
    with mp.workdps(cfg.dps):
        xm, lm, mm = mp.mpf(x), mp.mpf(lam), mp.mpf(mu)
        val = xm + lg.value - (xm + mm) * mp.log(xm + mm) + 1 / (24 * (xm + lm))
        slack = (abs(val) + xm + 1) * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, lg.abs_error_bound + float(slack))


def G_lambda(x, lam, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """G_lambda(x) = e^x Gamma(x+1) (x+1/2)^-(x+1/2) exp(1/(24(x+lambda)));
    ln G_lambda = H_lambda - (1 - ln 2 pi)/2."""
    require_positive("x", x)
    _check_lambda(lam)
    ln = _ln_G(x, lam, mp.mpf(1) / 2, cfg)
    with mp.workdps(cfg.dps):
        v = mp.exp(ln.value)
        return SpecialValue(v, float(v) * ln.abs_error_bound * 2)


def G_lambda_mu(x, lam, mu, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """Open-question generalization with independent shift mu in the
    power factor; reduces to G_lambda at mu = 1/2.  Exploration only."""
    if not x > max(0.0, -float(lam), -float(mu)):
        raise DomainError(f"x must exceed max(0, -lambda, -mu), got x={x!r}")
    ln = _ln_G(x, lam, mu, cfg)
    with mp.workdps(cfg.dps):
        v = mp.exp(ln.value)
        return SpecialValue(v, float(v) * ln.abs_error_bound * 2)


def g_beta(x, beta, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """g_beta(x) = e^x Gamma(x+1)/(x+beta)^(x+beta); LCM iff beta >= 1."""
    if not x > max(0.0, -float(beta)):
        raise DomainError(f"x must exceed max(0, -beta), got x={x!r}")
    lg = specfun.ln_gamma(float(x) + 1, cfg)
    with mp.workdps(cfg.dps):
        xm, bm = mp.mpf(x), mp.mpf(beta)
        ln = xm + lg.value - (xm + bm) * mp.log(xm + bm)
        v = mp.exp(ln)
        err = float(v) * (lg.abs_error_bound + float((abs(ln) + 1) * mp.mpf(10) ** (2 - cfg.dps)))
        return SpecialValue(v, err)


def g_beta_log_deriv(k: int, x, beta, cfg: PrecisionConfig = DEFAULT_CONFIG) -> SpecialValue:
    """k-th derivative of ln g_beta; the LCM probe tests (-1)^k times this."""
    if not (isinstance(k, int) and k >= 1):
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if not x > max(0.0, -float(beta)):
        raise DomainError(f"x must exceed max(0, -beta), got x={x!r}")
    with mp.workdps(cfg.dps):
        x1 = mp.mpf(x) + 1
    if k == 1:
        ps = specfun.digamma(x1, cfg)
        with mp.workdps(cfg.dps):
            val = ps.value - mp.log(mp.mpf(x) + mp.mpf(beta))
            return SpecialValue(val, ps.abs_error_bound + float(abs(val) + 1) * 10.0 ** (2 - cfg.dps))
    pg = specfun.polygamma(k - 1, x1, cfg)
    with mp.workdps(cfg.dps):
        xm, bm = mp.mpf(x), mp.mpf(beta)
        t_log = mp.mpf(-1) ** (k - 1) * mp.factorial(k - 2) / (xm + bm) ** (k - 1)
        val = pg.value + t_log
        slack = (abs(pg.value) + abs(t_log)) * mp.mpf(10) ** (2 - cfg.dps)
        return SpecialValue(val, pg.abs_error_bound + float(slack))


def G_lambda_mu_log_deriv(
    k: int, x, lam, mu, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> SpecialValue:
    """k-th derivative of ln G_{lambda,mu}; at mu = 1/2 this is H_lambda^(k)."""
    if not (isinstance(k, int) and k >= 1):
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if not x > max(0.0, -float(lam), -float(mu)):
        raise DomainError(f"x must exceed max(0, -lambda, -mu), got x={x!r}")
    base = g_beta_log_deriv(k, x, mu, cfg)
    with mp.workdps(cfg.dps):
        xm, lm = mp.mpf(x), mp.mpf(lam)
        if k == 1:
            t_cor = -1 / (24 * (xm + lm) ** 2)
        else:
            t_cor = mp.mpf(-1) ** k * mp.factorial(k) / (24 * (xm + lm) ** (k + 1))
        val = base.value + t_cor
        return SpecialValue(val, base.abs_error_bound + float(abs(t_cor)) * 10.0 ** (2 - cfg.dps))
