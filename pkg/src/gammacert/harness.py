"""Claim registry and verification harness.

Each claim is data: a stable id, the suites it belongs to, a default grid,
an expected verdict, and a runner producing (min_margin, argmin_x, verdict).
The falsify-printed suite reuses the same machinery with expected verdict
"falsified".  Exit-code contract: 0 = every claim matched its expected
verdict, 1 = at least one unexpected verdict, 2 = usage/I-O error.
"""

from __future__ import annotations

import csv
import functools
import io
import math
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from mpmath import mp

from .config import DEFAULT_CONFIG, DomainError, ParameterError, PrecisionConfig
from . import bounds, monotone, specfun
from .bounds import BoundFamily, FamilyId

__all__ = [
    "GridSpec",
    "VerificationReport",
    "Claim",
    "REGISTRY",
    "SUITE_IDS",
    "run_suite",
    "solve_lambda_star_cmd",
    "emit_report",
    "render_reports",
    "parse_reports",
    "exit_code",
    "claims_for_suite",
]

VERIFIED = "verified"
FALSIFIED = "falsified"
INDETERMINATE = "indeterminate"

# float-accumulation allowance for the n = 1..10^6 harmonic sweeps
# (Kahan-compensated sum keeps the true error orders of magnitude lower)
HARMONIC_ALLOWANCE = 5e-12
FACTORIAL_ALLOWANCE = 1e-12


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    points: int
    spacing: str  # "linear" | "log"

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ParameterError("GridSpec requires lo < hi")
        if self.points < 2:
            raise ParameterError("GridSpec requires points >= 2")
        if self.spacing not in ("linear", "log"):
            raise ParameterError(f"unknown spacing {self.spacing!r}")
        if self.spacing == "log" and not self.lo > 0:
            raise ParameterError("log spacing requires lo > 0")

    def values(self) -> list:
        if self.spacing == "linear":
            step = (self.hi - self.lo) / (self.points - 1)
            return [self.lo + i * step for i in range(self.points)]
        ratio = (self.hi / self.lo) ** (1.0 / (self.points - 1))
        return [self.lo * ratio ** i for i in range(self.points)]


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    grid: GridSpec
    min_margin: float
    argmin_x: float
    verdict: str
    precision_digits: int
    runtime_ms: int


@dataclass(frozen=True)
class Claim:
    claim_id: str
    suites: tuple
    expected: str
    grid: GridSpec
    runner: Callable  # runner(cfg, grid) -> (min_margin, argmin_x, verdict)
    grid_overridable: bool = False


class _Sweep:
    """Accumulates interval-safe margins over a sweep of check points."""

    def __init__(self) -> None:
        self.min_margin = math.inf
        self.argmin = 0.0
        self.all_clear = True
        self.any_falsifying = False

    def add(self, x: float, margin: float, err: float, allow_equality: bool = False) -> None:
        if margin < self.min_margin:
            self.min_margin = margin
            self.argmin = x
        ok = margin >= -err if allow_equality else margin > err
        if not ok:
            self.all_clear = False
        if margin < -err:
            self.any_falsifying = True

    def result(self):
        if self.all_clear:
            return self.min_margin, self.argmin, VERIFIED
        if self.any_falsifying:
            return self.min_margin, self.argmin, FALSIFIED
        return self.min_margin, self.argmin, INDETERMINATE


# --- Theorem 2.1 -----------------------------------------------------------


def _run_cm(lam: float, sign: str):
    def runner(cfg, grid: GridSpec):
        rep = monotone.cm_check(lam, sign, max_order=6, grid=grid.values(), cfg=cfg)
        return rep.min_margin, rep.argmin[1], rep.verdict

    return runner


def _phi_margin_sweep(lam: float, want: str, cfg, grid: GridSpec) -> _Sweep:
    """want='nonpositive' checks phi <= 0, want='nonnegative' checks phi >= 0."""
    sweep = _Sweep()
    with mp.workdps(cfg.dps):
        for t in grid.values():
            tm = mp.mpf(t)
            phi = monotone.phi_integrand(tm, lam)
            # allowance scales with the magnitudes of the cancelling terms
            scale = mp.exp(-tm / 2) / tm + 1 / mp.expm1(tm) + tm * mp.exp(-lam * tm) / 24
            err = float(scale * mp.mpf(10) ** (2 - cfg.dps))
            margin = float(-phi) if want == "nonpositive" else float(phi)
            sweep.add(t, margin, err)
    return sweep


def _run_phi_sign(lam: float, want: str):
    def runner(cfg, grid: GridSpec):
        return _phi_margin_sweep(lam, want, cfg, grid).result()

    return runner


def _run_necessary_limit(cfg, grid: GridSpec):
    val = monotone.necessary_limit(1e4, cfg)
    margin = 1e-3 - abs(val - 0.5)
    err = 10.0 ** (2 - cfg.dps)
    sweep = _Sweep()
    sweep.add(1e4, margin, err)
    return sweep.result()


def _run_threshold(cfg, grid: GridSpec):
    res = monotone.lambda_star(1e-8, cfg)
    sweep = _Sweep()
    err = 1e-8
    sweep.add(res.t_star, res.lambda_star - 0.5, err)
    sweep.add(res.t_star, 1.5 - res.lambda_star, err)
    # sign dichotomy just above / below the located threshold
    above = _phi_margin_sweep(res.lambda_star + 0.01, "nonnegative", cfg, grid)
    am, ax, av = above.result()
    sweep.add(ax, am, 0.0 if av == VERIFIED else math.inf)
    # below lambda_star a strictly negative phi value must exist
    below = _phi_margin_sweep(res.lambda_star - 0.01, "nonnegative", cfg, grid)
    sweep.add(below.argmin, -below.min_margin, 10.0 ** (2 - cfg.dps))
    return sweep.result()


# --- gamma-function containment (Theorem 3.1, Section 1) -------------------


def _run_gamma_containment(family: BoundFamily):
    def runner(cfg, grid: GridSpec):
        sweep = _Sweep()
        for x in grid.values():
            lg = specfun.ln_gamma(x + 1, cfg)
            lo, hi = bounds.gamma_bound_log(family, x, cfg)
            err = lg.abs_error_bound + 10.0 ** (2 - cfg.dps)
            sweep.add(x, float(lg.value - lo), err)
            if mp.isfinite(hi):
                sweep.add(x, float(hi - lg.value), err)
        return sweep.result()

    return runner


def _run_best_constants(cfg, grid: GridSpec):
    sweep = _Sweep()
    with mp.workdps(cfg.dps):
        for x, ref in ((1e4, mp.sqrt(2 * mp.pi)), (1e-6, mp.sqrt(2) * mp.exp(mp.mpf(7) / 12))):
            xm = mp.mpf(x)
            lg = specfun.ln_gamma(x + 1, cfg)
            denom = (xm + mp.mpf(1) / 2) * (mp.log(xm + mp.mpf(1) / 2) - 1) - 1 / (
                24 * (xm + mp.mpf(1) / 2)
            )
            ratio = mp.exp(lg.value - denom)
            rel = abs(ratio - ref) / ref
            sweep.add(x, float(1e-3 - rel), lg.abs_error_bound + 10.0 ** (2 - cfg.dps))
    return sweep.result()


def _run_section1_comparison(cfg, grid: GridSpec):
    sweep = _Sweep()
    bukac = BoundFamily(FamilyId.BUKAC_GAMMA)
    sevli = BoundFamily(FamilyId.SEVLI_BATIR_GAMMA)
    err = 10.0 ** (2 - cfg.dps)
    for x in (1.0, 2.0, 10.0):
        lo_b, hi_b = bounds.gamma_bound_log(bukac, x, cfg)
        lo_s, hi_s = bounds.gamma_bound_log(sevli, x, cfg)
        sweep.add(x, float(lo_s - lo_b), err)  # Sevli-Batir lower is stronger
        sweep.add(x, float(hi_s - hi_b), err)  # Bukac upper is tighter for x >= 1
    return sweep.result()


# --- harmonic numbers (Theorem 3.2) ----------------------------------------


@functools.lru_cache(maxsize=2)
def _harmonic_array(nmax: int) -> np.ndarray:
    """H_1..H_nmax by Kahan-compensated summation of 1/k."""
    out = np.empty(nmax)
    s = 0.0
    c = 0.0
    for k in range(1, nmax + 1):
        y = 1.0 / k - c
        t = s + y
        c = (t - s) - y
        s = t
        out[k - 1] = s
    return out


_HARMONIC_NMAX = 10 ** 6


def _run_harmonic(which: str):
    """which: 'eq3.7' | 'eq3.8-corrected' | 'eq3.8-printed'."""

    def runner(cfg, grid: GridSpec):
        nmax = int(grid.hi)
        h = _harmonic_array(nmax)
        n = np.arange(1, nmax + 1, dtype=np.float64)
        gamma_c = float(specfun.euler_gamma(cfg).value)
        if which == "eq3.7":
            base = np.log(n + 0.5) + 1.0 / (24.0 * (n + 0.5) ** 2)
            lo = base + 1.0 - math.log(1.5) - 1.0 / 54.0
            hi = base + gamma_c
        else:
            c = (
                bounds.PRINTED_HARMONIC_CONSTANT
                if which == "eq3.8-printed"
                else bounds.CORRECTED_HARMONIC_CONSTANT
            )
            base = np.log(n + 0.5) + 1.0 / (24.0 * (n + 1.5) ** 2)
            lo = base + gamma_c
            hi = base + 1.0 - math.log(1.5) - float(c)
        margins = np.minimum(h - lo, hi - h)
        i = int(np.argmin(margins))
        sweep = _Sweep()
        sweep.add(float(i + 1), float(margins[i]), HARMONIC_ALLOWANCE, allow_equality=True)
        return sweep.result()

    return runner


# --- factorials (Theorem 3.4) ----------------------------------------------


def _run_factorial(family: BoundFamily, side: str = "both"):
    """ln-space containment of n!; side='lower'/'upper' isolates one printed
    inequality, 'both' checks the double inequality."""

    def runner(cfg, grid: GridSpec):
        sweep = _Sweep()
        for n in range(int(grid.lo), int(grid.hi) + 1):
            lg = specfun.ln_gamma(n + 1, cfg)
            lo, hi = bounds.factorial_bound_log(family, n, cfg)
            err = lg.abs_error_bound + FACTORIAL_ALLOWANCE
            if side in ("both", "lower"):
                sweep.add(float(n), float(lg.value - lo), err, allow_equality=True)
            if side in ("both", "upper"):
                sweep.add(float(n), float(hi - lg.value), err, allow_equality=True)
        return sweep.result()

    return runner


# --- LCM families (Theorem 3.3) --------------------------------------------


def _run_lcm(lam: float, reciprocal: bool):
    """LCM probe of G_lambda (or its reciprocal) via the H_lambda derivatives."""
    sign = "minus" if reciprocal else "plus"

    def runner(cfg, grid: GridSpec):
        rep = monotone.cm_check(lam, sign, max_order=6, grid=grid.values(), cfg=cfg)
        return rep.min_margin, rep.argmin[1], rep.verdict

    return runner


# --- Remark 1 (Bernoulli fraction, Mathieu partial sums) -------------------


def _run_bernoulli(classic: bool):
    def runner(cfg, grid: GridSpec):
        sweep = _Sweep()
        with mp.workdps(cfg.dps):
            err = 10.0 ** (4 - cfg.dps)
            for x in grid.values():
                xm = mp.mpf(x)
                target = xm / mp.expm1(xm)
                if classic:
                    lo = mp.exp(-xm)
                    hi = mp.exp(-xm / 2)
                else:
                    lo = mp.exp(-xm / 2) - xm ** 2 / (24 * mp.exp(xm / 2))
                    hi = mp.exp(-xm / 2) - xm ** 2 / (24 * mp.exp(3 * xm / 2))
                sweep.add(x, float(target - lo), err)
                sweep.add(x, float(hi - target), err)
        return sweep.result()

    return runner


def _run_mathieu(cfg, grid: GridSpec):
    sweep = _Sweep()
    prev = specfun.mathieu_partial(1.0, 1)
    for terms in range(2, 51):
        cur = specfun.mathieu_partial(1.0, terms)
        sweep.add(float(terms), float(cur.value - prev.value), 1e-15)
        prev = cur
    coarse = specfun.mathieu_partial(1.0, 1000)
    fine = specfun.mathieu_partial(1.0, 2000)
    # the analytic tail bound must cover the observed remainder
    sweep.add(1000.0, coarse.abs_error_bound - float(fine.value - coarse.value), 1e-15)
    return sweep.result()


# --- exact-arithmetic ledger (Section 2 proof machinery) -------------------


def _run_series_pivot(cfg, grid: GridSpec):
    from fractions import Fraction

    sweep = _Sweep()
    c4, _ = monotone.series_coeff_pivot(4)
    sweep.add(4.0, float(c4 == 0), 0.5)
    c5, term5 = monotone.series_coeff_pivot(5)
    sweep.add(5.0, float(c5 == 112 and term5 == Fraction(7, 240)), 0.5)
    sweep.add(5.0, float(c5 > 0), 0.5)
    for k in range(6, 61):
        ck, _ = monotone.series_coeff_pivot(k)
        chained = k ** 3 + 23 * k - 24
        sweep.add(float(k), float(min(ck - chained, chained)), 0.0, allow_equality=False)
    return sweep.result()


def _run_series_lambda(cfg, grid: GridSpec):
    from fractions import Fraction

    lam = Fraction(3, 2)
    sweep = _Sweep()
    for k in range(3, 31):
        lhs, rhs = monotone.series_coeff_lambda(k, lam)
        sweep.add(float(k), float(lhs - rhs), 0.0, allow_equality=True)
        mid = (lam + 1) ** k - lam ** k - k * (lam + Fraction(1, 2)) ** (k - 1)
        bound = Fraction(k * (k - 1) * (k - 2)) * lam ** (k - 3) / 24
        sweep.add(float(k), float(mid - bound), 0.0, allow_equality=True)
    return sweep.result()


def _run_kth_root(cfg, grid: GridSpec):
    sweep = _Sweep()
    for k in range(4, 201):
        sweep.add(float(k), 1.5 - monotone.kth_root_bound(k), 1.5e-12)
    return sweep.result()


# --- two-path consistency ---------------------------------------------------


def _run_laplace(cfg, grid: GridSpec):
    sweep = _Sweep()
    for x in (0.5, 1.0, 2.0, 5.0, 10.0):
        for lam in (0.0, 0.25, 0.5, 1.0, 1.5, 2.0):
            res = abs(monotone.laplace_check(x, lam, cfg))
            sweep.add(x, 1e-10 - res, 10.0 ** (2 - cfg.dps))
    return sweep.result()


# --- registry ---------------------------------------------------------------

_CM_GRID = GridSpec(1e-2, 100.0, 48, "log")
_PHI_GRID = GridSpec(1e-4, 200.0, 2000, "log")
_GAMMA_GRID = GridSpec(1e-3, 100.0, 500, "log")
_HARMONIC_GRID = GridSpec(1.0, float(_HARMONIC_NMAX), _HARMONIC_NMAX, "linear")
_FACTORIAL_GRID = GridSpec(1.0, 170.0, 170, "linear")
_BERNOULLI_GRID = GridSpec(1e-3, 50.0, 500, "log")
_POINT_GRID = GridSpec(1.0, 1e4, 2, "log")
_K_GRID = GridSpec(3.0, 200.0, 198, "linear")

REGISTRY: tuple = (
    Claim("thm2.1-item1-cm-lam0", ("thm2.1",), VERIFIED, _CM_GRID, _run_cm(0.0, "plus"), True),
    Claim("thm2.1-item1-cm-lam0.25", ("thm2.1",), VERIFIED, _CM_GRID, _run_cm(0.25, "plus"), True),
    Claim("thm2.1-item1-cm-lam0.5", ("thm2.1",), VERIFIED, _CM_GRID, _run_cm(0.5, "plus"), True),
    Claim("thm2.1-item1-necessity-lam0.6", ("thm2.1",), FALSIFIED, _CM_GRID, _run_cm(0.6, "plus"), True),
    Claim("thm2.1-item1-necessity-lam1.0", ("thm2.1",), FALSIFIED, _CM_GRID, _run_cm(1.0, "plus"), True),
    Claim("thm2.1-item3-cm-lam1.5", ("thm2.1",), VERIFIED, _CM_GRID, _run_cm(1.5, "minus"), True),
    Claim("thm2.1-item3-cm-lam2", ("thm2.1",), VERIFIED, _CM_GRID, _run_cm(2.0, "minus"), True),
    Claim("thm2.1-item3-cm-lam5", ("thm2.1",), VERIFIED, _CM_GRID, _run_cm(5.0, "minus"), True),
    Claim("thm2.1-phi-nonpositive-lam0.5", ("thm2.1",), VERIFIED, _PHI_GRID, _run_phi_sign(0.5, "nonpositive"), True),
    Claim("thm2.1-phi-nonnegative-lam1.5", ("thm2.1",), VERIFIED, _PHI_GRID, _run_phi_sign(1.5, "nonnegative"), True),
    Claim("thm2.1-necessary-limit", ("thm2.1",), VERIFIED, _POINT_GRID, _run_necessary_limit),
    Claim("thm2.1-threshold", ("thm2.1",), VERIFIED, _PHI_GRID, _run_threshold),
    Claim("eq2.12-series-coeffs", ("thm2.1",), VERIFIED, _K_GRID, _run_series_pivot),
    Claim("eq2.16-coefficient-check", ("thm2.1",), VERIFIED, _K_GRID, _run_series_lambda),
    Claim("kth-root-bound", ("thm2.1",), VERIFIED, _K_GRID, _run_kth_root),
    Claim("two-path-laplace", ("thm2.1",), VERIFIED, _PHI_GRID, _run_laplace),
    Claim("thm3.1-eq3.1-containment", ("thm3.1",), VERIFIED, _GAMMA_GRID,
          _run_gamma_containment(BoundFamily(FamilyId.QI_GAMMA_LOW)), True),
    Claim("thm3.1-eq3.2-containment", ("thm3.1",), VERIFIED, _GAMMA_GRID,
          _run_gamma_containment(BoundFamily(FamilyId.QI_GAMMA_HIGH)), True),
    Claim("eq1.3-best-constants", ("thm3.1",), VERIFIED, _POINT_GRID, _run_best_constants),
    Claim("sec1-comparison", ("thm3.1",), VERIFIED, _POINT_GRID, _run_section1_comparison),
    Claim("thm3.2-eq3.7", ("thm3.2",), VERIFIED, _HARMONIC_GRID, _run_harmonic("eq3.7")),
    Claim("thm3.2-eq3.8-corrected", ("thm3.2",), VERIFIED, _HARMONIC_GRID, _run_harmonic("eq3.8-corrected")),
    Claim("eq3.8-as-printed", ("thm3.2", "falsify-printed"), FALSIFIED, _HARMONIC_GRID, _run_harmonic("eq3.8-printed")),
    Claim("thm3.3-lcm-G-lam0.5", ("thm3.3",), VERIFIED, _CM_GRID, _run_lcm(0.5, False), True),
    Claim("thm3.3-lcm-recip-G-lam1.5", ("thm3.3",), VERIFIED, _CM_GRID, _run_lcm(1.5, True), True),
    Claim("thm3.4-eq3.12-corrected", ("thm3.4",), VERIFIED, _FACTORIAL_GRID,
          _run_factorial(BoundFamily(FamilyId.FACTORIAL_HIGH))),
    Claim("thm3.4-eq3.13-corrected", ("thm3.4",), VERIFIED, _FACTORIAL_GRID,
          _run_factorial(BoundFamily(FamilyId.FACTORIAL_LOW))),
    Claim("eq3.12-as-printed", ("thm3.4", "falsify-printed"), FALSIFIED, _FACTORIAL_GRID,
          _run_factorial(BoundFamily(FamilyId.FACTORIAL_AS_PRINTED), side="upper")),
    Claim("eq3.13-as-printed", ("thm3.4", "falsify-printed"), FALSIFIED, _FACTORIAL_GRID,
          _run_factorial(BoundFamily(FamilyId.FACTORIAL_AS_PRINTED), side="lower")),
    Claim("remark1-eq4.1-containment", ("remark1",), VERIFIED, _BERNOULLI_GRID, _run_bernoulli(False), True),
    Claim("remark1-eq4.2-containment", ("remark1",), VERIFIED, _BERNOULLI_GRID, _run_bernoulli(True), True),
    Claim("remark1-mathieu-partial", ("remark1",), VERIFIED, _POINT_GRID, _run_mathieu),
)

SUITE_IDS = ("all", "thm2.1", "thm3.1", "thm3.2", "thm3.3", "thm3.4", "remark1", "falsify-printed")


def claims_for_suite(suite_id: str) -> list:
    if suite_id not in SUITE_IDS:
        raise DomainError(f"unknown suite id {suite_id!r}; choose one of {SUITE_IDS}")
    if suite_id == "all":
        return list(REGISTRY)
    return [c for c in REGISTRY if suite_id in c.suites]


def _run_claim(claim: Claim, cfg: PrecisionConfig, grid: GridSpec) -> VerificationReport:
    start = time.perf_counter()
    min_margin, argmin_x, verdict = claim.runner(cfg, grid)
    if verdict == INDETERMINATE:
        # one automatic retry at doubled working precision
        min_margin, argmin_x, verdict = claim.runner(cfg.doubled(), grid)
    runtime_ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        claim_id=claim.claim_id,
        grid=grid,
        min_margin=float(min_margin),
        argmin_x=float(argmin_x),
        verdict=verdict,
        precision_digits=cfg.working_digits,
        runtime_ms=runtime_ms,
    )


def run_suite(
    suite_id: str,
    cfg: PrecisionConfig = DEFAULT_CONFIG,
    grid_override: Optional[GridSpec] = None,
) -> list:
    """Run every claim registered for a suite, in registry order."""
    reports = []
    for claim in claims_for_suite(suite_id):
        grid = grid_override if (grid_override and claim.grid_overridable) else claim.grid
        reports.append(_run_claim(claim, cfg, grid))
    return reports


def exit_code(reports: Sequence[VerificationReport]) -> int:
    expected = {c.claim_id: c.expected for c in REGISTRY}
    for rep in reports:
        if rep.verdict != expected[rep.claim_id]:
            return 1
    return 0


def solve_lambda_star_cmd(tol: float, cfg: PrecisionConfig = DEFAULT_CONFIG):
    return monotone.lambda_star(tol, cfg)


# --- serialization ----------------------------------------------------------


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


_JSON_KEYS = ("claim_id", "grid", "min_margin", "argmin_x", "verdict", "precision_digits", "runtime_ms")


def _report_json(rep: VerificationReport) -> str:
    grid = (
        "{"
        + f'"lo": {_fmt(rep.grid.lo)}, "hi": {_fmt(rep.grid.hi)}, '
        + f'"points": {rep.grid.points}, "spacing": "{rep.grid.spacing}"'
        + "}"
    )
    return (
        "{"
        + f'"claim_id": "{rep.claim_id}", "grid": {grid}, '
        + f'"min_margin": {_fmt(rep.min_margin)}, "argmin_x": {_fmt(rep.argmin_x)}, '
        + f'"verdict": "{rep.verdict}", "precision_digits": {rep.precision_digits}, '
        + f'"runtime_ms": {rep.runtime_ms}'
        + "}"
    )


CSV_HEADER = [
    "claim_id", "lo", "hi", "points", "spacing",
    "min_margin", "argmin_x", "verdict", "precision_digits", "runtime_ms",
]


def render_reports(reports: Sequence[VerificationReport], format: str) -> str:
    """Byte-stable rendering: floats at 17 significant digits, fixed key order."""
    if format == "json":
        if not reports:
            return "[]\n"
        body = ",\n  ".join(_report_json(r) for r in reports)
        return "[\n  " + body + "\n]\n"
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in reports:
            writer.writerow([
                r.claim_id, _fmt(r.grid.lo), _fmt(r.grid.hi), r.grid.points, r.grid.spacing,
                _fmt(r.min_margin), _fmt(r.argmin_x), r.verdict, r.precision_digits, r.runtime_ms,
            ])
        return buf.getvalue()
    raise ParameterError(f"unknown report format {format!r}")


def emit_report(reports: Sequence[VerificationReport], format: str, path: str) -> None:
    text = render_reports(reports, format)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def parse_reports(text: str, format: str) -> list:
    """Inverse of render_reports; round-trips exactly."""
    if format == "json":
        import json

        out = []
        for obj in json.loads(text):
            grid = GridSpec(
                lo=float(obj["grid"]["lo"]),
                hi=float(obj["grid"]["hi"]),
                points=int(obj["grid"]["points"]),
                spacing=obj["grid"]["spacing"],
            )
            out.append(
                VerificationReport(
                    claim_id=obj["claim_id"],
                    grid=grid,
                    min_margin=float(obj["min_margin"]),
                    argmin_x=float(obj["argmin_x"]),
                    verdict=obj["verdict"],
                    precision_digits=int(obj["precision_digits"]),
                    runtime_ms=int(obj["runtime_ms"]),
                )
            )
        return out
    if format == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == CSV_HEADER
        out = []
        for row in rows[1:]:
            grid = GridSpec(float(row[1]), float(row[2]), int(row[3]), row[4])
            out.append(
                VerificationReport(
                    claim_id=row[0],
                    grid=grid,
                    min_margin=float(row[5]),
                    argmin_x=float(row[6]),
                    verdict=row[7],
                    precision_digits=int(row[8]),
                    runtime_ms=int(row[9]),
                )
            )
        return out
    raise ParameterError(f"unknown report format {format!r}")
