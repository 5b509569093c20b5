"""Tests for the monotonicity machinery: H_lambda and its derivatives, the
Laplace-density integrand, the threshold search, and the exact series layer."""

import math
from fractions import Fraction

import pytest
from mpmath import mp

from gammacert import (
    DEFAULT_CONFIG,
    DomainError,
    H_lambda,
    H_lambda_deriv,
    H_lambda_prime,
    cm_check,
    lambda_star,
    phi_integrand,
)
from gammacert.config import NumericalError, PrecisionConfig
from gammacert.monotone import (
    G_lambda,
    G_lambda_mu_log_deriv,
    default_cm_grid,
    g_beta,
    g_beta_log_deriv,
    h_of_t,
    kth_root_bound,
    laplace_check,
    midpoint_defect,
    necessary_limit,
    series_coeff_lambda,
    series_coeff_pivot,
)


class TestHLambda:
    def test_frozen_value(self):
        # independently computed reference at (x, lambda) = (1, 1/2)
        sv = H_lambda(1.0, 0.5)
        assert float(sv.value) == pytest.approx(6.41582410858463e-4, rel=1e-10)

    def test_prime_frozen_value(self):
        sv = H_lambda_prime(1.0, 0.5)
        assert float(sv.value) == pytest.approx(-1.1992915282157612e-3, rel=1e-8)

    def test_sign_dichotomy(self):
        # H_lambda > 0 for lambda <= 1/2, < 0 for lambda >= 3/2 (x > 0)
        for x in (0.1, 1.0, 10.0):
            assert float(H_lambda(x, 0.5).value) > 0
            assert float(H_lambda(x, 1.5).value) < 0

    def test_decays_to_zero(self):
        assert abs(float(H_lambda(1e4, 0.5).value)) < 1e-11

    @staticmethod
    def _central_difference(n, x, lam, h, cfg):
        vals = [H_lambda(x + k * h, lam, cfg).value for k in range(-3, 4)]
        if n == 1:
            return (vals[4] - vals[2]) / (2 * h)
        if n == 2:
            return (vals[4] - 2 * vals[3] + vals[2]) / h ** 2
        if n == 3:
            return (vals[5] - 2 * vals[4] + 2 * vals[2] - vals[1]) / (2 * h ** 3)
        return (vals[5] - 4 * vals[4] + 6 * vals[3] - 4 * vals[2] + vals[1]) / h ** 4

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_deriv_matches_finite_differences(self, n):
        # Richardson-extrapolated central differences (h^2 term eliminated)
        # against the closed form, to 1e-6 relative
        lam, x = 0.25, 2.0
        cfg = PrecisionConfig(working_digits=40)
        with mp.workdps(60):
            h = mp.mpf("2e-3")
            coarse = self._central_difference(n, x, lam, h, cfg)
            fine = self._central_difference(n, x, lam, h / 2, cfg)
            fd = (4 * fine - coarse) / 3
            closed = H_lambda_deriv(n, x, lam, cfg).value
            assert abs(float((fd - closed) / closed)) < 1e-6

    def test_deriv_rejects_order_zero(self):
        with pytest.raises(DomainError):
            H_lambda_deriv(0, 1.0, 0.5)

    def test_rejects_negative_lambda(self):
        with pytest.raises(DomainError):
            H_lambda(1.0, -0.1)


class TestPhiIntegrand:
    def test_signs(self):
        ts = [10 ** (0.01 * i - 4) for i in range(0, 601, 20)]
        for t in ts:
            assert float(phi_integrand(t, 0.5)) <= 0
            assert float(phi_integrand(t, 1.5)) >= 0

    def test_taylor_patch_consistent(self):
        # the patched region must agree with a high-precision direct evaluation
        with mp.workdps(60):
            for t in (mp.mpf("1e-4"), mp.mpf("5e-4"), mp.mpf("9e-4")):
                direct = mp.exp(-t / 2) / t - 1 / mp.expm1(t) - t * mp.exp(-mp.mpf("0.25") * t) / 24
                patched = phi_integrand(t, 0.25)
                assert abs(patched - direct) < mp.mpf("1e-18")

    def test_laplace_consistency(self):
        # quadrature of phi e^{-xt} against the closed form of H'
        for x, lam in ((1.0, 0.5), (2.0, 1.5), (5.0, 1.0)):
            assert abs(laplace_check(x, lam)) < 1e-10


class TestThreshold:
    def test_h_limits(self):
        # h -> 1/2 at both ends
        assert float(h_of_t(1e-6)) == pytest.approx(0.5, abs=1e-5)
        assert float(h_of_t(500.0)) == pytest.approx(0.5, abs=2e-2)

    def test_h_frozen_value(self):
        assert float(h_of_t(2.0)) == pytest.approx(0.5557500899, rel=1e-8)

    def test_lambda_star(self):
        res = lambda_star(1e-8)
        assert 0.5 < res.lambda_star < 1.5
        assert res.bracket[1] - res.bracket[0] <= 1e-8
        assert res.lambda_star == pytest.approx(0.6518498903, abs=1e-8)
        assert res.t_star == pytest.approx(12.237, abs=0.01)

    def test_dichotomy_around_threshold(self):
        res = lambda_star(1e-8)
        ts = [10 ** (0.01 * i - 2) for i in range(0, 401, 10)]
        assert all(float(phi_integrand(t, res.lambda_star + 0.01)) >= 0 for t in ts)
        assert any(float(phi_integrand(t, res.lambda_star - 0.01)) < 0 for t in ts)


class TestCMCheck:
    @pytest.mark.parametrize("lam", [0.0, 0.25, 0.5])
    def test_sufficiency_plus(self, lam):
        assert cm_check(lam, "plus", max_order=6).verdict == "verified"

    @pytest.mark.parametrize("lam", [0.6, 1.0])
    def test_necessity_plus(self, lam):
        assert cm_check(lam, "plus", max_order=6).verdict == "falsified"

    @pytest.mark.parametrize("lam", [1.5, 2.0, 5.0])
    def test_sufficiency_minus(self, lam):
        assert cm_check(lam, "minus", max_order=6).verdict == "verified"

    def test_just_below_threshold_falsified(self):
        assert cm_check(0.64, "minus", max_order=6).verdict == "falsified"

    def test_report_fields(self):
        rep = cm_check(0.5, "plus", max_order=3, grid=[1.0, 2.0])
        assert rep.max_order == 3
        assert rep.grid == (1.0, 2.0)
        assert rep.min_margin > 0
        assert rep.argmin[0] in range(0, 4)

    def test_rejects_bad_sign(self):
        with pytest.raises(DomainError):
            cm_check(0.5, "positive")

    def test_rejects_bad_grid(self):
        with pytest.raises(DomainError):
            cm_check(0.5, "plus", grid=[0.0, 1.0])


class TestNecessaryLimit:
    def test_tends_to_half(self):
        assert abs(necessary_limit(1e4) - 0.5) < 1e-3
        # approach improves with x
        assert abs(necessary_limit(1e4) - 0.5) < abs(necessary_limit(1e2) - 0.5)


class TestExactSeries:
    def test_pivot_coefficients(self):
        c4, _ = series_coeff_pivot(4)
        assert c4 == 0
        c5, term5 = series_coeff_pivot(5)
        assert c5 == 112
        assert term5 == Fraction(7, 240)

    def test_pivot_chain(self):
        # c_k >= k^3 + 23k - 24 > 0 for k >= 6 (the k = 5 coefficient 112
        # sits below that chain value 216, hence the separate 7/240 term)
        assert 112 < 5 ** 3 + 23 * 5 - 24
        for k in range(6, 61):
            ck, _ = series_coeff_pivot(k)
            assert ck >= k ** 3 + 23 * k - 24 > 0

    def test_lambda_inequality_at_three_halves(self):
        lam = Fraction(3, 2)
        lhs3, rhs3 = series_coeff_lambda(3, lam)
        assert lhs3 == rhs3  # exact equality at k = 3
        for k in range(4, 31):
            lhs, rhs = series_coeff_lambda(k, lam)
            assert lhs > rhs

    def test_kth_root_bound(self):
        vals = [kth_root_bound(k) for k in range(4, 201)]
        assert all(v <= 1.5 for v in vals)
        assert vals == sorted(vals)  # increases toward 3/2
        assert vals[-1] == pytest.approx(1.46328, abs=1e-4)


class TestMidpointDefect:
    def test_convex_function(self):
        # f = exp on [0, 1]: f'' in [1, e]
        defect, lower, upper = midpoint_defect(mp.exp, 0.0, 1.0, 1.0, math.e)
        assert lower <= defect <= upper

    def test_violation_raises(self):
        with pytest.raises(NumericalError):
            midpoint_defect(mp.exp, 0.0, 1.0, 2.9, 3.0)

    def test_bad_interval(self):
        with pytest.raises(DomainError):
            midpoint_defect(mp.exp, 1.0, 0.0, 0.0, 1.0)


class TestLCMProbes:
    def test_G_lambda_positive(self):
        assert float(G_lambda(2.0, 0.5).value) > 0

    def test_G_lambda_mu_reduces_to_H_deriv(self):
        for k in (1, 2, 3):
            a = G_lambda_mu_log_deriv(k, 2.0, 0.5, 0.5)
            b = H_lambda_deriv(k, 2.0, 0.5)
            assert float(a.value) == pytest.approx(float(b.value), rel=1e-10)

    def test_g_beta_lcm_at_beta_one(self):
        # beta = 1: (-1)^k (ln g)^(k) >= 0 on a small sweep
        for k in (1, 2, 3, 4):
            for x in (0.5, 1.0, 5.0):
                v = g_beta_log_deriv(k, x, 1.0)
                assert (-1) ** k * float(v.value) >= 0

    def test_g_beta_fails_below_one_at_high_order(self):
        # beta = 0.9 < 1: low orders look fine near moderate x, but the
        # LCM property fails at high derivative order and small x
        violations = [
            (-1) ** k * float(g_beta_log_deriv(k, 0.05, 0.9).value)
            for k in range(2, 61)
        ]
        assert min(violations) < 0

    def test_g_beta_value(self):
        # g_1(1) = e * 1! / 2^2 = e/4
        assert float(g_beta(1.0, 1.0).value) == pytest.approx(math.e / 4, rel=1e-12)


def test_default_cm_grid_shape():
    grid = default_cm_grid()
    assert len(grid) == 48
    assert grid[0] == pytest.approx(1e-2)
    assert grid[-1] == pytest.approx(100.0)
