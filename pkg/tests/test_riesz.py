"""Riesz means, counting, averages, and the Legendre transform against
hand enumerations and brute-force numpy oracles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rieszbounds import riesz
from rieszbounds.errors import DomainError, TruncationError


class TestRieszMean:
    def test_hand_enumeration_square_pi(self, square_pi):
        # eigenvalues 2, 5, 5, 8 below 9
        assert riesz.riesz_mean(square_pi, 1.0, 9.0).value == \
            pytest.approx(7 + 4 + 4 + 1, rel=1e-12)
        assert riesz.riesz_mean(square_pi, 2.0, 9.0).value == \
            pytest.approx(49 + 16 + 16 + 1, rel=1e-12)
        assert riesz.riesz_mean(square_pi, 1.0, 6.0).value == \
            pytest.approx(4 + 1 + 1, rel=1e-12)

    def test_contributing_count(self, square_pi):
        ev = riesz.riesz_mean(square_pi, 1.0, 9.0)
        assert ev.contributing == 4

    @given(st.floats(min_value=0.0, max_value=3.0),
           st.floats(min_value=0.5, max_value=199.0))
    @settings(max_examples=200, deadline=None)
    def test_against_numpy_oracle(self, square_pi, sigma, z):
        lams = np.asarray(square_pi.eigenvalues)
        gaps = z - lams[lams < z]
        if sigma == 0.0:
            expected = float(len(gaps))
        else:
            expected = float(np.sum(gaps ** sigma))
        got = riesz.riesz_mean(square_pi, sigma, z).value
        assert got == pytest.approx(expected, rel=1e-12, abs=1e-12)

    def test_truncation_guard(self, square_pi):
        with pytest.raises(TruncationError):
            riesz.riesz_mean(square_pi, 1.0, 200.0001)

    def test_domain_guards(self, square_pi):
        with pytest.raises(DomainError):
            riesz.riesz_mean(square_pi, -0.5, 5.0)
        with pytest.raises(DomainError):
            riesz.riesz_mean(square_pi, 1.0, 0.0)


class TestCounting:
    def test_strict_at_eigenvalue(self, square_pi):
        # N(z) counts lambda_k < z strictly
        assert riesz.counting(square_pi, 5.0) == 1
        assert riesz.counting(square_pi, 5.0000001) == 3
        assert riesz.counting(square_pi, 2.0) == 0
        assert riesz.counting(square_pi, 9.0) == 4

    def test_matches_sigma_zero(self, square_pi):
        for z in (3.0, 7.7, 11.0):
            assert riesz.counting(square_pi, z) == \
                riesz.riesz_mean(square_pi, 0.0, z).value


class TestMeans:
    def test_hand_mean(self, square_pi):
        m = riesz.means(square_pi, 5)
        assert m.mean == pytest.approx(30 / 5, rel=1e-12)
        assert m.mean_sq == pytest.approx(
            (4 + 25 + 25 + 64 + 100) / 5, rel=1e-12)

    def test_power_geometric_harmonic_oracle(self, square_pi):
        k = 7
        lams = np.asarray(square_pi.eigenvalues[:k])
        m = riesz.means(square_pi, k, sigma_list=[0.5, 1.0, 2.0])
        for s in (0.5, 1.0, 2.0):
            assert m.power_means[s] == pytest.approx(
                float(np.mean(lams ** s) ** (1 / s)), rel=1e-12)
        assert m.geometric == pytest.approx(
            float(np.exp(np.mean(np.log(lams)))), rel=1e-12)
        assert m.harmonic == pytest.approx(
            float(1 / np.mean(1 / lams)), rel=1e-12)

    def test_power_mean_monotone_in_order(self, ball3):
        m = riesz.means(ball3, 50, sigma_list=[0.5, 1.0, 1.5, 2.0])
        seq = [m.harmonic, m.geometric] + [m.power_means[s]
                                           for s in (0.5, 1.0, 1.5, 2.0)]
        assert all(a <= b * (1 + 1e-12) for a, b in zip(seq, seq[1:]))

    def test_k_range_guard(self, square_pi):
        with pytest.raises(DomainError):
            riesz.means(square_pi, 0)
        with pytest.raises(DomainError):
            riesz.means(square_pi, len(square_pi) + 1)


class TestDerivativeIdentity:
    @pytest.mark.parametrize("sigma", [1.5, 2.0, 3.0])
    def test_central_difference_matches(self, square_pi, sigma):
        z = 9.5
        fd, rhs = riesz.riesz_derivative_check(square_pi, sigma, z, 1e-6 * z)
        assert fd == pytest.approx(rhs, rel=1e-6)

    def test_sigma_gate(self, square_pi):
        with pytest.raises(DomainError):
            riesz.riesz_derivative_check(square_pi, 0.5, 9.0, 1e-6)


class TestLegendre:
    def test_hand_value(self, square_pi):
        # w = 2.5: floor 2, (2.5 - 2) * lambda_3 + lambda_1 + lambda_2
        assert riesz.legendre_R1(square_pi, 2.5) == pytest.approx(
            0.5 * 5 + 7, rel=1e-12)

    def test_integer_w(self, square_pi):
        assert riesz.legendre_R1(square_pi, 4.0) == pytest.approx(
            2 + 5 + 5 + 8, rel=1e-12)

    def test_matches_sup_definition(self, square_pi):
        # brute-force sup over a dense z grid never exceeds the closed form
        w = 3.7
        zs = np.linspace(0.01, 199.0, 40000)
        vals = [w * z - riesz.riesz_mean(square_pi, 1.0, z).value
                for z in zs]
        closed = riesz.legendre_R1(square_pi, w)
        assert max(vals) <= closed + 1e-9
        assert max(vals) == pytest.approx(closed, rel=1e-3)

    @given(st.floats(min_value=0.01, max_value=40.0))
    @settings(max_examples=300, deadline=None)
    def test_numeric_oracle_exact(self, square_pi, w):
        assert riesz.legendre_R1(square_pi, w) == \
            riesz.legendre_numeric(square_pi, w)

    def test_out_of_range(self, square_pi):
        with pytest.raises(DomainError):
            riesz.legendre_R1(square_pi, len(square_pi) + 0.5)
        with pytest.raises(DomainError):
            riesz.legendre_R1(square_pi, 0.0)


class TestCSigma:
    def test_piecewise_values(self):
        assert riesz.c_sigma(0.5) == 0.25
        assert riesz.c_sigma(1.0) == 1.0
        assert riesz.c_sigma(1.7) == 1.0
        assert riesz.c_sigma(2.0) == 1.0
        assert riesz.c_sigma(4.0) == 2.0

    def test_secant_slope_inequality_hand(self):
        # (1 - y^sigma)/(1 - y) <= C_sigma (1 + y^{sigma-1}) spot checks
        for sigma in (0.5, 1.5, 4.0):
            for y in (0.1, 0.5, 0.9, 1.5, 3.0):
                lhs = (1 - y ** sigma) / (1 - y)
                rhs = riesz.c_sigma(sigma) * (1 + y ** (sigma - 1))
                assert lhs <= rhs + 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            riesz.c_sigma(-0.1)
