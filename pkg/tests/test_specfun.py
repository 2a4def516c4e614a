"""Special-function kernel: values against independent oracles (mpmath and
the closed-form half-integer recurrence), zero residuals, and domain gates."""

import concurrent.futures
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rieszbounds import specfun
from rieszbounds.errors import DomainError

mpmath.mp.dps = 30


class TestGamma:
    def test_integer_factorials(self):
        for n in range(1, 15):
            assert specfun.gamma(n) == pytest.approx(
                math.factorial(n - 1), rel=1e-13)

    def test_half_integer(self):
        assert specfun.gamma(0.5) == pytest.approx(math.sqrt(math.pi),
                                                   rel=1e-14)
        assert specfun.gamma(1.5) == pytest.approx(math.sqrt(math.pi) / 2,
                                                   rel=1e-14)

    @given(st.floats(min_value=0.5, max_value=50.0))
    @settings(max_examples=200, deadline=None)
    def test_against_mpmath(self, x):
        assert specfun.gamma(x) == pytest.approx(
            float(mpmath.gamma(x)), rel=1e-12)

    @given(st.floats(min_value=0.5, max_value=49.0))
    @settings(max_examples=200, deadline=None)
    def test_recurrence(self, x):
        assert specfun.gamma(x + 1) == pytest.approx(
            x * specfun.gamma(x), rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.gamma(0.0)
        with pytest.raises(DomainError):
            specfun.gamma(-1.5)


class TestBesselJ:
    @given(st.sampled_from([0.0, 0.5, 1.0, 1.5, 2.0, 3.5, 7.0, 12.5]),
           st.floats(min_value=1e-3, max_value=60.0))
    @settings(max_examples=300, deadline=None)
    def test_against_mpmath(self, nu, x):
        assert specfun.bessel_j(nu, x) == pytest.approx(
            float(mpmath.besselj(nu, x)), abs=1e-12)

    @given(st.sampled_from([0.5, 1.5, 2.5, 3.5, 4.5]),
           st.floats(min_value=0.5, max_value=40.0))
    @settings(max_examples=200, deadline=None)
    def test_against_half_integer_closed_form(self, nu, x):
        assert specfun.bessel_j(nu, x) == pytest.approx(
            specfun.bessel_j_half_integer(nu, x), abs=1e-10)

    @given(st.sampled_from([0.0, 1.0, 2.5, 5.0]),
           st.floats(min_value=0.1, max_value=40.0))
    @settings(max_examples=100, deadline=None)
    def test_prime_against_finite_difference(self, nu, x):
        h = 1e-6
        fd = (specfun.bessel_j(nu, x + h) - specfun.bessel_j(nu, x - h)) \
            / (2 * h)
        assert specfun.bessel_j_prime(nu, x) == pytest.approx(fd, abs=1e-8)

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.bessel_j(-1.0, 1.0)
        with pytest.raises(DomainError):
            specfun.bessel_j(0.0, -1.0)
        with pytest.raises(DomainError):
            specfun.bessel_j_half_integer(1.0, 2.0)


class TestBesselZeros:
    def test_first_zeros_reference(self):
        # classical reference values
        assert specfun.bessel_zero(0.0, 1).value == pytest.approx(
            2.404825557695773, abs=1e-10)
        assert specfun.bessel_zero(1.0, 1).value == pytest.approx(
            3.831705970207512, abs=1e-10)
        assert specfun.bessel_zero(0.0, 2).value == pytest.approx(
            5.520078110286311, abs=1e-10)

    @pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5, 10.0, 38.5])
    def test_against_mpmath_oracle(self, nu):
        for p in (1, 2, 5, 10):
            ours = specfun.bessel_zero(nu, p).value
            oracle = float(mpmath.besseljzero(nu, p))
            assert ours == pytest.approx(oracle, abs=1e-9)

    def test_residual_small(self):
        for nu in (0.0, 3.0, 17.5):
            for p in (1, 4, 9):
                z = specfun.bessel_zero(nu, p).value
                assert abs(specfun.bessel_j(nu, z)) <= \
                    specfun.RESIDUAL_TOL * max(
                        1.0, abs(specfun.bessel_j_prime(nu, z)))

    def test_zeros_interlace_and_separate(self):
        zeros = [specfun.bessel_zero(2.0, p).value for p in range(1, 20)]
        gaps = [b - a for a, b in zip(zeros, zeros[1:])]
        assert all(g > math.pi / 2 for g in gaps)

    def test_mcmahon_asymptote_approached(self):
        errs = [abs(specfun.bessel_zero(1.0, p).value
                    - specfun.mcmahon_asymptote(1.0, p))
                for p in (5, 20, 80)]
        assert errs[0] > errs[1] > errs[2]
        # leading correction is (4 nu^2 - 1)/(8 x) ~ 1.5e-3 at p = 80
        assert errs[2] < 2e-3

    def test_concurrent_access_consistent(self):
        def grab(p):
            return specfun.bessel_zero(6.0, p).value

        with concurrent.futures.ThreadPoolExecutor(8) as pool:
            results = list(pool.map(grab, [((i * 7) % 30) + 1
                                           for i in range(120)]))
        for i, p in enumerate([((i * 7) % 30) + 1 for i in range(120)]):
            assert results[i] == specfun.bessel_zero(6.0, p).value

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.bessel_zero(-0.75, 1)
        with pytest.raises(DomainError):
            specfun.bessel_zero(0.0, 0)
