"""Special-function kernel: Gamma, Bessel J of the first kind, and its
positive zeros.

Gamma and J evaluation are delegated to scipy.special, which meets the
accuracy targets (relative 1e-12 for Gamma on [0.5, 50], absolute 1e-12 for
J on the needed range) with well-tested implementations.  The zero finder
is our own: zeros are located sequentially by sign-change bracketing and
polished with a safeguarded Newton iteration, then residual-verified.  A
closed-form spherical-Bessel path for half-integer orders is kept as an
independent cross-check.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from scipy.special import gamma as _gamma
from scipy.special import jv as _jv

from .errors import ConvergenceError, DomainError

#: residual acceptance for a computed zero: |J_nu(x)| <= RESIDUAL_TOL * max(1, |J_nu'(x)|)
RESIDUAL_TOL = 1e-10
_NEWTON_TOL = 1e-12
_SCAN_STEP = 0.5  # safe: consecutive zeros of J_nu, nu >= -1/2, are > pi/2 apart


def gamma(x: float) -> float:
    """Gamma function for positive arguments."""
    if x <= 0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    return float(_gamma(x))


def bessel_j(nu: float, x: float) -> float:
    """Bessel function of the first kind J_nu(x), nu >= -1/2, x >= 0."""
    if nu < -0.5:
        raise DomainError(f"bessel_j requires nu >= -1/2, got {nu}")
    if x < 0:
        raise DomainError(f"bessel_j requires x >= 0, got {x}")
    return float(_jv(nu, x))


def bessel_j_prime(nu: float, x: float) -> float:
    """d/dx J_nu(x) via the recurrence J_nu' = J_{nu-1} - (nu/x) J_nu."""
    if x <= 0:
        raise DomainError(f"bessel_j_prime requires x > 0, got {x}")
    return float(_jv(nu - 1.0, x)) - (nu / x) * bessel_j(nu, x)


def bessel_j_half_integer(nu: float, x: float) -> float:
    """Closed-form J_nu for half-integer nu = m + 1/2, m >= 0.

    Upward recurrence from J_{-1/2} = sqrt(2/(pi x)) cos x and
    J_{1/2} = sqrt(2/(pi x)) sin x.  Independent of scipy; used as a
    cross-check oracle.
    """
    m = nu - 0.5
    if m < 0 or m != int(m):
        raise DomainError(f"nu must be a nonnegative half-integer, got {nu}")
    if x <= 0:
        raise DomainError(f"requires x > 0, got {x}")
    scale = math.sqrt(2.0 / (math.pi * x))
    j_prev = scale * math.cos(x)   # J_{-1/2}
    j_cur = scale * math.sin(x)    # J_{+1/2}
    order = 0.5
    for _ in range(int(m)):
        j_prev, j_cur = j_cur, (2.0 * order / x) * j_cur - j_prev
        order += 1.0
    return j_cur


def mcmahon_asymptote(nu: float, p: int) -> float:
    """Leading McMahon term (p + nu/2 - 1/4) * pi for the p-th zero."""
    return (p + nu / 2.0 - 0.25) * math.pi


@dataclass(frozen=True)
class BesselZero:
    """The p-th positive zero of J_nu."""

    order: float
    index: int
    value: float


_zero_cache: dict[float, list[float]] = {}
_cache_lock = threading.Lock()


def _refine(nu: float, a: float, b: float) -> float:
    """Safeguarded Newton within the bracket [a, b] (bisection fallback)."""
    fa = bessel_j(nu, a)
    x = 0.5 * (a + b)
    for _ in range(200):
        f = bessel_j(nu, x)
        if f == 0.0:
            return x
        if (f > 0) == (fa > 0):
            a = x
        else:
            b = x
        df = bessel_j_prime(nu, x)
        x_new = x - f / df if df != 0.0 else 0.5 * (a + b)
        if not a < x_new < b:
            x_new = 0.5 * (a + b)
        if abs(x_new - x) <= _NEWTON_TOL * max(1.0, abs(x)):
            return x_new
        x = x_new
    raise ConvergenceError(
        f"zero refinement for nu={nu} did not converge in [{a}, {b}]")


def _extend_zeros(nu: float, zeros: list[float], p: int) -> None:
    """Append zeros of J_nu until at least p are cached."""
    while len(zeros) < p:
        a = (zeros[-1] if zeros else 0.0) + 0.05
        fa = bessel_j(nu, a)
        while fa == 0.0:
            a += 1e-3
            fa = bessel_j(nu, a)
        b = a + _SCAN_STEP
        fb = bessel_j(nu, b)
        while (fb > 0) == (fa > 0):
            a, fa = b, fb
            b = a + _SCAN_STEP
            fb = bessel_j(nu, b)
            if fb == 0.0:
                b += 1e-3
                fb = bessel_j(nu, b)
        z = _refine(nu, a, b)
        resid = abs(bessel_j(nu, z))
        if resid > RESIDUAL_TOL * max(1.0, abs(bessel_j_prime(nu, z))):
            raise ConvergenceError(
                f"residual {resid:.3e} too large for zero {len(zeros)+1} "
                f"of J_{nu}")
        zeros.append(z)


def bessel_zero(nu: float, p: int) -> BesselZero:
    """The p-th positive zero j_{nu,p}, accurate to 1e-10 absolute."""
    if nu < -0.5:
        raise DomainError(f"bessel_zero requires nu >= -1/2, got {nu}")
    if p < 1:
        raise DomainError(f"bessel_zero requires p >= 1, got {p}")
    key = float(nu)
    with _cache_lock:
        zeros = _zero_cache.setdefault(key, [])
        if len(zeros) < p:
            _extend_zeros(key, zeros, p)
        value = zeros[p - 1]
    return BesselZero(order=key, index=p, value=value)
