"""Riesz means, counting function, eigenvalue averages, and the Legendre
transform of the first-order mean, all evaluated from a :class:`Spectrum`.

Counting is strict: N(z) = #{k : lambda_k < z}, matching the limit of
(z - lambda)_+^sigma as sigma decreases to 0.  Every evaluation point must
stay below the spectrum's completeness threshold.
"""

from __future__ import annotations

import math
import weakref
from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .errors import DomainError, TruncationError
from .spectra import Spectrum


@dataclass(frozen=True)
class RieszEvaluation:
    """Value of R_sigma(z) with the number of contributing eigenvalues."""

    sigma: float
    z: float
    value: float
    contributing: int


@dataclass(frozen=True)
class MeanSet:
    """Arithmetic mean, mean square, and requested power means at index k."""

    k: int
    mean: float
    mean_sq: float
    power_means: dict[float, float] = field(default_factory=dict)
    geometric: float = 0.0
    harmonic: float = 0.0


def riesz_value(spec: Spectrum, sigma: float, z: float) -> tuple[float, int]:
    """Low-level R_sigma(z) as ``(value, count)``.

    Accepts any real sigma; for sigma < 0 the caller must keep z away from
    eigenvalues (the summand has a pole there).  Raises TruncationError for
    z above the completeness threshold.
    """
    if z > spec.complete_below:
        raise TruncationError(
            f"z={z} exceeds completeness threshold {spec.complete_below}")
    if z <= 0:
        raise DomainError(f"z must be positive, got {z}")
    return _kernels.riesz_sum(spec.eigenvalues, float(sigma), float(z))


def riesz_mean(spec: Spectrum, sigma: float, z: float) -> RieszEvaluation:
    """R_sigma(z) = sum (z - lambda_k)_+^sigma; sigma = 0 counts strictly."""
    if sigma < 0:
        raise DomainError(f"sigma must be nonnegative, got {sigma}")
    value, count = riesz_value(spec, sigma, z)
    return RieszEvaluation(sigma=float(sigma), z=float(z),
                           value=value, contributing=count)


def counting(spec: Spectrum, z: float) -> int:
    """Counting function N(z) = #{k : lambda_k < z} (strict)."""
    return riesz_value(spec, 0.0, z)[1]


_prefix_cache: "weakref.WeakKeyDictionary[Spectrum, object]" = \
    weakref.WeakKeyDictionary()


def eigensum_prefix(spec: Spectrum):
    """Cached correctly rounded prefix sums of the eigenvalue list."""
    arr = _prefix_cache.get(spec)
    if arr is None:
        arr = _kernels.prefix_sums(spec.eigenvalues)
        arr.setflags(write=False)
        _prefix_cache[spec] = arr
    return arr


def means(spec: Spectrum, k: int, sigma_list=()) -> MeanSet:
    """Mean, mean square, requested power means, geometric and harmonic
    means of the first k eigenvalues."""
    n = len(spec.eigenvalues)
    if not 1 <= k <= n:
        raise DomainError(f"k must be in 1..{n}, got {k}")
    ev = spec.eigenvalues
    mean = eigensum_prefix(spec)[k - 1] / k
    mean_sq = _kernels.power_sum(ev, k, 2.0) / k
    power = {}
    for sigma in sigma_list:
        if not 0 < sigma <= 2:
            raise DomainError(f"power-mean sigma must be in (0, 2], got {sigma}")
        power[float(sigma)] = (
            _kernels.power_sum(ev, k, float(sigma)) / k) ** (1.0 / sigma)
    geometric = math.exp(math.fsum(math.log(x) for x in ev[:k]) / k)
    harmonic = k / math.fsum(1.0 / x for x in ev[:k])
    return MeanSet(k=k, mean=mean, mean_sq=mean_sq, power_means=power,
                   geometric=geometric, harmonic=harmonic)


def riesz_derivative_check(spec: Spectrum, sigma: float, z: float,
                           h: float) -> tuple[float, float]:
    """Central difference of R_sigma at z versus sigma * R_{sigma-1}(z).

    The two should agree (the derivative identity); comparison is left to
    the caller.  Requires sigma >= 1 and z +/- h inside (0, complete_below].
    """
    if sigma < 1:
        raise DomainError("derivative check requires sigma >= 1")
    if z - h <= 0:
        raise DomainError("z - h must be positive")
    hi, _ = riesz_value(spec, sigma, z + h)
    lo, _ = riesz_value(spec, sigma, z - h)
    fd = (hi - lo) / (2 * h)
    rhs = sigma * riesz_value(spec, sigma - 1.0, z)[0]
    return fd, rhs


def legendre_R1(spec: Spectrum, w: float) -> float:
    """Closed-form Legendre transform of R_1 at w:
    (w - [w]) * lambda_{[w]+1} + [w] * mean(lambda_1..lambda_[w])."""
    if w <= 0:
        raise DomainError(f"w must be positive, got {w}")
    m = int(math.floor(w))
    ev = spec.eigenvalues
    if m + 1 > len(ev):
        raise DomainError(
            f"w={w} needs eigenvalue {m+1}, spectrum has {len(ev)}")
    partial = eigensum_prefix(spec)[m - 1] if m >= 1 else 0.0
    return (w - m) * float(ev[m]) + partial


def legendre_numeric(spec: Spectrum, w: float) -> float:
    """Breakpoint-scan oracle for the Legendre transform of R_1.

    The objective w z - R_1(z) is piecewise linear and concave in z, so its
    supremum is attained at a breakpoint z = lambda_{k+1}.  The scan
    maximizes the breakpoint objective (w - k) lambda_{k+1} + sum_{l<=k}
    lambda_l over all k in exact rational arithmetic, instead of trusting
    the closed-form index [w].  The winning objective is then rendered in
    floating point by the shared breakpoint expression, so equal-valued tie
    indices (repeated eigenvalues) cannot introduce rounding differences.
    """
    if w <= 0:
        raise DomainError(f"w must be positive, got {w}")
    m = int(math.floor(w))
    ev = spec.eigenvalues
    if m + 1 > len(ev):
        raise DomainError(
            f"w={w} needs eigenvalue {m+1}, spectrum has {len(ev)}")
    w_exact = Fraction(w)
    partial = Fraction(0)
    best = None
    best_ks: list[int] = []
    for k in range(len(ev)):
        obj = (w_exact - k) * Fraction(float(ev[k])) + partial
        if best is None or obj > best:
            best = obj
            best_ks = [k]
        elif obj == best:
            best_ks.append(k)
        elif k > w:
            break  # objective is nonincreasing in k past [w]
        partial += Fraction(float(ev[k]))
    # the closed-form index is canonical when it attains the exact maximum
    k = m if m in best_ks else best_ks[0]
    prefix = eigensum_prefix(spec)
    return (w - k) * float(ev[k]) + (prefix[k - 1] if k >= 1 else 0.0)


def c_sigma(sigma: float) -> float:
    """Piecewise constant in the secant-slope inequality:
    sigma/2 on [0, 1), 1 on [1, 2], sigma/2 on (2, inf)."""
    if sigma < 0:
        raise DomainError(f"sigma must be nonnegative, got {sigma}")
    if sigma < 1 or sigma > 2:
        return sigma / 2.0
    return 1.0
