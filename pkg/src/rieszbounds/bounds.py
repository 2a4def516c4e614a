"""Catalog of closed-form spectral bounds and constants.

Every bound is a named, citable evaluation rule with a hard validity gate:
evaluating outside the stated region raises ``ValidityError`` rather than
returning a silently meaningless number.  Formulas are well-defined for any
dimension, but constants above ``MAX_CHECKED_DIMENSION`` involve untested
high-order Bessel zeros and are gated behind ``allow_large_d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import specfun
from .errors import ValidityError

MAX_CHECKED_DIMENSION = 10


def _check_dim(d, allow_large_d=False):
    if int(d) != d or d < 1:
        raise ValidityError(f"dimension must be a positive integer, got {d}")
    if d > MAX_CHECKED_DIMENSION and not allow_large_d:
        raise ValidityError(
            f"d={d} exceeds the checked range 1..{MAX_CHECKED_DIMENSION}; "
            "pass allow_large_d=True to override")
    return int(d)


# ---------------------------------------------------------------------------
# constants

@lru_cache(maxsize=None)
def first_zero_sq(nu: float) -> float:
    """j_{nu,1}^2, cached."""
    return specfun.bessel_zero(nu, 1).value ** 2


@lru_cache(maxsize=None)
def H_d(d: int, allow_large_d: bool = False) -> float:
    """Chiti-type constant 2d / (j_{d/2-1,1}^2 J_{d/2}^2(j_{d/2-1,1}))."""
    d = _check_dim(d, allow_large_d)
    j0 = specfun.bessel_zero(d / 2 - 1, 1).value
    return 2.0 * d / (j0 * j0 * specfun.bessel_j(d / 2, j0) ** 2)


def L_cl(sigma: float, d: int) -> float:
    """Semiclassical constant Gamma(s+1) / ((4 pi)^{d/2} Gamma(s+1+d/2))."""
    if sigma < 0:
        raise ValidityError(f"sigma must be nonnegative, got {sigma}")
    return (specfun.gamma(sigma + 1)
            / ((4 * math.pi) ** (d / 2) * specfun.gamma(sigma + 1 + d / 2)))


def weyl_coeff(d: int, volume: float) -> float:
    """Leading Weyl coefficient 4 pi Gamma(1+d/2)^{2/d} / |Omega|^{2/d}."""
    if volume <= 0:
        raise ValidityError("volume must be positive")
    return 4 * math.pi * specfun.gamma(1 + d / 2) ** (2 / d) / volume ** (2 / d)


@lru_cache(maxsize=None)
def fk_coeff(d: int, allow_large_d: bool = False) -> float:
    """Faber-Krahn/Weyl ratio coefficient 4 Gamma(1+d/2)^{4/d} / j_{d/2-1,1}^2."""
    d = _check_dim(d, allow_large_d)
    return 4 * specfun.gamma(1 + d / 2) ** (4 / d) / first_zero_sq(d / 2 - 1)


@lru_cache(maxsize=None)
def ab_ratio(d: int, allow_large_d: bool = False) -> float:
    """Base ratio j_{d/2,1}^2 / j_{d/2-1,1}^2 of the eigenvalue-doubling bound."""
    d = _check_dim(d, allow_large_d)
    return first_zero_sq(d / 2) / first_zero_sq(d / 2 - 1)


# ---------------------------------------------------------------------------
# bounds on eigenvalue ratios and means

def ab94(d, m, allow_large_d=False):
    """lambda_{2^m}/lambda_1 <= (j_{d/2,1}^2/j_{d/2-1,1}^2)^m."""
    d = _check_dim(d, allow_large_d)
    if int(m) != m or m < 0:
        raise ValidityError(f"m must be a nonnegative integer, got {m}")
    return ab_ratio(d, allow_large_d) ** m


def ab94_avg(d, k, allow_large_d=False):
    """Averaged doubling bound at general k, using m = ceil(log2 k)."""
    d = _check_dim(d, allow_large_d)
    if k < 1:
        raise ValidityError(f"k must be >= 1, got {k}")
    m = math.ceil(math.log2(k)) if k > 1 else 0
    return ab_ratio(d, allow_large_d) ** m / (1 + 2 / d)


def her1(d, k, allow_large_d=False):
    """lambda_{k+1}/lambda_1 <= 1 + (1+d/2)^{2/d} H_d^{2/d} k^{2/d}."""
    d = _check_dim(d, allow_large_d)
    if k < 1:
        raise ValidityError(f"k must be >= 1, got {k}")
    return 1 + (1 + d / 2) ** (2 / d) * H_d(d, allow_large_d) ** (2 / d) \
        * k ** (2 / d)


def her2(d, k, allow_large_d=False):
    """mean(lambda_1..lambda_k)/lambda_1 <= 1 + H_d^{2/d} k^{2/d} / (1+2/d)."""
    d = _check_dim(d, allow_large_d)
    if k < 1:
        raise ValidityError(f"k must be >= 1, got {k}")
    return 1 + H_d(d, allow_large_d) ** (2 / d) / (1 + 2 / d) * k ** (2 / d)


def cheng_yang(d, k, allow_large_d=False):
    """lambda_{k+1}/lambda_1 <= (1 + 4/d) k^{2/d}."""
    d = _check_dim(d, allow_large_d)
    if k < 1:
        raise ValidityError(f"k must be >= 1, got {k}")
    return (1 + 4 / d) * k ** (2 / d)


def cheng_yang2(d, k, allow_large_d=False):
    """Refined ratio bound, valid for k >= d + 1."""
    d = _check_dim(d, allow_large_d)
    if k < d + 1:
        raise ValidityError(f"requires k >= d+1 = {d+1}, got k={k}")
    return ((1 + 4 / d)
            * math.sqrt(1 + 8 / (d + 1) + 8 / (d + 1) ** 2)
            * (d + 1) ** (-2 / d) * k ** (2 / d))


def cheng_yang2_avg(d, k, allow_large_d=False):
    """Averaged refined ratio bound (division by 1 + 2/d)."""
    return cheng_yang2(d, k, allow_large_d) / (1 + 2 / d)


def fk_weyl(d, k, allow_large_d=False):
    """Asymptotic ratio expression 4 Gamma(1+d/2)^{4/d} k^{2/d} / j_{d/2-1,1}^2."""
    d = _check_dim(d, allow_large_d)
    if k < 1:
        raise ValidityError(f"k must be >= 1, got {k}")
    return fk_coeff(d, allow_large_d) * k ** (2 / d)


def fk_weyl_avg(d, k, allow_large_d=False):
    """Averaged asymptotic ratio expression."""
    return fk_weyl(d, k, allow_large_d) / (1 + 2 / d)


def berezin_li_yau(d, volume, k, allow_large_d=False):
    """Lower bound on mean(lambda_1..lambda_k)."""
    d = _check_dim(d, allow_large_d)
    if k < 1:
        raise ValidityError(f"k must be >= 1, got {k}")
    return weyl_coeff(d, volume) * k ** (2 / d) / (1 + 2 / d)


# ---------------------------------------------------------------------------
# bounds on Riesz means and the counting function

def riesz_upper(sigma, d, volume, z, allow_large_d=False):
    """Upper bound L_cl(sigma, d) |Omega| z^{sigma + d/2} for sigma >= 2."""
    d = _check_dim(d, allow_large_d)
    if sigma < 2:
        raise ValidityError(f"requires sigma >= 2, got {sigma}")
    if volume <= 0:
        raise ValidityError("volume must be positive")
    if z < 0:
        raise ValidityError("z must be nonnegative")
    return L_cl(sigma, d) * volume * z ** (sigma + d / 2)


def riesz_lower_main(sigma, d, lam1, z, allow_large_d=False):
    """Lower bound (2s/d)^s lam1^{-d/2} (z/(1+2s/d))^{s+d/2}, sigma >= 2,
    valid for z >= (1 + 2 sigma/d) lam1."""
    d = _check_dim(d, allow_large_d)
    if sigma < 2:
        raise ValidityError(f"requires sigma >= 2, got {sigma}")
    if lam1 <= 0:
        raise ValidityError("lam1 must be positive")
    threshold = (1 + 2 * sigma / d) * lam1
    if z < threshold:
        raise ValidityError(f"requires z >= {threshold}, got {z}")
    return ((2 * sigma / d) ** sigma * lam1 ** (-d / 2)
            * (z / (1 + 2 * sigma / d)) ** (sigma + d / 2))


def riesz_lower_sub2(sigma, d, lam1, z, allow_large_d=False):
    """Lower bounds on R_sigma for 0 <= sigma < 2, with their thresholds."""
    d = _check_dim(d, allow_large_d)
    if lam1 <= 0:
        raise ValidityError("lam1 must be positive")
    if not 0 <= sigma < 2:
        raise ValidityError(f"requires 0 <= sigma < 2, got {sigma}")
    if sigma >= 1:
        threshold = (1 + (2 * sigma + 2) / d) * lam1
        if z < threshold:
            raise ValidityError(f"requires z >= {threshold}, got {z}")
        return ((2 * sigma + 2) ** sigma * d ** (d / 2)
                / (d + 2 * sigma + 2) ** (sigma + d / 2)
                * lam1 ** (-d / 2) * z ** (sigma + d / 2))
    threshold = (1 + (2 * sigma + 4) / d) * lam1
    if z < threshold:
        raise ValidityError(f"requires z >= {threshold}, got {z}")
    return ((1 + d / 4) * (2 * sigma + 4) ** (sigma + 1) * d ** (d / 2)
            / (d + 2 * sigma + 4) ** (sigma + 1 + d / 2)
            * lam1 ** (-d / 2) * z ** (sigma + d / 2))


def riesz_lower_hermi(sigma, d, lam1, z, allow_large_d=False):
    """Lower bound H_d^{-1} lam1^{-d/2} B(sigma, d) (z - lam1)_+^{sigma+d/2},
    sigma >= 1, with B the Beta-type Gamma ratio."""
    d = _check_dim(d, allow_large_d)
    if sigma < 1:
        raise ValidityError(f"requires sigma >= 1, got {sigma}")
    if lam1 <= 0:
        raise ValidityError("lam1 must be positive")
    gap = max(z - lam1, 0.0)
    return (H_d(d, allow_large_d) ** -1 * lam1 ** (-d / 2)
            * specfun.gamma(1 + sigma) * specfun.gamma(1 + d / 2)
            / specfun.gamma(1 + sigma + d / 2)
            * gap ** (sigma + d / 2))


def counting_lower(d, lam1, z, allow_large_d=False):
    """N(z) >= (z / ((1+4/d) lam1))^{d/2}, valid z >= (1+4/d) lam1."""
    return counting_lower_j(d, 1, lam1, z, allow_large_d)


def counting_lower_j(d, j, mean_j, z, allow_large_d=False):
    """N(z) >= j (z / ((1+4/d) mean_j))^{d/2}, valid z >= (1+4/d) mean_j."""
    d = _check_dim(d, allow_large_d)
    if int(j) != j or j < 1:
        raise ValidityError(f"j must be a positive integer, got {j}")
    if mean_j <= 0:
        raise ValidityError("mean_j must be positive")
    threshold = (1 + 4 / d) * mean_j
    if z < threshold:
        raise ValidityError(f"requires z >= {threshold}, got {z}")
    return j * (z / threshold) ** (d / 2)


def lambda_next_over_mean(d, j, k, allow_large_d=False):
    """lambda_{k+1}/mean(lambda_1..lambda_j) <= (1+4/d)(k/j)^{2/d}, k >= j >= 1."""
    d = _check_dim(d, allow_large_d)
    if int(j) != j or j < 1:
        raise ValidityError(f"j must be a positive integer, got {j}")
    if int(k) != k or k < j:
        raise ValidityError(f"requires k >= j, got k={k}, j={j}")
    return (1 + 4 / d) * (k / j) ** (2 / d)


def mean_ratio(d, j, k, allow_large_d=False):
    """mean_k/mean_j <= 2 ((1+d/4)/(1+d/2))^{1+2/d} (k/j)^{2/d},
    valid for k >= j (1+d/2)/(1+d/4)."""
    d = _check_dim(d, allow_large_d)
    if int(j) != j or j < 1:
        raise ValidityError(f"j must be a positive integer, got {j}")
    threshold = j * (1 + d / 2) / (1 + d / 4)
    if k < threshold:
        raise ValidityError(f"requires k >= {threshold}, got k={k}")
    return (2 * ((1 + d / 4) / (1 + d / 2)) ** (1 + 2 / d)
            * (k / j) ** (2 / d))


def abhh(d, k, allow_large_d=False):
    """mean_k/lambda_1 <= (d+5)/2^{2/d} ((d+4)/((d+1)(d+2)))^{1+2/d} k^{2/d},
    valid for k >= (d+1)(1+d/2)/(1+d/4)."""
    d = _check_dim(d, allow_large_d)
    threshold = (d + 1) * (1 + d / 2) / (1 + d / 4)
    if k < threshold:
        raise ValidityError(f"requires k >= {threshold}, got k={k}")
    return ((d + 5) / 2 ** (2 / d)
            * ((d + 4) / ((d + 1) * (d + 2))) ** (1 + 2 / d)
            * k ** (2 / d))


def abhh_next(d, k, allow_large_d=False):
    """lambda_{k+1}/lambda_1 bound obtained by chaining the averaged bound
    with Yang's simplification; the inequality is guaranteed for
    k >= (d+1)(1+d/2)/(1+d/4), the expression is defined for all k >= 1."""
    d = _check_dim(d, allow_large_d)
    if k < 1:
        raise ValidityError(f"k must be >= 1, got {k}")
    return ((d + 4) ** (2 + 2 / d) * (d + 5)
            / (2 ** (2 / d) * d * (d + 1) ** (1 + 2 / d)
               * (d + 2) ** (1 + 2 / d))
            * k ** (2 / d))


def mean_sq_envelope(d, mean_k, allow_large_d=False):
    """(lower, upper) envelope for the mean square of the first k eigenvalues:
    mean_k^2 <= mean_sq_k <= (1+2/d)^2/(1+4/d) mean_k^2."""
    d = _check_dim(d, allow_large_d)
    if mean_k <= 0:
        raise ValidityError("mean_k must be positive")
    sq = mean_k * mean_k
    return sq, (1 + 2 / d) ** 2 / (1 + 4 / d) * sq


def simple_p9(d, k, allow_large_d=False):
    """mean_k/lambda_1 <= 2 ((1+d/4)/(1+d/2))^{1+2/d} k^{2/d}, k >= 2."""
    return mean_ratio(d, 1, k, allow_large_d)


def cy_av(d, k, allow_large_d=False):
    """Averaged Cheng-Yang bound (d+4)/(d+2) k^{2/d} on mean_k/lambda_1."""
    d = _check_dim(d, allow_large_d)
    if k < 1:
        raise ValidityError(f"k must be >= 1, got {k}")
    return (d + 4) / (d + 2) * k ** (2 / d)


def simple_p9_coeff(d, allow_large_d=False):
    """Coefficient of k^{2/d} in :func:`simple_p9`."""
    d = _check_dim(d, allow_large_d)
    return 2 * ((1 + d / 4) / (1 + d / 2)) ** (1 + 2 / d)


def cy_av_coeff(d, allow_large_d=False):
    """Coefficient of k^{2/d} in :func:`cy_av`."""
    d = _check_dim(d, allow_large_d)
    return (d + 4) / (d + 2)


# ---------------------------------------------------------------------------
# machine-readable catalog

@dataclass(frozen=True)
class Bound:
    """A named bound: citation, kind, argument names, validity text, rule."""

    id: str
    kind: str
    cite: str
    params: tuple[str, ...]
    validity: str
    fn: object


_RATIO = "upper_on_lambda_ratio"
_MEAN = "upper_on_mean_ratio"
_RLOW = "lower_on_riesz"
_RUP = "upper_on_riesz"
_NLOW = "lower_on_counting"

CATALOG: dict[str, Bound] = {b.id: b for b in [
    Bound("ab94", _RATIO, "Ashbaugh & Benguria (1994) eigenvalue-doubling bound",
          ("d", "m"), "d >= 1, m >= 0", ab94),
    Bound("ab94_avg", _MEAN, "averaged Ashbaugh-Benguria bound, m = ceil(log2 k)",
          ("d", "k"), "d >= 1, k >= 1", ab94_avg),
    Bound("her1", _RATIO, "Hermi Weyl-type ratio bound",
          ("d", "k"), "k >= 1", her1),
    Bound("her2", _MEAN, "Hermi Weyl-type mean bound",
          ("d", "k"), "k >= 1", her2),
    Bound("cheng_yang", _RATIO, "Cheng & Yang ratio bound",
          ("d", "k"), "k >= 1", cheng_yang),
    Bound("cheng_yang2", _RATIO, "Cheng & Yang refined ratio bound",
          ("d", "k"), "k >= d+1", cheng_yang2),
    Bound("cheng_yang2_avg", _MEAN, "averaged Cheng-Yang refined bound",
          ("d", "k"), "k >= d+1", cheng_yang2_avg),
    Bound("fk_weyl", _RATIO, "Weyl law with Rayleigh-Faber-Krahn normalization",
          ("d", "k"), "k >= 1 (asymptotic expression)", fk_weyl),
    Bound("fk_weyl_avg", _MEAN, "averaged Weyl/Faber-Krahn expression",
          ("d", "k"), "k >= 1 (asymptotic expression)", fk_weyl_avg),
    Bound("berezin_li_yau", _RLOW, "Berezin-Li-Yau lower bound on the mean",
          ("d", "volume", "k"), "k >= 1, volume > 0", berezin_li_yau),
    Bound("riesz_upper", _RUP, "Laptev-Weidl semiclassical upper bound",
          ("sigma", "d", "volume", "z"), "sigma >= 2", riesz_upper),
    Bound("riesz_lower_main", _RLOW,
          "monotonicity lower bound on the Riesz mean, sigma >= 2",
          ("sigma", "d", "lam1", "z"),
          "sigma >= 2, z >= (1+2 sigma/d) lam1", riesz_lower_main),
    Bound("riesz_lower_sub2", _RLOW,
          "monotonicity lower bound on the Riesz mean, 0 <= sigma < 2",
          ("sigma", "d", "lam1", "z"),
          "z >= (1+(2 sigma+2)/d) lam1 for sigma >= 1, "
          "z >= (1+(2 sigma+4)/d) lam1 for sigma < 1", riesz_lower_sub2),
    Bound("riesz_lower_hermi", _RLOW,
          "Chiti-constant lower bound on the Riesz mean",
          ("sigma", "d", "lam1", "z"), "sigma >= 1", riesz_lower_hermi),
    Bound("counting_lower", _NLOW, "counting-function lower bound",
          ("d", "lam1", "z"), "z >= (1+4/d) lam1", counting_lower),
    Bound("counting_lower_j", _NLOW,
          "counting-function lower bound anchored at the j-th mean",
          ("d", "j", "mean_j", "z"), "z >= (1+4/d) mean_j", counting_lower_j),
    Bound("lambda_next_over_mean", _RATIO,
          "ratio of lambda_{k+1} to the j-th mean",
          ("d", "j", "k"), "k >= j >= 1", lambda_next_over_mean),
    Bound("mean_ratio", _MEAN, "universal Weyl-type bound on ratios of means",
          ("d", "j", "k"), "k >= j (1+d/2)/(1+d/4)", mean_ratio),
    Bound("abhh", _MEAN,
          "mean bound via the Ashbaugh-Benguria (d+5)/(d+1) estimate",
          ("d", "k"), "k >= (d+1)(1+d/2)/(1+d/4)", abhh),
    Bound("abhh_next", _RATIO,
          "ratio bound chaining the mean bound with Yang's simplification",
          ("d", "k"), "guaranteed for k >= (d+1)(1+d/2)/(1+d/4)", abhh_next),
    Bound("simple_p9", _MEAN, "mean-ratio bound specialized to j = 1",
          ("d", "k"), "k >= 2", simple_p9),
    Bound("cy_av", _MEAN, "averaged Cheng-Yang mean bound",
          ("d", "k"), "k >= 1", cy_av),
]}


def evaluate(bound_id: str, **kwargs) -> float:
    """Evaluate a catalog bound by id; unknown ids raise KeyError."""
    bound = CATALOG[bound_id]
    return bound.fn(**kwargs)


def catalog_dump(d_list=(1, 2, 3, 4, 5, 6, 7)) -> dict:
    """Machine-readable catalog with per-dimension constant values."""
    entries = [
        {"id": b.id, "kind": b.kind, "cite": b.cite,
         "params": list(b.params), "validity": b.validity}
        for b in CATALOG.values()
    ]
    constants = {
        str(d): {
            "H_d": H_d(d),
            "L_cl_sigma2": L_cl(2.0, d),
            "fk_coeff": fk_coeff(d),
            "ab_ratio": ab_ratio(d),
            "weyl_coeff_unit_volume": weyl_coeff(d, 1.0),
        }
        for d in d_list
    }
    return {"bounds": entries, "constants": constants}
