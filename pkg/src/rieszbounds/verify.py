"""Inequality verification harness.

Sweeps every cataloged inequality over computed spectra and parameter
grids, recording pass/fail with worst-margin witnesses.  The margin
convention is uniform: for an inequality ``big >= small``,

    margin = (big - small) / max(1, |big|)

and a point passes iff ``margin >= -SLACK``.  Every margin is computed by a
scalar function registered in ``MARGINS``; re-evaluating a reported witness
through :func:`reevaluate` therefore reproduces the margin exactly.

A corrupted-spectrum negative control is part of the standard suite: the
suite is only green if the genuine checks pass *and* the corrupted twin
fails at least one check (guarding against vacuously true sweeps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

import numpy as np

from . import bounds, riesz, spectra
from .errors import ConfigError
from .riesz import eigensum_prefix, riesz_value
from .spectra import Spectrum

#: relative numerical slack on all inequality checks
SLACK = 1e-9

#: relative offset used when a limit z -> lambda_{k+1} from below is intended
LIMIT_OFFSET = 1e-12


@dataclass(frozen=True)
class VerifyConfig:
    z_points: int = 200
    z_max_frac: float = 0.95
    z_max: float | None = None
    sigma_grid: tuple[float, ...] = (0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 5.0)
    j_count: int = 12
    k_count: int = 40
    hoelder_samples: int = 60
    moment_k_count: int = 8
    seed: int = 0
    inject_corruption: bool = False
    control_z_points: int = 40
    control_j_count: int = 4


@dataclass
class CheckResult:
    """Outcome of one inequality id swept over all spectra and grids."""

    id: str
    grid: str
    n_points: int
    passed: bool
    worst_margin: float
    witness: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    controls: list[dict]
    config: VerifyConfig

    @property
    def negative_control_ok(self) -> bool:
        # vacuously true for an empty spectrum set
        return all(c["n_failed"] >= 1 for c in self.controls)

    @property
    def all_passed(self) -> bool:
        return (all(c.passed for c in self.checks)
                and self.negative_control_ok)

    def to_json_dict(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "negative_control_ok": self.negative_control_ok,
            "checks": [asdict(c) for c in self.checks],
            "controls": self.controls,
        }

    def to_text(self) -> str:
        lines = [f"{'inequality':24s} {'points':>8s} {'status':>6s} "
                 f"{'worst margin':>14s}  witness"]
        for c in self.checks:
            wit = ", ".join(f"{k}={v}" for k, v in c.witness.items())
            lines.append(f"{c.id:24s} {c.n_points:8d} "
                         f"{'PASS' if c.passed else 'FAIL':>6s} "
                         f"{c.worst_margin: .6e}  {wit}")
        for ctl in self.controls:
            status = "ok" if ctl["n_failed"] >= 1 else "VACUOUS"
            lines.append(f"negative control [{ctl['spectrum']}]: "
                         f"{ctl['n_failed']}/{ctl['n_checks']} checks failed "
                         f"({status})")
        lines.append("suite result: "
                     + ("ALL PASS" if self.all_passed else "FAILURES"))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# scalar margin functions (witness-reproducible)

def _margin(big, small):
    return (big - small) / max(1.0, abs(big))


def _mean(spec, j):
    return eigensum_prefix(spec)[j - 1] / j


def margin_thm21_diff1(spec, sigma, z):
    rs = riesz_value(spec, sigma, z)[0]
    rsm1 = riesz_value(spec, sigma - 1.0, z)[0]
    return _margin(rsm1, (1 + spec.dimension / 4) * rs / z)


def margin_thm21_diff2(spec, sigma, z):
    rs = riesz_value(spec, sigma, z)[0]
    rsm1 = riesz_value(spec, sigma - 1.0, z)[0]
    return _margin(rsm1, (1 + spec.dimension / (2 * sigma)) * rs / z)


def _central_difference(spec, sigma, z, h):
    hi = riesz_value(spec, sigma, z + h)[0]
    lo = riesz_value(spec, sigma, z - h)[0]
    return (hi - lo) / (2 * h)


def margin_thm21_deriv1(spec, sigma, z, h):
    fd = _central_difference(spec, sigma, z, h)
    rs = riesz_value(spec, sigma, z)[0]
    return _margin(fd, (1 + spec.dimension / 4) * sigma * rs / z)


def margin_thm21_deriv2(spec, sigma, z, h):
    fd = _central_difference(spec, sigma, z, h)
    rs = riesz_value(spec, sigma, z)[0]
    return _margin(fd, (sigma + spec.dimension / 2) * rs / z)


def margin_thm21_mono1(spec, sigma, z1, z2):
    p = sigma * (1 + spec.dimension / 4)
    f1 = riesz_value(spec, sigma, z1)[0] / z1 ** p
    f2 = riesz_value(spec, sigma, z2)[0] / z2 ** p
    return _margin(f2, f1)


def margin_thm21_mono2(spec, sigma, z1, z2):
    p = sigma + spec.dimension / 2
    f1 = riesz_value(spec, sigma, z1)[0] / z1 ** p
    f2 = riesz_value(spec, sigma, z2)[0] / z2 ** p
    return _margin(f2, f1)


def margin_cor23_sandwich(spec, sigma, z, form):
    d = spec.dimension
    rs = riesz_value(spec, sigma, z)[0]
    if form == "upper":
        ub = bounds.riesz_upper(sigma, d, spec.volume, z)
        return _margin(ub, rs)
    lb = bounds.riesz_lower_main(sigma, d, spec.lambda_1, z)
    return _margin(rs, lb)


def margin_aizenman_lieb_ratio(spec, sigma, z):
    d = spec.dimension
    lhs = (riesz_value(spec, sigma - 1.0, z)[0]
           / (bounds.L_cl(sigma - 1.0, d) * z ** (sigma - 1 + d / 2)))
    rhs = (riesz_value(spec, sigma, z)[0]
           / (bounds.L_cl(sigma, d) * z ** (sigma + d / 2)))
    return _margin(lhs, rhs)


def margin_cor26_lower(spec, sigma, z, form):
    d = spec.dimension
    lb = bounds.riesz_lower_sub2(sigma, d, spec.lambda_1, z)
    if form == "direct":
        return _margin(riesz_value(spec, sigma, z)[0], lb)
    # middle link of the sigma = 1 chain: (1 + d/4) R_2(z)/z >= lb
    mid = (1 + d / 4) * riesz_value(spec, 2.0, z)[0] / z
    return _margin(mid, lb)


def margin_eq213_lower(spec, sigma, z):
    lb = bounds.riesz_lower_hermi(sigma, spec.dimension, spec.lambda_1, z)
    return _margin(riesz_value(spec, sigma, z)[0], lb)


def margin_cor29_r2(spec, j, z):
    d = spec.dimension
    mean_j = _mean(spec, j)
    lb = (j * z ** (2 + d / 2)
          / ((1 + d / 4) ** 2 * ((1 + 4 / d) * mean_j) ** (d / 2)))
    return _margin(riesz_value(spec, 2.0, z)[0], lb)


def margin_cor29_r1(spec, j, z):
    d = spec.dimension
    mean_j = _mean(spec, j)
    lb = (j * z ** (1 + d / 2)
          / ((1 + d / 4) * ((1 + 4 / d) * mean_j) ** (d / 2)))
    return _margin(riesz_value(spec, 1.0, z)[0], lb)


def margin_cor29_counting(spec, j, z):
    d = spec.dimension
    lb = bounds.counting_lower_j(d, j, _mean(spec, j), z)
    return _margin(float(riesz.counting(spec, z)), lb)


def margin_eq224_ratio(spec, j, k):
    bound = (bounds.lambda_next_over_mean(spec.dimension, j, k)
             * _mean(spec, j))
    return _margin(bound, float(spec.eigenvalues[k]))


def margin_yang_simplified(spec, k):
    bound = (1 + 4 / spec.dimension) * _mean(spec, k)
    return _margin(bound, float(spec.eigenvalues[k]))


def margin_hoelder_chain(spec, form, z, sigma=None, sigma0=None,
                         sigma1=None, sigma2=None):
    d = spec.dimension
    if form == "logconvex":
        t = (sigma2 - sigma1) / (sigma2 - sigma0)
        r0 = riesz_value(spec, sigma0, z)[0]
        r1 = riesz_value(spec, sigma1, z)[0]
        r2 = riesz_value(spec, sigma2, z)[0]
        return _margin(r0 ** t * r2 ** (1 - t), r1)
    if form == "counting":
        rsm1 = riesz_value(spec, sigma - 1.0, z)[0]
        rs = riesz_value(spec, sigma, z)[0]
        lb = rsm1 ** sigma / rs ** (sigma - 1.0)
        return _margin(float(riesz.counting(spec, z)), lb)
    # form == "counting2": sigma >= 2 counting bound
    rs = riesz_value(spec, sigma, z)[0]
    lb = ((d + 2 * sigma) / (2 * sigma)) ** sigma * z ** (-sigma) * rs
    return _margin(float(riesz.counting(spec, z)), lb)


def margin_cor31_mean_ratio(spec, j, k):
    bound = bounds.mean_ratio(spec.dimension, j, k) * _mean(spec, j)
    return _margin(bound, _mean(spec, k))


def margin_cor32_abhh(spec, k):
    bound = bounds.abhh(spec.dimension, k) * spec.lambda_1
    return _margin(bound, _mean(spec, k))


def margin_eq36_next(spec, k):
    bound = bounds.abhh_next(spec.dimension, k) * spec.lambda_1
    return _margin(bound, float(spec.eigenvalues[k]))


def margin_eq37_discrim(spec, k, form):
    m = riesz.means(spec, k)
    lo, hi = bounds.mean_sq_envelope(spec.dimension, m.mean)
    if form == "lower":
        return _margin(m.mean_sq, lo)
    return _margin(hi, m.mean_sq)


def _moment(spec, k, sigma):
    # sigma = 0 denotes the geometric mean, -1 the harmonic mean
    if sigma == -1.0:
        return riesz.means(spec, k).harmonic
    if sigma == 0.0:
        return riesz.means(spec, k).geometric
    return riesz.means(spec, k, sigma_list=[sigma]).power_means[sigma]


def margin_moment_ordering(spec, k, s_lo, s_hi):
    return _margin(_moment(spec, k, s_hi), _moment(spec, k, s_lo))


def margin_moment_interpolation(spec, k, mu, sigma, tau):
    a = (tau - sigma) / (tau - mu)
    b = (sigma - mu) / (tau - mu)
    m_mu = _moment(spec, k, mu)
    m_tau = _moment(spec, k, tau)
    m_sig = _moment(spec, k, sigma)
    return _margin((m_mu ** mu) ** a * (m_tau ** tau) ** b, m_sig ** sigma)


MARGINS = {
    "thm21_diff1": margin_thm21_diff1,
    "thm21_diff2": margin_thm21_diff2,
    "thm21_deriv1": margin_thm21_deriv1,
    "thm21_deriv2": margin_thm21_deriv2,
    "thm21_mono1": margin_thm21_mono1,
    "thm21_mono2": margin_thm21_mono2,
    "cor23_sandwich": margin_cor23_sandwich,
    "aizenman_lieb_ratio": margin_aizenman_lieb_ratio,
    "cor26_lower": margin_cor26_lower,
    "eq213_lower": margin_eq213_lower,
    "cor29_r2": margin_cor29_r2,
    "cor29_r1": margin_cor29_r1,
    "cor29_counting": margin_cor29_counting,
    "eq224_ratio": margin_eq224_ratio,
    "yang_simplified": margin_yang_simplified,
    "hoelder_chain": margin_hoelder_chain,
    "cor31_mean_ratio": margin_cor31_mean_ratio,
    "cor32_abhh": margin_cor32_abhh,
    "eq36_next": margin_eq36_next,
    "eq37_discrim": margin_eq37_discrim,
    "moment_ordering": margin_moment_ordering,
    "moment_interpolation": margin_moment_interpolation,
}


#: checks covering the core differential/monotonicity statements
THEOREM_IDS = ("thm21_diff1", "thm21_diff2", "thm21_deriv1", "thm21_deriv2",
               "thm21_mono1", "thm21_mono2")

#: all remaining corollary/consequence checks
COROLLARY_IDS = tuple(i for i in MARGINS if i not in THEOREM_IDS)


def reevaluate(spec: Spectrum, check_id: str, witness: dict) -> float:
    """Recompute the margin for a reported witness tuple."""
    params = {k: v for k, v in witness.items() if k != "spectrum"}
    return MARGINS[check_id](spec, **params)


# ---------------------------------------------------------------------------
# grids

def z_grid(spec: Spectrum, cfg: VerifyConfig, n: int | None = None):
    """Logarithmic z grid in (lambda_1, z_hi], nudged off eigenvalues."""
    n = n or cfg.z_points
    z_hi = cfg.z_max if cfg.z_max is not None \
        else cfg.z_max_frac * spec.complete_below
    if z_hi > spec.complete_below:
        raise ConfigError(
            f"z_max={z_hi} exceeds completeness threshold "
            f"{spec.complete_below}")
    lam1 = spec.lambda_1
    if z_hi <= lam1:
        raise ConfigError(f"z_max={z_hi} is not above lambda_1={lam1}")
    grid = np.geomspace(lam1 * (1 + 1e-6), z_hi, n)
    ev = spec.eigenvalues
    out = []
    for z in grid:
        idx = np.searchsorted(ev, z)
        near = []
        if idx < len(ev):
            near.append(abs(ev[idx] - z))
        if idx > 0:
            near.append(abs(z - ev[idx - 1]))
        while near and min(near) < 1e-9 * z:
            z *= 1 + 2e-9
            idx = np.searchsorted(ev, z)
            near = [abs(ev[i] - z) for i in (idx - 1, idx)
                    if 0 <= i < len(ev)]
        out.append(float(min(z, spec.complete_below)))
    return out


def _index_list(n_max: int, count: int):
    """Roughly geometric list of distinct indices in 1..n_max."""
    if n_max < 1:
        return []
    raw = np.unique(np.geomspace(1, n_max, count).round().astype(int))
    return [int(i) for i in raw if 1 <= i <= n_max]


# ---------------------------------------------------------------------------
# check builders: lists of (check_id, grid description, points)

def _build_points(spec: Spectrum, cfg: VerifyConfig, n_z: int):
    d = spec.dimension
    lam1 = spec.lambda_1
    n = len(spec)
    ev = spec.eigenvalues
    zs = z_grid(spec, cfg, n_z)
    s_le2 = [s for s in cfg.sigma_grid if 0 < s <= 2]
    s_ge2 = [s for s in cfg.sigma_grid if s >= 2]
    rng = np.random.default_rng(cfg.seed)
    out = []

    out.append(("thm21_diff1", f"sigma in {s_le2}, {n_z} log z points",
                [{"sigma": s, "z": z} for s in s_le2 for z in zs]))
    out.append(("thm21_diff2", f"sigma in {s_ge2}, {n_z} log z points",
                [{"sigma": s, "z": z} for s in s_ge2 for z in zs]))

    def fd_points(sigmas):
        pts = []
        for s in sigmas:
            for z in zs:
                h = 1e-6 * z
                idx = np.searchsorted(ev, z)
                near = [abs(ev[i] - z) for i in (idx - 1, idx)
                        if 0 <= i < len(ev)]
                if near and min(near) <= 10 * h:
                    continue
                if z + h <= spec.complete_below:
                    pts.append({"sigma": s, "z": z, "h": h})
        return pts

    out.append(("thm21_deriv1", "sigma in {1.5, 2}, central differences",
                fd_points([s for s in s_le2 if s >= 1.5])))
    out.append(("thm21_deriv2", "sigma > 2, central differences",
                fd_points([s for s in s_ge2 if s > 2])))

    pairs = list(zip(zs[:-1], zs[1:]))
    out.append(("thm21_mono1", f"sigma in {s_le2}, consecutive z pairs",
                [{"sigma": s, "z1": z1, "z2": z2}
                 for s in s_le2 for z1, z2 in pairs]))
    out.append(("thm21_mono2", f"sigma in {s_ge2}, consecutive z pairs",
                [{"sigma": s, "z1": z1, "z2": z2}
                 for s in s_ge2 for z1, z2 in pairs]))

    if spec.volume is not None:
        pts = []
        for s in s_ge2:
            thr = (1 + 2 * s / d) * lam1
            for z in zs:
                pts.append({"sigma": s, "z": z, "form": "upper"})
                if z >= thr:
                    pts.append({"sigma": s, "z": z, "form": "lower"})
        out.append(("cor23_sandwich",
                    f"sigma in {s_ge2}, upper all z, lower above threshold",
                    pts))
    out.append(("aizenman_lieb_ratio", f"sigma in {s_ge2}, {n_z} z points",
                [{"sigma": s, "z": z} for s in s_ge2 for z in zs]))

    pts = []
    for s in [x for x in cfg.sigma_grid if x < 2] + [0.0]:
        thr = (1 + (2 * s + 2) / d) * lam1 if s >= 1 \
            else (1 + (2 * s + 4) / d) * lam1
        pts.extend({"sigma": s, "z": z, "form": "direct"}
                   for z in zs if z >= thr)
    chain_thr = (1 + 4 / d) * lam1
    pts.extend({"sigma": 1.0, "z": z, "form": "chain"}
               for z in zs if z >= chain_thr)
    out.append(("cor26_lower", "sigma < 2 incl. counting form, z above "
                "regime thresholds", pts))

    out.append(("eq213_lower", "sigma >= 1 grid, all z",
                [{"sigma": s, "z": z}
                 for s in cfg.sigma_grid if s >= 1 for z in zs]))

    j_list = _index_list(n, cfg.j_count)
    pts29 = [{"j": j, "z": z} for j in j_list for z in zs
             if z >= (1 + 4 / d) * _mean(spec, j)]
    out.append(("cor29_r2", f"j in {j_list}, z above (1+4/d) mean_j", pts29))
    out.append(("cor29_r1", f"j in {j_list}, z above (1+4/d) mean_j",
                list(pts29)))
    out.append(("cor29_counting", f"j in {j_list}, z above (1+4/d) mean_j",
                list(pts29)))

    out.append(("eq224_ratio", f"j in {j_list}, all k in j..{n-1}",
                [{"j": j, "k": k} for j in j_list
                 for k in range(j, n)]))
    out.append(("yang_simplified", f"all k in 1..{n-1}",
                [{"k": k} for k in range(1, n)]))

    hoelder = []
    for _ in range(cfg.hoelder_samples):
        s0 = float(rng.uniform(0.0, 2.0))
        s2 = s0 + float(rng.uniform(0.5, 3.0))
        t = float(rng.uniform(0.05, 0.95))
        s1 = t * s0 + (1 - t) * s2
        hoelder.append({"form": "logconvex", "z": float(rng.choice(zs)),
                        "sigma0": s0, "sigma1": s1, "sigma2": s2})
    for s in (1.5, 2.0, 3.0):
        hoelder.extend({"form": "counting", "sigma": s, "z": z}
                       for z in zs[::5])
    for s in (2.0, 3.0, 5.0):
        hoelder.extend({"form": "counting2", "sigma": s, "z": z}
                       for z in zs[::5])
    out.append(("hoelder_chain", "random sigma triples + counting forms",
                hoelder))

    k_list = _index_list(n, cfg.k_count)
    pts31 = [{"j": j, "k": k} for j in j_list for k in k_list
             if k >= j * (1 + d / 2) / (1 + d / 4)]
    out.append(("cor31_mean_ratio", "(j, k) pairs above validity threshold",
                pts31))

    thresh = (d + 1) * (1 + d / 2) / (1 + d / 4)
    k_min = int(math.ceil(thresh))
    out.append(("cor32_abhh", f"k in {k_min}..{n}",
                [{"k": k} for k in range(k_min, n + 1)]))
    out.append(("eq36_next", f"k in {k_min}..{n-1}",
                [{"k": k} for k in range(k_min, n)]))

    out.append(("eq37_discrim", "all k, both envelope sides",
                [{"k": k, "form": f} for k in range(1, n + 1)
                 for f in ("lower", "upper")]))

    mk = _index_list(n, cfg.moment_k_count)
    orders = [-1.0, 0.0, 0.5, 1.0, 1.5, 2.0]
    out.append(("moment_ordering", "consecutive power-mean orders",
                [{"k": k, "s_lo": lo, "s_hi": hi}
                 for k in mk for lo, hi in zip(orders[:-1], orders[1:])
                 if k >= 2]))
    triples = [(0.25, 0.5, 1.0), (0.5, 1.0, 2.0), (1.0, 1.5, 2.0),
               (0.5, 1.5, 2.0)]
    out.append(("moment_interpolation", "sampled (mu, sigma, tau) triples",
                [{"k": k, "mu": a, "sigma": b, "tau": c}
                 for k in mk for a, b, c in triples if k >= 2]))
    return out


def _sweep(label: str, spec: Spectrum, cfg: VerifyConfig, n_z: int,
           ids=None):
    """Run margin sweeps on one spectrum, optionally restricted to ids.

    Returns {check_id: (grid, n_points, worst_margin, witness)}.
    """
    results = {}
    for check_id, grid, points in _build_points(spec, cfg, n_z):
        if ids is not None and check_id not in ids:
            continue
        fn = MARGINS[check_id]
        worst = math.inf
        witness = {}
        for params in points:
            m = fn(spec, **params)
            if m < worst:
                worst = m
                witness = dict(params)
                witness["spectrum"] = label
        results[check_id] = (grid, len(points), worst, witness)
    return results


def corrupt_spectrum(spec: Spectrum) -> Spectrum:
    """Negative-control twin: first eigenvalue scaled down tenfold."""
    ev = np.array(spec.eigenvalues)
    ev[0] *= 0.1
    return Spectrum(dimension=spec.dimension, eigenvalues=ev,
                    complete_below=spec.complete_below, domain=spec.domain,
                    volume=spec.volume)


def default_spectra() -> dict[str, Spectrum]:
    """The standard verification set: two boxes, the unit disk, the unit ball."""
    return {
        "square_1x1": spectra.box_spectrum([1.0, 1.0], 5000.0),
        "box_pi_halfpi": spectra.box_spectrum(
            [math.pi, math.pi / 2], 5000.0),
        "disk_r1": spectra.ball_spectrum(2, 1.0, 2000.0),
        "ball3_r1": spectra.ball_spectrum(3, 1.0, 2000.0),
    }


def sweep(specs: dict[str, Spectrum], cfg: VerifyConfig,
          ids=None) -> list[CheckResult]:
    """Run the (optionally restricted) check set, merged across spectra."""
    merged: dict[str, list] = {}
    order: list[str] = []
    for label, spec in specs.items():
        for check_id, res in _sweep(label, spec, cfg, cfg.z_points,
                                    ids=ids).items():
            if check_id not in merged:
                merged[check_id] = []
                order.append(check_id)
            merged[check_id].append(res)

    checks = []
    for check_id in order:
        parts = merged[check_id]
        n_points = sum(p[1] for p in parts)
        nonempty = [p for p in parts if p[1] > 0]
        if nonempty:
            grid, _, worst, witness = min(nonempty, key=lambda p: p[2])
        else:
            grid, worst, witness = parts[0][0], math.inf, {}
        checks.append(CheckResult(
            id=check_id, grid=grid, n_points=n_points,
            passed=bool(n_points > 0 and worst >= -SLACK),
            worst_margin=float(worst) if n_points else math.nan,
            witness=witness))
    return checks


def run_suite(specs: dict[str, Spectrum],
              config: VerifyConfig | None = None) -> VerificationReport:
    """Aggregate all checks over all spectra, plus the negative control."""
    cfg = config or VerifyConfig()
    if cfg.z_points < 2:
        raise ConfigError("z_points must be >= 2")
    if cfg.z_max is not None:
        for label, spec in specs.items():
            if cfg.z_max > spec.complete_below:
                raise ConfigError(
                    f"z_max={cfg.z_max} exceeds completeness threshold "
                    f"{spec.complete_below} of spectrum {label!r}")

    if cfg.inject_corruption:
        specs = {f"corrupted:{k}": corrupt_spectrum(v)
                 for k, v in specs.items()}

    checks = sweep(specs, cfg)

    controls = []
    for label, spec in specs.items():
        ctl_cfg = VerifyConfig(
            z_points=cfg.control_z_points, z_max_frac=cfg.z_max_frac,
            sigma_grid=cfg.sigma_grid, j_count=cfg.control_j_count,
            k_count=cfg.control_j_count, hoelder_samples=10,
            moment_k_count=3, seed=cfg.seed)
        twin = corrupt_spectrum(spec)
        res = _sweep(f"control:{label}", twin, ctl_cfg, ctl_cfg.z_points)
        n_failed = sum(1 for _, npts, worst, _ in res.values()
                       if npts > 0 and worst < -SLACK)
        controls.append({"spectrum": label, "n_checks": len(res),
                         "n_failed": n_failed})

    return VerificationReport(checks=checks, controls=controls, config=cfg)
