"""Exact Dirichlet spectra for boxes and balls, plus file-backed spectra.

Every generated ``Spectrum`` carries a completeness threshold
``complete_below``: the generator guarantees that no eigenvalue below it is
missing from the list.  Downstream evaluations must stay below that
threshold; this is the main correctness contract of the whole toolkit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import (
    DomainError,
    EmptySpectrumError,
    MissingVolumeError,
    ResourceLimitError,
    SpectrumFormatError,
    SpectrumValidationError,
)

#: hard cap on generated eigenvalue counts (desk-scale guard)
MAX_EIGENVALUES = 10**7


@dataclass(frozen=True)
class DomainSpec:
    """Parametric description of a canonical domain."""

    kind: str                      # "box" | "ball" | "file"
    dimension: int
    side_lengths: tuple[float, ...] | None = None
    radius: float | None = None
    source_path: str | None = None

    def __post_init__(self):
        if self.kind not in ("box", "ball", "file"):
            raise DomainError(f"unknown domain kind {self.kind!r}")
        if self.dimension < 1:
            raise DomainError("dimension must be >= 1")
        if self.kind == "box":
            if (self.side_lengths is None
                    or len(self.side_lengths) != self.dimension):
                raise DomainError("box needs exactly d side lengths")
            if any(s <= 0 for s in self.side_lengths):
                raise DomainError("box side lengths must be positive")
        if self.kind == "ball":
            if self.radius is None or self.radius <= 0:
                raise DomainError("ball needs a positive radius")


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ordered Dirichlet eigenvalue list, complete below a threshold.

    Multiplicities are represented by repetition; values are kept exactly
    as computed, with no tolerance-based merging.
    """

    dimension: int
    eigenvalues: np.ndarray
    complete_below: float
    domain: DomainSpec
    volume: float | None = None

    def __post_init__(self):
        ev = np.ascontiguousarray(self.eigenvalues, dtype=np.float64)
        ev.setflags(write=False)
        object.__setattr__(self, "eigenvalues", ev)
        if self.dimension < 1:
            raise SpectrumValidationError("dimension must be >= 1")
        if self.complete_below <= 0:
            raise SpectrumValidationError("complete_below must be positive")
        if len(ev) == 0:
            raise SpectrumValidationError("spectrum has no eigenvalues")
        if ev[0] <= 0:
            raise SpectrumValidationError(
                f"eigenvalues must be positive, first is {ev[0]}")
        if np.any(np.diff(ev) < 0):
            i = int(np.argmax(np.diff(ev) < 0))
            raise SpectrumValidationError(
                f"eigenvalues must be nondecreasing (violated at index {i+1})")
        if self.volume is not None and self.volume <= 0:
            raise SpectrumValidationError("volume must be positive if given")

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def lambda_1(self) -> float:
        return float(self.eigenvalues[0])


def box_spectrum(sides, lam_max: float,
                 cap: int = MAX_EIGENVALUES) -> Spectrum:
    """All Dirichlet eigenvalues pi^2 sum(n_i^2/L_i^2) < lam_max, sorted."""
    sides = tuple(float(s) for s in sides)
    if not sides or any(s <= 0 for s in sides):
        raise DomainError("box sides must be positive")
    coeffs = [math.pi**2 / s**2 for s in sides]
    lam_1 = sum(coeffs)
    if lam_max <= lam_1:
        raise EmptySpectrumError(
            f"lam_max={lam_max} is below the first eigenvalue {lam_1}")
    d = len(sides)
    volume = math.prod(sides)
    predicted = (volume * (lam_max / (4 * math.pi))**(d / 2)
                 / specfun.gamma(1 + d / 2))
    if predicted > 2 * cap:
        raise ResourceLimitError(
            f"predicted eigenvalue count {predicted:.3g} exceeds cap {cap}")

    vals: list[float] = []

    def recurse(axis: int, acc: float) -> None:
        c = coeffs[axis]
        n = 1
        while True:
            t = acc + c * n * n
            if t >= lam_max:
                break
            if axis == d - 1:
                if len(vals) >= cap:
                    raise ResourceLimitError(
                        f"eigenvalue count exceeds cap {cap}")
                vals.append(t)
            else:
                recurse(axis + 1, t)
            n += 1

    recurse(0, 0.0)
    vals.sort()
    return Spectrum(
        dimension=d,
        eigenvalues=np.array(vals),
        complete_below=float(lam_max),
        domain=DomainSpec(kind="box", dimension=d, side_lengths=sides),
        volume=volume,
    )


def ball_multiplicity(ell: int, d: int) -> int:
    """Dimension of spherical harmonics of degree ell on S^{d-1}."""
    if ell == 0:
        return 1
    if d == 2:
        return 2
    return ((2 * ell + d - 2) * math.factorial(ell + d - 3)
            // (math.factorial(ell) * math.factorial(d - 2)))


def ball_spectrum(d: int, radius: float, lam_max: float,
                  cap: int = MAX_EIGENVALUES) -> Spectrum:
    """All Dirichlet eigenvalues j_{d/2-1+ell,p}^2 / radius^2 < lam_max.

    Each value is repeated with its spherical-harmonic multiplicity.
    """
    if d < 2:
        raise DomainError("ball_spectrum requires d >= 2")
    if radius <= 0:
        raise DomainError("radius must be positive")
    r2 = radius * radius
    vals: list[float] = []
    ell = 0
    while True:
        nu = d / 2 - 1 + ell
        if specfun.bessel_zero(nu, 1).value**2 / r2 >= lam_max:
            break
        mult = ball_multiplicity(ell, d)
        p = 1
        while True:
            lam = specfun.bessel_zero(nu, p).value**2 / r2
            if lam >= lam_max:
                break
            if len(vals) + mult > cap:
                raise ResourceLimitError(f"eigenvalue count exceeds cap {cap}")
            vals.extend([lam] * mult)
            p += 1
        ell += 1
    if not vals:
        raise EmptySpectrumError(
            f"lam_max={lam_max} is below the first eigenvalue of the ball")
    vals.sort()
    volume = math.pi**(d / 2) * radius**d / specfun.gamma(1 + d / 2)
    return Spectrum(
        dimension=d,
        eigenvalues=np.array(vals),
        complete_below=float(lam_max),
        domain=DomainSpec(kind="ball", dimension=d, radius=radius),
        volume=volume,
    )


def weyl_asymptote(spec: Spectrum, k: int) -> float:
    """Leading-order eigenvalue asymptote 4 pi Gamma(1+d/2)^{2/d} (k/|O|)^{2/d}."""
    if spec.volume is None:
        raise MissingVolumeError("spectrum carries no volume metadata")
    if k < 1:
        raise DomainError("k must be >= 1")
    d = spec.dimension
    return (4 * math.pi * specfun.gamma(1 + d / 2)**(2 / d)
            * k**(2 / d) / spec.volume**(2 / d))


# ---------------------------------------------------------------------------
# file format: header lines "dim: <d>", "complete_below: <v>", optional
# "volume: <v>", then one eigenvalue per line; '#' starts a comment.

def load_spectrum(path: str) -> Spectrum:
    """Parse a spectrum file; validation errors name the first violation."""
    dim = None
    complete_below = None
    volume = None
    values: list[float] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" in line:
                key, _, rest = line.partition(":")
                key = key.strip().lower()
                rest = rest.strip()
                try:
                    if key == "dim":
                        dim = int(rest)
                    elif key == "complete_below":
                        complete_below = float(rest)
                    elif key == "volume":
                        volume = float(rest)
                    else:
                        raise SpectrumFormatError(
                            f"{path}:{lineno}: unknown header {key!r}")
                except ValueError as exc:
                    raise SpectrumFormatError(
                        f"{path}:{lineno}: bad header value: {exc}") from exc
                continue
            try:
                values.append(float(line))
            except ValueError as exc:
                raise SpectrumFormatError(
                    f"{path}:{lineno}: not a number: {line!r}") from exc
    if dim is None:
        raise SpectrumFormatError(f"{path}: missing 'dim' header")
    if complete_below is None:
        raise SpectrumFormatError(f"{path}: missing 'complete_below' header")
    return Spectrum(
        dimension=dim,
        eigenvalues=np.array(values),
        complete_below=complete_below,
        domain=DomainSpec(kind="file", dimension=dim, source_path=str(path)),
        volume=volume,
    )


def write_spectrum(spec: Spectrum, path: str) -> None:
    """Write a spectrum in the text format accepted by :func:`load_spectrum`."""
    with open(path, "w") as fh:
        fh.write(f"dim: {spec.dimension}\n")
        fh.write(f"complete_below: {spec.complete_below!r}\n")
        if spec.volume is not None:
            fh.write(f"volume: {spec.volume!r}\n")
        for lam in spec.eigenvalues:
            fh.write(f"{float(lam)!r}\n")


def spectrum_csv(spec: Spectrum, full_precision: bool = False) -> str:
    """CSV export with columns (k, lambda_k)."""
    fmt = "{:.17g}" if full_precision else "{:.6g}"
    lines = ["k,lambda_k"]
    for k, lam in enumerate(spec.eigenvalues, start=1):
        lines.append(f"{k},{fmt.format(lam)}")
    return "\n".join(lines) + "\n"
