"""Second-moment beam analysis on sampled 1-D intensity profiles.

Width means the 2-sigma radius (sigma^2 the intensity-weighted variance), so
an ideal Gaussian of 1/e^2 radius w measures width w and quality factor 1.
Profiles live either in space or in spatial frequency; a frequency width
times the wavelength is a far-field divergence.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import hermite

from .exceptions import AllZeroIntensity, IngestionError

SPACE = "space"
SPATIAL_FREQUENCY = "spatial_frequency"

_MIN_POINTS = 8
_SPACING_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class SampledProfile:
    """Intensity samples on a uniform grid, tagged with their domain."""

    xs: np.ndarray
    intensities: np.ndarray
    domain_tag: str

    def __post_init__(self):
        xs = np.array(self.xs, dtype=float)
        ys = np.array(self.intensities, dtype=float)
        xs.setflags(write=False)
        ys.setflags(write=False)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "intensities", ys)
        if self.domain_tag not in (SPACE, SPATIAL_FREQUENCY):
            raise ValueError(f"unknown domain tag {self.domain_tag!r}")
        if xs.ndim != 1 or xs.size < _MIN_POINTS:
            raise ValueError(f"grid needs at least {_MIN_POINTS} points, got {xs.size}")
        if ys.shape != xs.shape:
            raise ValueError("grid and intensity lengths differ")
        steps = np.diff(xs)
        if steps[0] <= 0 or np.any(np.abs(steps - steps[0]) > _SPACING_RTOL * abs(steps[0])):
            raise ValueError("grid must be uniformly increasing")
        if np.any(ys < 0):
            raise ValueError("intensities must be non-negative")
        if not np.any(ys > 0):
            raise AllZeroIntensity("profile carries no power")

    @property
    def spacing(self) -> float:
        return float(self.xs[1] - self.xs[0])


def _trapz(values: np.ndarray, dx: float) -> float:
    return float(dx * (values.sum() - 0.5 * (values[0] + values[-1])))


def centroid_and_width(profile: SampledProfile) -> tuple[float, float]:
    """Intensity centroid and second-moment width (2-sigma) of a profile.

    Uses trapezoidal quadrature on the uniform grid, which is exact enough
    for the smooth, well-sampled profiles this package synthesizes.
    """
    x, w = profile.xs, profile.intensities
    dx = profile.spacing
    total = _trapz(w, dx)
    mean = _trapz(x * w, dx) / total
    var = _trapz((x - mean) ** 2 * w, dx) / total
    return mean, 2.0 * math.sqrt(max(var, 0.0))


def divergence(profile: SampledProfile, wavelength: float) -> float:
    """Far-field divergence from a spatial-frequency profile: lambda * width."""
    if profile.domain_tag != SPATIAL_FREQUENCY:
        raise ValueError("divergence needs a spatial-frequency profile")
    if wavelength <= 0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    _, width = centroid_and_width(profile)
    return wavelength * width


def m2_from_profiles(near: SampledProfile, far: SampledProfile, wavelength: float) -> float:
    """Beam quality factor (pi / lambda) * divergence * waist width."""
    if near.domain_tag != SPACE:
        raise ValueError("near profile must be in the space domain")
    _, waist = centroid_and_width(near)
    theta = divergence(far, wavelength)
    return math.pi / wavelength * theta * waist


def synth_gaussian(w: float, grid, domain: str = SPACE) -> SampledProfile:
    """Gaussian intensity exp(-2 x^2 / w^2) sampled on the grid."""
    xs = np.asarray(grid, dtype=float)
    return SampledProfile(xs, np.exp(-2.0 * xs**2 / w**2), domain)


def synth_hermite_gaussian(n: int, w: float, grid, domain: str = SPACE) -> SampledProfile:
    """Intensity of the order-n Hermite-Gaussian mode of waist w.

    Amplitude H_n(sqrt(2) x / w) exp(-x^2 / w^2); its analytic Fourier dual
    is the same mode with waist 1/(pi w), which makes exact near/far fixture
    pairs.
    """
    if n < 0:
        raise ValueError(f"mode order must be >= 0, got {n}")
    xs = np.asarray(grid, dtype=float)
    amp = hermite.hermval(math.sqrt(2.0) * xs / w, [0.0] * n + [1.0]) * np.exp(-(xs**2) / w**2)
    return SampledProfile(xs, amp**2, domain)


def read_profile_csv(path, domain_tag: str) -> SampledProfile:
    """Read an `x,intensity` CSV (header optional) into a profile.

    The domain tag is supplied by the caller, never inferred from the file.
    """
    rows: list[tuple[float, float]] = []
    try:
        with open(path, newline="") as fh:
            for lineno, record in enumerate(csv.reader(fh), start=1):
                if not record or (len(record) == 1 and not record[0].strip()):
                    continue
                if len(record) != 2:
                    raise IngestionError(f"{path}:{lineno}: expected two columns, got {len(record)}")
                try:
                    rows.append((float(record[0]), float(record[1])))
                except ValueError:
                    if lineno == 1:  # header row
                        continue
                    raise IngestionError(f"{path}:{lineno}: non-numeric row {record!r}") from None
    except OSError as exc:
        raise IngestionError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise IngestionError(f"{path}: no data rows")
    xs, ys = zip(*rows)
    try:
        return SampledProfile(np.array(xs), np.array(ys), domain_tag)
    except AllZeroIntensity:
        raise
    except ValueError as exc:
        raise IngestionError(f"{path}: {exc}") from exc
