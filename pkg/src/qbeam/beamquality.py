"""Closed-form deformed beam quality factor and the nonlinear-medium relations.

Units are the caller's: wavelength and waist radius share one length unit,
divergences are radians, and the coupling beta_j carries squared angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import ConstraintViolation
from .fockspace import CLOSED_FORM, UncertaintyReport
from .qalgebra import Deformation

# Radicand values above this (negative) threshold are treated as exact zeros
# so that states sitting on the admissibility boundary do not trip the guard.
_RADICAND_TOL = 1e-12
# Radicand dust below this magnitude is snapped to zero: near the boundary the
# radicand carries ~1e-15 of rounding noise which sqrt would blow up to ~1e-8.
_RADICAND_SNAP = 1e-13

LITERAL = "literal"
INVERSION = "inversion"


@dataclass(frozen=True)
class BeamGeometry:
    """Waist-plane description of a beam: wavelength, waist radius, location."""

    wavelength: float
    waist_radius: float
    waist_location: float = 0.0
    divergence: float | None = None

    def __post_init__(self):
        if self.wavelength <= 0:
            raise ValueError(f"wavelength must be positive, got {self.wavelength}")
        if self.waist_radius <= 0:
            raise ValueError(f"waist radius must be positive, got {self.waist_radius}")
        if self.divergence is not None and self.divergence <= 0:
            raise ValueError(f"divergence must be positive, got {self.divergence}")

    @property
    def diffraction_limited_divergence(self) -> float:
        return self.wavelength / (math.pi * self.waist_radius)


@dataclass(frozen=True)
class MediumCoupling:
    """Self-focusing coupling beta*J with the route that produced it."""

    beta_j: float
    source: str  # LITERAL (published closed form) or INVERSION


@dataclass(frozen=True)
class MediumInference:
    """Both beta*J routes side by side, with their absolute difference."""

    literal: MediumCoupling
    inversion: MediumCoupling
    difference: float


def _sin_theta(deform: Deformation) -> float:
    return math.sin(deform.theta)


def _checked_radical(deform: Deformation, alpha2: float) -> float:
    """sqrt(1 - |alpha|^4 sin^2(theta)), guarding the reality constraint."""
    radicand = 1.0 - alpha2**2 * _sin_theta(deform) ** 2
    if radicand < -_RADICAND_TOL:
        bound = 1.0 / _sin_theta(deform)
        raise ConstraintViolation(
            f"|alpha|^2 = {alpha2:.9g} exceeds the admissible bound "
            f"{bound:.9g} for {deform}",
            bound=bound,
        )
    if radicand < _RADICAND_SNAP:
        return 0.0
    return math.sqrt(radicand)


def mq2_closed(deform: Deformation, alpha: complex) -> float:
    """Closed-form deformed beam quality factor of the coherent state.

    Root of unity: | sqrt(1 - |alpha|^4 sin^2(theta))
    - (1 - cos(theta)) |alpha|^2 |, which is at most 1 on the admissible
    domain. Undeformed: exactly 1 (the coherent state is the ideal Gaussian).
    Raises ConstraintViolation when the radicand is negative.
    """
    if not deform.is_deformed:
        return 1.0
    a2 = abs(alpha) ** 2
    radical = _checked_radical(deform, a2)
    return abs(radical - (1.0 - math.cos(deform.theta)) * a2)


def uncertainty_closed(deform: Deformation, alpha: complex, hbar: float = 1.0) -> UncertaintyReport:
    """Uncertainty report from the closed forms (mean-field path).

    Both variances equal (hbar/2) |(cos(theta) - 1) |alpha|^2 + radical|; the
    closed-form state saturates the deformed uncertainty bound, so the
    product equals (hbar/2) * commutator_mean by construction.
    """
    if hbar <= 0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    if deform.is_deformed:
        a2 = abs(alpha) ** 2
        expr = abs((math.cos(deform.theta) - 1.0) * a2 + _checked_radical(deform, a2))
    else:
        expr = 1.0
    half = 0.5 * hbar * expr
    return UncertaintyReport(
        mean_x=math.sqrt(2.0 * hbar) * complex(alpha).real,
        mean_p=math.sqrt(2.0 * hbar) * complex(alpha).imag,
        var_x=half,
        var_p=half,
        product=half,
        commutator_mean=expr,
        mq2=expr,
        path=CLOSED_FORM,
    )


def golden_table(p_max: int) -> list[tuple[int, float]]:
    """Reference (p, M^2) pairs at |alpha| = 1: M^2 = |2 cos(pi/(p+1)) - 1|.

    Intentionally independent of :func:`mq2_closed` so the two can be checked
    against each other.
    """
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    return [(p, abs(2.0 * math.cos(math.pi / (p + 1)) - 1.0)) for p in range(1, p_max + 1)]


def _order_admits(p: int, alpha2: float) -> bool:
    return math.sin(math.pi / (p + 1)) <= 1.0 / alpha2 + 1e-15


def min_order_for_alpha(alpha: complex) -> int:
    """Smallest order p keeping the closed form real for this amplitude.

    Any p >= 1 works for |alpha|^2 <= 1; otherwise the bound is
    p >= pi / arcsin(1/|alpha|^2) - 1, refined against the exact predicate
    to absorb floating-point dust.
    """
    a2 = abs(alpha) ** 2
    if a2 <= 1.0:
        return 1
    p = max(1, math.ceil(math.pi / math.asin(1.0 / a2) - 1.0 - 1e-9))
    while not _order_admits(p, a2):
        p += 1
    while p > 1 and _order_admits(p - 1, a2):
        p -= 1
    return p


def max_alpha_for_order(deform: Deformation) -> float:
    """Largest admissible |alpha|^2 for the given order: 1/sin(pi/(p+1)).

    The undeformed branch imposes no bound and returns infinity.
    """
    if not deform.is_deformed:
        return math.inf
    return 1.0 / _sin_theta(deform)


def m_eff_squared(m2: float, geom: BeamGeometry, medium: MediumCoupling) -> float:
    """Effective beam quality after a self-focusing medium.

    M_eff^2 = sqrt(M^4 - (pi^2/lambda^2) w0^2 beta_j); a negative argument
    (over-strong focusing) raises ConstraintViolation.
    """
    arg = m2**2 - (math.pi**2 / geom.wavelength**2) * geom.waist_radius**2 * medium.beta_j
    if arg < -_RADICAND_TOL:
        raise ConstraintViolation(
            f"focusing term exceeds M^4 = {m2**2:.9g} (argument {arg:.9g})"
        )
    return math.sqrt(max(arg, 0.0))


def theta_q(deform: Deformation, alpha: complex, geom: BeamGeometry) -> float:
    """Deformed far-field divergence: (lambda / (pi w0)) * M_q^2."""
    return geom.diffraction_limited_divergence * mq2_closed(deform, alpha)


def beta_j_inferred(deform: Deformation, alpha: complex, geom: BeamGeometry) -> MediumInference:
    """Infer the medium coupling that would produce this deformed beam.

    Two routes are reported. The inversion route assumes an ideal Gaussian
    input (M^2 = 1) and self-consistently inverts the effective-quality
    relation: beta_j = (1 - M_q^4) lambda^2 / (pi^2 w0^2); it round-trips
    through :func:`m_eff_squared` exactly and is the normative value. The
    literal route evaluates the published closed form
    beta_j = (lambda^2/(pi^2 w0^2)) |alpha|^4 sin^2(theta)
    (1 + 4 sqrt(1 - |alpha|^4 sin^2(theta)) / |alpha|^2 - 2)
    verbatim as a diagnostic; the two do not agree in general and the
    absolute difference is part of the result.
    """
    mq2 = mq2_closed(deform, alpha)
    scale = geom.wavelength**2 / (math.pi**2 * geom.waist_radius**2)
    inversion = (1.0 - mq2**2) * scale
    if deform.is_deformed:
        a2 = abs(alpha) ** 2
        s2 = _sin_theta(deform) ** 2
        # |alpha|^4 s2 (1 + 4 r / |alpha|^2 - 2) without the 1/|alpha|^2 singularity
        literal = scale * s2 * (4.0 * a2 * _checked_radical(deform, a2) - a2**2)
    else:
        literal = 0.0
    return MediumInference(
        literal=MediumCoupling(beta_j=literal, source=LITERAL),
        inversion=MediumCoupling(beta_j=inversion, source=INVERSION),
        difference=abs(literal - inversion),
    )
