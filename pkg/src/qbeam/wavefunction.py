"""Position-space series for the deformed oscillator states.

The vacuum is a power series with q-double-factorial denominators; excited
levels follow by repeated application of the raising combination
(kappa x - kappa^(-1) d_q) with kappa = 1/sqrt(hbar). Normalization constants
are fixed to 1 (no L^2 normalization: the deformed integration measure is out
of scope here).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fockspace import coherent_state
from .qalgebra import EVEN, ODD, Deformation, QPowerSeries, q_derive, q_double_factorial, q_factorial

UNIT_CONSTANT = "unit_constant"
RAW = "raw"

_DEFAULT_ORDER = 40


@dataclass(frozen=True, eq=False)
class StateSeries:
    """A state as a truncated series in x.

    ``level`` is the oscillator level (None for a coherent combination),
    ``kappa`` = 1/sqrt(hbar), and ``hard_cap`` records the order ceiling
    imposed by the first vanishing double-factorial denominator, if any.
    """

    series: QPowerSeries
    level: int | None
    kappa: float
    normalization: str = UNIT_CONSTANT
    hard_cap: int | None = None


def _hard_cap(deform: Deformation, even_branch: bool) -> int | None:
    """Largest safe truncation order for the retained chain, or None.

    A denominator chain dies at the first m of its parity with
    m = 0 mod (p+1); the series is capped strictly below that degree.
    """
    if not deform.is_deformed:
        return None
    period = deform.p + 1
    if even_branch:
        first_zero = period if period % 2 == 0 else 2 * period
    else:
        first_zero = period if period % 2 == 1 else None
    return None if first_zero is None else first_zero - 1


def ground_series(deform: Deformation, hbar: float = 1.0, requested_order: int = _DEFAULT_ORDER) -> StateSeries:
    """Vacuum wavefunction as a truncated series.

    Root of unity: even p keeps the even-power chain
    sum (-1)^n kappa^(2n) x^(2n) / [2n]!!, odd p the odd-power chain
    sum (-1)^n kappa^(2n) x^(2n+1) / [2n+1]!! (the discarded chain hits a
    vanishing bracket and blows up). Undeformed: the Taylor series of
    exp(-kappa^2 x^2 / 2). A truncation reduced by the hard cap is reported
    on the result, never an error.
    """
    if requested_order < 2:
        raise ValueError(f"requested order must be >= 2, got {requested_order}")
    if hbar <= 0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    kappa = 1.0 / math.sqrt(hbar)
    even_branch = (not deform.is_deformed) or deform.p % 2 == 0
    cap = _hard_cap(deform, even_branch)
    order = requested_order if cap is None else min(requested_order, cap)
    coeffs = np.zeros(order + 1, dtype=complex)
    start = 0 if even_branch else 1
    for m in range(start, order + 1, 2):
        n = (m - start) // 2
        coeffs[m] = (-1.0) ** n * kappa ** (2 * n) / q_double_factorial(deform, m)
    series = QPowerSeries(coeffs, order, EVEN if even_branch else ODD)
    return StateSeries(series=series, level=0, kappa=kappa, hard_cap=cap)


def _raise_once(deform: Deformation, series: QPowerSeries, kappa: float) -> QPowerSeries:
    """One application of (1/sqrt(2)) (kappa x - kappa^(-1) d_q)."""
    lifted = series.shifted(1) * kappa - q_derive(deform, series) * (1.0 / kappa)
    return lifted * (1.0 / math.sqrt(2.0))


def excited_series(deform: Deformation, hbar: float, n: int, order: int = _DEFAULT_ORDER) -> StateSeries:
    """Level-n wavefunction from the raising recurrence.

    Applies the raising combination n times to the vacuum and divides by
    sqrt([n]!); each application raises the polynomial degree by one, which
    the result's truncation order reflects. n is limited to the p+1 levels
    of the deformed space.
    """
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    if deform.is_deformed and n > deform.p:
        raise ValueError(f"level {n} does not exist: the space has p+1 = {deform.dim} levels")
    ground = ground_series(deform, hbar, order)
    series = ground.series
    for _ in range(n):
        series = _raise_once(deform, series, ground.kappa)
    if n:
        series = series * (1.0 / math.sqrt(q_factorial(deform, n)))
    return StateSeries(series=series, level=n, kappa=ground.kappa, hard_cap=ground.hard_cap)


def coherent_series(
    deform: Deformation, hbar: float, alpha: complex, order: int = _DEFAULT_ORDER
) -> StateSeries:
    """Coherent-state wavefunction sum_n c_n psi_n as one combined series."""
    if not deform.is_deformed:
        raise ValueError("the coherent series needs the root-of-unity branch")
    weights = coherent_state(deform, alpha).coeffs
    ground = ground_series(deform, hbar, order)
    level = ground.series
    total = level * weights[0]
    for n in range(1, deform.dim):
        level = _raise_once(deform, level, ground.kappa)
        total = total + level * (weights[n] / math.sqrt(q_factorial(deform, n)))
    return StateSeries(series=total, level=None, kappa=ground.kappa, hard_cap=ground.hard_cap)


def annihilation_residual(deform: Deformation, s: StateSeries, xs) -> float:
    """Max over sample points of |d_q psi(x) + kappa^2 x psi(x)|.

    For an even-branch vacuum the residual series is exactly the first
    chain term left uncancelled by truncation. The odd branch additionally
    carries a constant term: d_q maps its leading x onto 1, which nothing
    cancels, so the published odd chain solves the annihilation equation
    only up to that constant.
    """
    residual = q_derive(deform, s.series) + s.series.shifted(1) * (s.kappa**2)
    return max(abs(residual.evaluate(float(x))) for x in xs)


def evaluate(s: StateSeries, x: float) -> complex:
    """Horner evaluation of the state series at x."""
    return s.series.evaluate(x)
