"""q-bracket arithmetic at a root of unity and truncated power series.

The deformation parameter lives on the unit circle: either q = exp(i*pi/(p+1))
for an integer order p >= 1, which makes every bracket a ratio of sines and
closes the oscillator algebra in p+1 dimensions, or the undeformed value q = 1,
which behaves as the p -> infinity limit in every operation here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

EVEN = "even"
ODD = "odd"
MIXED = "mixed"


@dataclass(frozen=True)
class Deformation:
    """Deformation parameter q, with its branch encoded by ``p``.

    ``p`` is the root-of-unity order (q = exp(i*theta), theta = pi/(p+1)),
    or None for the undeformed branch (q = 1, theta unset).
    """

    p: int | None
    theta: float | None
    q: complex

    @classmethod
    def root_of_unity(cls, p: int) -> "Deformation":
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"root-of-unity order must be an integer >= 1, got {p!r}")
        theta = math.pi / (p + 1)
        return cls(p=p, theta=theta, q=cmath.exp(1j * theta))

    @classmethod
    def undeformed(cls) -> "Deformation":
        return cls(p=None, theta=None, q=1.0 + 0.0j)

    @property
    def is_deformed(self) -> bool:
        return self.p is not None

    @property
    def dim(self) -> int:
        """Dimension p+1 of the associated oscillator space."""
        if self.p is None:
            raise ValueError("the undeformed branch has no finite dimension")
        return self.p + 1

    def __str__(self) -> str:
        return "q=1" if self.p is None else f"q=exp(i*pi/{self.p + 1})"


def q_bracket(deform: Deformation, a: float) -> float:
    """Evaluate the q-bracket [a] = (q^a - q^(-a)) / (q - q^(-1)).

    On the root-of-unity branch the expression is analytically real and is
    computed directly as sin(a*theta)/sin(theta), avoiding spurious imaginary
    dust; the undeformed branch returns ``a`` itself. [a] vanishes exactly
    when a is a multiple of p+1.
    """
    if not deform.is_deformed:
        return float(a)
    return math.sin(a * deform.theta) / math.sin(deform.theta)


def q_bracket_complex(deform: Deformation, a: float) -> complex:
    """The same bracket through literal complex arithmetic.

    Kept as an independent cross-check of :func:`q_bracket`; its imaginary
    part is numerical residue only.
    """
    q = deform.q
    if q == 1.0 + 0.0j:
        return complex(a)
    return (q**a - q**-a) / (q - 1.0 / q)


def q_factorial(deform: Deformation, n: int) -> float:
    """[n]! = [1][2]...[n]; the empty product is 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    out = 1.0
    for k in range(1, n + 1):
        out *= q_bracket(deform, k)
    return out


def q_double_factorial(deform: Deformation, m: int) -> float:
    """Same-parity chain [m][m-2]... down to [2] or [1]; [0]!! = [1]!! = 1."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    out = 1.0
    k = m
    while k >= 2:  # the odd chain's trailing [1] is always 1
        out *= q_bracket(deform, k)
        k -= 2
    return out


def _infer_parity(coeffs: np.ndarray) -> str:
    odd_zero = not np.any(coeffs[1::2])
    even_zero = not np.any(coeffs[0::2])
    if odd_zero:
        return EVEN
    if even_zero:
        return ODD
    return MIXED


@dataclass(frozen=True, eq=False)
class QPowerSeries:
    """Truncated power series sum_n coeffs[n] x^n with a declared parity.

    ``coeffs`` has length ``truncation_order + 1``; a pure parity means the
    complementary coefficients are exactly zero.
    """

    coeffs: np.ndarray
    truncation_order: int
    parity: str

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=complex)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        if arr.shape != (self.truncation_order + 1,):
            raise ValueError("coeffs length must equal truncation_order + 1")
        if self.parity not in (EVEN, ODD, MIXED):
            raise ValueError(f"unknown parity {self.parity!r}")
        if self.parity == EVEN and np.any(arr[1::2]):
            raise ValueError("even series has a nonzero odd coefficient")
        if self.parity == ODD and np.any(arr[0::2]):
            raise ValueError("odd series has a nonzero even coefficient")

    @classmethod
    def from_coeffs(cls, coeffs, parity: str | None = None) -> "QPowerSeries":
        arr = np.asarray(coeffs, dtype=complex)
        if parity is None:
            parity = _infer_parity(arr)
        return cls(arr, len(arr) - 1, parity)

    def evaluate(self, x: float) -> complex:
        """Horner evaluation at a point."""
        acc = 0.0 + 0.0j
        for c in self.coeffs[::-1]:
            acc = acc * x + c
        return acc

    def shifted(self, k: int = 1) -> "QPowerSeries":
        """Multiply by x^k (degree and truncation order grow by k)."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return QPowerSeries.from_coeffs(np.concatenate([np.zeros(k, dtype=complex), self.coeffs]))

    def __add__(self, other: "QPowerSeries") -> "QPowerSeries":
        n = max(len(self.coeffs), len(other.coeffs))
        out = np.zeros(n, dtype=complex)
        out[: len(self.coeffs)] += self.coeffs
        out[: len(other.coeffs)] += other.coeffs
        return QPowerSeries.from_coeffs(out)

    def __sub__(self, other: "QPowerSeries") -> "QPowerSeries":
        return self + (other * -1.0)

    def __mul__(self, scalar: complex) -> "QPowerSeries":
        return QPowerSeries.from_coeffs(self.coeffs * scalar)

    __rmul__ = __mul__


def q_derive(deform: Deformation, s: QPowerSeries) -> QPowerSeries:
    """Apply the q-derivative to a truncated series.

    The output coefficient of x^(n-1) is [n] * coeffs[n], the truncation
    order drops by one, and a pure parity flips. The derivative of a
    constant series is the zero series.
    """
    flipped = {EVEN: ODD, ODD: EVEN}.get(s.parity, MIXED)
    if s.truncation_order == 0:
        return QPowerSeries(np.zeros(1, dtype=complex), 0, flipped)
    brackets = np.array([q_bracket(deform, n) for n in range(1, s.truncation_order + 1)])
    return QPowerSeries(brackets * s.coeffs[1:], s.truncation_order - 1, flipped)
