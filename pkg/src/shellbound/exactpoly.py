"""Exact rational polynomials, the Gegenbauer family, and counting bounds.

Every scalar here is a fractions.Fraction and every identity is exact; this
module never touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Poly",
    "binom",
    "harmonic_dim",
    "gegenbauer",
    "cumulative_gegenbauer",
    "cumulative_gegenbauer_closed",
    "fisher_bound",
    "shell_bound",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient a choose b, with the convention binom(a, b) = 0 for b > a."""
    if a < 0 or b < 0:
        raise ValueError("binom expects non-negative arguments")
    if b > a:
        return 0
    return math.comb(a, b)


class Poly:
    """Dense univariate polynomial with Fraction coefficients.

    coeffs[i] is the coefficient of u**i; trailing zeros are trimmed.  The zero
    polynomial has empty coeffs and degree None (no -1 sentinel).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def __call__(self, u: Scalar) -> Fraction:
        u = Fraction(u)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def reflected(self) -> "Poly":
        """The polynomial p(-u)."""
        return Poly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"{c}*u^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "Poly(" + " + ".join(terms) + ")"


def harmonic_dim(n: int, i: int) -> int:
    """Dimension of the space of degree-i harmonic polynomials on the (n-1)-sphere."""
    if n < 2:
        raise ValueError("harmonic_dim requires dimension n >= 2")
    if i < 0:
        raise ValueError("degree must be non-negative")
    second = binom(n + i - 3, i - 2) if i >= 2 else 0
    return binom(n + i - 1, i) - second


@lru_cache(maxsize=None)
def _chebyshev(i: int) -> Poly:
    # first-kind Chebyshev: T_i = 2u T_{i-1} - T_{i-2}
    if i == 0:
        return Poly((1,))
    if i == 1:
        return Poly((0, 1))
    two_u = Poly((0, 2))
    return two_u * _chebyshev(i - 1) - _chebyshev(i - 2)


@lru_cache(maxsize=None)
def _classical_gegenbauer(n: int, i: int) -> Poly:
    # three-term recurrence for C_i^lam with lam = (n-2)/2, n >= 3
    lam = Fraction(n - 2, 2)
    if i == 0:
        return Poly((1,))
    if i == 1:
        return Poly((0, 2 * lam))
    a = Fraction(2) * (i - 1 + lam) / i
    b = Fraction(i - 2 + 2 * lam, i)
    u = Poly((0, 1))
    return a * (u * _classical_gegenbauer(n, i - 1)) - b * _classical_gegenbauer(n, i - 2)


@lru_cache(maxsize=None)
def gegenbauer(n: int, i: int) -> Poly:
    """Degree-i Gegenbauer polynomial for the (n-1)-sphere, normalized so the
    value at 1 is harmonic_dim(n, i).

    Built from the classical recurrence and rescaled; for n = 2 the classical
    parameter degenerates to 0 and the Chebyshev family (scaled by 2 for
    positive degree) is the correct limit.
    """
    if n < 2:
        raise ValueError("gegenbauer requires dimension n >= 2")
    if i < 0:
        raise ValueError("degree must be non-negative")
    if i == 0:
        return Poly((1,))
    if n == 2:
        return 2 * _chebyshev(i)
    c = _classical_gegenbauer(n, i)
    at_one = c(1)
    return c * (Fraction(harmonic_dim(n, i)) / at_one)


@lru_cache(maxsize=None)
def cumulative_gegenbauer(n: int, m: int) -> Poly:
    """Sum of the degree-m Gegenbauer polynomial and all lower degrees of the
    same parity, down to degree 0 or 1."""
    if n < 2:
        raise ValueError("cumulative_gegenbauer requires dimension n >= 2")
    if m < 0:
        raise ValueError("degree must be non-negative")
    total = Poly()
    for j in range(m, -1, -2):
        total = total + gegenbauer(n, j)
    return total


def cumulative_gegenbauer_closed(n: int, m: int) -> Poly:
    """Closed forms of the cumulative sums for m in {1, 3, 5}."""
    if n < 2:
        raise ValueError("cumulative_gegenbauer_closed requires dimension n >= 2")
    if m == 1:
        return Poly((0, n))
    if m == 3:
        c = Fraction(n * (n + 2), 6)
        return Poly((0, -3 * c, 0, (n + 4) * c))
    if m == 5:
        c = Fraction(n * (n + 2) * (n + 4), 120)
        return Poly((0, 15 * c, 0, -10 * (n + 6) * c, 0, (n + 6) * (n + 8) * c))
    raise ValueError("closed form available only for m in {1, 3, 5}")


def fisher_bound(n: int, t: int) -> int:
    """Minimum size of a spherical t-design on the (n-1)-sphere."""
    if n < 2:
        raise ValueError("fisher_bound requires dimension n >= 2")
    if t < 0:
        raise ValueError("strength must be non-negative")
    e = t // 2
    if t % 2 == 0:
        second = binom(n + e - 2, e - 1) if e >= 1 else 0
        return binom(n + e - 1, e) + second
    return 2 * binom(n + e - 1, e)


def shell_bound(n: int, k: int) -> int:
    """Upper bound 2*binom(n+2k-2, 2k-1) on the number of lattice vectors of
    squared norm k in an integral lattice of rank n."""
    if n < 1:
        raise ValueError("shell_bound requires dimension n >= 1")
    if k < 1:
        raise ValueError("shell_bound requires norm k >= 1")
    return 2 * binom(n + 2 * k - 2, 2 * k - 1)
