"""Integrality root filters on the odd cumulative Gegenbauer sums, the circle
exclusion, and the table of strengths a tight spherical design can have.

A rank-n lattice whose norm-k shell meets the shell bound forces the degree
2k-1 cumulative Gegenbauer sum to vanish on {j/k : 0 <= j <= k-1}; these
filters test that vanishing exactly and solve the small cases in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from .exactpoly import cumulative_gegenbauer

__all__ = [
    "FilterReport",
    "Norm3Contradiction",
    "root_filter",
    "filter_search",
    "norm2_filter_dimension",
    "norm3_filter_contradiction",
    "circle_exclusion",
    "allowed_tight_strengths",
]


@dataclass(frozen=True)
class FilterReport:
    n: int
    k: int
    passes: bool
    evaluations: Dict[Fraction, Fraction]


@dataclass(frozen=True)
class Norm3Contradiction:
    n_from_sum: int
    product_required: Fraction
    product_actual: Fraction
    consistent: bool


def root_filter(n: int, k: int) -> FilterReport:
    """Evaluate the degree 2k-1 cumulative Gegenbauer sum at j/k, 0 <= j < k.

    The polynomial is odd with 2k-1 candidate roots, so all evaluations being
    zero is equivalent to the root set being exactly {0, +-1/k, ..., +-(k-1)/k}.
    """
    if n < 2:
        raise ValueError("root_filter requires dimension n >= 2")
    if k < 1:
        raise ValueError("root_filter requires norm k >= 1")
    poly = cumulative_gegenbauer(n, 2 * k - 1)
    assert all(c == 0 for c in poly.coeffs[0::2]), "odd-degree cumulative sum must be odd"
    evaluations = {Fraction(j, k): poly(Fraction(j, k)) for j in range(k)}
    return FilterReport(
        n=n, k=k, passes=all(v == 0 for v in evaluations.values()), evaluations=evaluations
    )


def filter_search(k: int, n_max: int = 200) -> List[int]:
    """All dimensions n in [2, n_max] passing the root filter for norm k."""
    if k < 1:
        raise ValueError("filter_search requires norm k >= 1")
    if n_max < 2:
        raise ValueError("filter_search requires n_max >= 2")
    return [n for n in range(2, n_max + 1) if root_filter(n, k).passes]


def norm2_filter_dimension() -> int:
    """The unique dimension passing the norm-2 filter, solved exactly.

    The degree-3 sum is (n(n+2)/6) u ((n+4)u^2 - 3), so its positive root
    satisfies u^2 = 3/(n+4); requiring u = 1/2 pins n.
    """
    root_sq = Fraction(1, 2) ** 2
    n = Fraction(3) / root_sq - 4
    assert n.denominator == 1
    return int(n)


def norm3_filter_contradiction() -> Norm3Contradiction:
    """Exact Vieta mismatch showing no dimension passes the norm-3 filter.

    The degree-5 sum factors through the quartic (n+6)(n+8)w^2 - 10(n+6)w + 15
    in w = u^2, whose roots would have to be {1/9, 4/9}.  Matching the root
    sum forces one dimension; the product then disagrees.
    """
    required_roots = (Fraction(1, 9), Fraction(4, 9))
    root_sum = sum(required_roots)
    # Vieta sum of the quartic's roots is 10/(n+8)
    n = Fraction(10) / root_sum - 8
    assert n.denominator == 1
    n = int(n)
    product_required = required_roots[0] * required_roots[1]
    product_actual = Fraction(15, (n + 6) * (n + 8))
    return Norm3Contradiction(
        n_from_sum=n,
        product_required=product_required,
        product_actual=product_actual,
        consistent=product_actual == product_required,
    )


def circle_exclusion(k: int) -> bool:
    """Certify that cos(pi/(2k)) lies strictly between (k-1)/k and 1.

    A rank-2 equality shell would be a regular 4k-gon whose adjacent inner
    product is cos(pi/(2k)); that value escaping {-1} union (1/k)Z rules the
    case out.  Uses cos x > 1 - x^2/2 and the rational bound pi^2 < 987/100,
    so the whole chain is exact.
    """
    if k < 2:
        raise ValueError("circle_exclusion requires k >= 2")
    lower = 1 - Fraction(987, 100) / (8 * k * k)
    # upper strictness is immediate: the angle pi/(2k) is in (0, pi/2)
    return lower > Fraction(k - 1, k)


def allowed_tight_strengths() -> frozenset:
    """Strengths t >= 4 that a tight spherical t-design in dimension >= 3 can
    have (classification constant; strengths 15 and up are impossible)."""
    return frozenset({4, 5, 7, 11})
