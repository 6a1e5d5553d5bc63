"""Exact inner-product spectra, pair distributions, spherical design strength,
and the annihilator polynomial identity for lattice shells.

Normalized shell points are never materialized; every formula runs on the
exact rationals <y,z>/k, so nothing here depends on floating point except the
overflow-guarded integer matmul fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

import numpy as np

from .exactpoly import (
    Poly,
    binom,
    cumulative_gegenbauer,
    fisher_bound,
    gegenbauer,
    shell_bound,
)
from .lattice import GramLattice, Shell, enumerate_shell

__all__ = [
    "Spectrum",
    "PairDistribution",
    "DesignReport",
    "spectrum",
    "pair_distribution",
    "moment_sum",
    "design_strength",
    "antipodal_bound",
    "annihilator",
    "annihilator_identity_holds",
]


@dataclass(frozen=True)
class Spectrum:
    """Sorted set of normalized inner products over distinct shell points."""

    k: int
    values: tuple


@dataclass(frozen=True)
class PairDistribution:
    """Counts of ordered distinct pairs per normalized inner product."""

    k: int
    size: int
    counts: Dict[Fraction, int]


@dataclass(frozen=True)
class DesignReport:
    strength: int
    tight: bool
    fisher: int
    size: int
    capped: bool


def _rep_rows(S: Shell) -> list:
    # one vector per antipodal pair: the one that is lexicographically larger
    # than its negation
    return [v for v in S.vectors if v > tuple(-x for x in v)]


def _pair_counts_python(reps, gram, k, n) -> Dict[int, int]:
    raw: Dict[int, int] = {}
    m = len(reps)
    W = [
        [sum(gram[a][b] * v[a] for a in range(n)) for b in range(n)] for v in reps
    ]
    for i in range(m):
        vi = reps[i]
        for j in range(m):
            if i == j:
                continue
            wj = W[j]
            p = sum(vi[t] * wj[t] for t in range(n))
            raw[p] = raw.get(p, 0) + 1
    return raw


def pair_distribution(S: Shell, threads: int = 1) -> PairDistribution:
    """Exact ordered-pair counts per normalized inner product value.

    Works on antipodal representatives: for b not equal to +-1 the full count
    is twice the representative count at b plus twice the count at -b, and the
    count at -1 is the shell size (each point meets its antipode once).
    """
    N = len(S.vectors)
    if N == 0:
        raise ValueError("pair_distribution needs a nonempty shell")
    assert N % 2 == 0, "lattice shells are antipodal"
    k = S.k
    n = S.lattice.n
    gram = S.lattice.gram
    reps = _rep_rows(S)
    m = len(reps)
    assert 2 * m == N

    vmax = max(abs(x) for v in reps for x in v)
    gmax = max(abs(x) for row in gram for x in row)
    bound = (n * vmax) ** 2 * gmax

    if bound >= 2**62:
        raw = _pair_counts_python(reps, gram, k, n)
    else:
        V = np.array(reps, dtype=np.int64)
        counts_vec = np.zeros(2 * k + 1, dtype=np.int64)
        if bound < 2**52:
            # integer-exact float64 path, see lattice._exact_norms
            Vf = V.astype(np.float64)
            W = Vf @ np.array(gram, dtype=np.float64)
            block = max(1, min(m, 4_000_000 // max(m, 1) + 1))
            ranges = [(a, min(a + block, m)) for a in range(0, m, block)]

            def count_block(rng):
                a, b = rng
                P = Vf[a:b] @ W.T
                return np.bincount(
                    (np.rint(P).astype(np.int64) + k).ravel(), minlength=2 * k + 1
                )

            if threads > 1 and len(ranges) > 1:
                from concurrent.futures import ThreadPoolExecutor

                with ThreadPoolExecutor(max_workers=threads) as pool:
                    for c in pool.map(count_block, ranges):
                        counts_vec += c
            else:
                for rng in ranges:
                    counts_vec += count_block(rng)
        else:
            W = V @ np.array(gram, dtype=np.int64)
            P = V @ W.T
            counts_vec = np.bincount((P + k).ravel(), minlength=2 * k + 1)
        counts_vec[2 * k] -= m  # drop the diagonal <v,v> = k
        assert counts_vec[2 * k] == 0, "distinct representatives cannot be collinear"
        assert counts_vec[0] == 0, "representatives contain no antipodal pair"
        raw = {p - k: int(c) for p, c in enumerate(counts_vec) if c}

    counts: Dict[Fraction, int] = {Fraction(-k, k): N}
    for p in range(-(k - 1), k):
        c = 2 * (raw.get(p, 0) + raw.get(-p, 0))
        if c:
            counts[Fraction(p, k)] = c
    assert sum(counts.values()) == N * (N - 1)
    return PairDistribution(k=k, size=N, counts=counts)


def spectrum(S: Shell, distribution: Optional[PairDistribution] = None) -> Spectrum:
    """Set of normalized inner products <y,z>/k over distinct shell vectors."""
    if len(S.vectors) == 0:
        raise ValueError("spectrum needs a nonempty shell")
    dist = distribution if distribution is not None else pair_distribution(S)
    values = tuple(sorted(dist.counts))
    for a in values:
        assert Fraction(-1) <= a < 1 and (a * S.k).denominator == 1, (
            "shell inner products must lie in {-1} union {j/k : |j| < k}"
        )
    return Spectrum(k=S.k, values=values)


def moment_sum(n: int, i: int, D: PairDistribution) -> Fraction:
    """Gegenbauer kernel sum over all ordered shell pairs, diagonal included.

    Always non-negative; zero exactly when the degree-i harmonic moments of
    the normalized shell vanish.
    """
    if n < 2:
        raise ValueError("moment_sum requires dimension n >= 2")
    if i < 1:
        raise ValueError("degree must be >= 1")
    Q = gegenbauer(n, i)
    total = D.size * Q(1)
    for alpha, c in D.counts.items():
        total += c * Q(alpha)
    return total


def design_strength(
    S: Shell,
    t_max: Optional[int] = None,
    distribution: Optional[PairDistribution] = None,
) -> DesignReport:
    """Largest t <= t_max with vanishing harmonic moments up to degree t.

    capped means every degree up to t_max passed, so the true strength is
    reported as at least t_max rather than exactly.
    """
    n = S.lattice.n
    if n < 2:
        raise ValueError("design strength is defined on the sphere, need n >= 2")
    if t_max is None:
        t_max = 4 * S.k + 3
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    D = distribution if distribution is not None else pair_distribution(S)
    strength = 0
    for i in range(1, t_max + 1):
        if moment_sum(n, i, D) == 0:
            strength = i
        else:
            break
    capped = strength == t_max
    fisher = fisher_bound(n, strength)
    return DesignReport(
        strength=strength,
        tight=(D.size == fisher),
        fisher=fisher,
        size=D.size,
        capped=capped,
    )


def antipodal_bound(n: int, s: int) -> int:
    """Size bound 2*binom(n+s-2, s-1) for an antipodal spherical set whose
    distinct points realize s inner product values."""
    if n < 2:
        raise ValueError("antipodal_bound requires dimension n >= 2")
    if s < 1:
        raise ValueError("inner product count must be >= 1")
    return 2 * binom(n + s - 2, s - 1)


def annihilator(sp: Spectrum) -> Poly:
    """Product of (u - a)/(1 - a) over the spectrum; value 1 at u = 1."""
    if any(a == 1 for a in sp.values):
        raise ValueError("annihilator undefined when 1 is an inner product value")
    p = Poly((1,))
    for a in sp.values:
        p = p * Poly((-a, 1)) * Fraction(1, 1 - Fraction(a))
    return p


def annihilator_identity_holds(
    L: GramLattice,
    k: int,
    shell: Optional[Shell] = None,
    spectrum_values: Optional[Spectrum] = None,
) -> bool:
    """Exact polynomial identity test: the shell bound times the annihilator
    of the shell's spectrum equals (1+u) times the odd cumulative Gegenbauer
    sum of degree 2k-1."""
    S = shell if shell is not None else enumerate_shell(L, k)
    if len(S.vectors) == 0:
        raise ValueError("annihilator identity needs a nonempty shell")
    sp = spectrum_values if spectrum_values is not None else spectrum(S)
    lhs = shell_bound(L.n, k) * annihilator(sp)
    rhs = Poly((1, 1)) * cumulative_gegenbauer(L.n, 2 * k - 1)
    return lhs == rhs
