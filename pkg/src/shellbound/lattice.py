"""Integer Gram-matrix lattices: builtin catalog, exact shell enumeration, and
integer span computations.

Vectors are plain tuples of Python ints (coordinates in the lattice basis).
Enumeration prunes with floating point but membership is always decided by an
exact integer norm check, so the output is exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional, Sequence

import numpy as np

__all__ = [
    "LatticeError",
    "InvalidGramError",
    "LatticeFormatError",
    "GramLattice",
    "LatticeVector",
    "Shell",
    "SpanBasis",
    "builtin",
    "inner",
    "enumerate_shell",
    "shell_count",
    "brute_force_shell",
    "hermite_normal_form",
    "span_of",
    "gram_det",
    "is_even",
    "minimum",
    "lattice_from_document",
    "lattice_to_document",
]

LatticeVector = tuple


class LatticeError(Exception):
    pass


class InvalidGramError(LatticeError):
    """Gram matrix is not a symmetric positive definite integer matrix."""


class LatticeFormatError(LatticeError):
    """Malformed lattice document or unknown builtin name."""


def _leading_minors(rows):
    # Fraction-free elimination; pivot t equals the (t+1)x(t+1) leading minor.
    # No pivoting: a zero pivot means some leading minor vanished, which is all
    # the positive-definiteness test needs to know.
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    minors = []
    prev = 1
    for t in range(n):
        piv = a[t][t]
        minors.append(piv)
        if piv == 0:
            minors.extend([0] * (n - t - 1))
            break
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][t] * a[t][j]) // prev
        prev = piv
    return minors


def _bareiss_det(rows) -> int:
    """Exact determinant of an integer matrix (fraction-free, with pivoting)."""
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


class GramLattice:
    """An integral lattice given by its integer Gram matrix.

    Construction validates that the matrix is square, integer, symmetric, and
    positive definite (all leading principal minors positive, checked exactly).
    """

    __slots__ = ("n", "gram", "name")

    def __init__(self, gram, name: Optional[str] = None):
        rows = tuple(tuple(x for x in row) for row in gram)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise InvalidGramError("gram matrix must be square and non-empty")
        for row in rows:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise InvalidGramError("gram entries must be integers")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidGramError("gram matrix must be symmetric")
        if any(rows[i][i] < 1 for i in range(n)):
            raise InvalidGramError("gram diagonal entries must be >= 1")
        if any(m <= 0 for m in _leading_minors(rows)):
            raise InvalidGramError("gram matrix must be positive definite")
        self.n = n
        self.gram = rows
        self.name = name

    def __eq__(self, other):
        return (
            isinstance(other, GramLattice)
            and self.gram == other.gram
            and self.name == other.name
        )

    def __hash__(self):
        return hash((self.gram, self.name))

    def __repr__(self):
        label = self.name or f"{self.n}d"
        return f"GramLattice({label}, n={self.n})"


@dataclass(frozen=True)
class Shell:
    """All lattice vectors of squared norm k, canonically sorted."""

    k: int
    vectors: tuple
    lattice: GramLattice

    def __len__(self):
        return len(self.vectors)

    @cached_property
    def vector_set(self) -> frozenset:
        return frozenset(self.vectors)


@dataclass(frozen=True)
class SpanBasis:
    """Hermite normal form basis of an integer span, with its Gram matrix."""

    rank: int
    basis: tuple
    gram: tuple


# ---------------------------------------------------------------------------
# builtin catalog

def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _cartan(n, edges):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return g


def _an_gram(n):
    return _cartan(n, [(i, i + 1) for i in range(n - 1)])


def _dn_gram(n):
    # chain on nodes 0..n-2 plus node n-1 attached to node n-3
    edges = [(i, i + 1) for i in range(n - 2)]
    if n >= 3:
        edges.append((n - 3, n - 1))
    return _cartan(n, edges)


_E8_EDGES = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]

# Even unimodular rank-24 Gram with minimum 4, derived offline from the
# binary Golay code construction and basis-reduced so every basis vector is
# minimal.  Tests assert every required property instead of trusting this
# constant.
_LEECH_GRAM = (
    (4, -2, -1, -2, -1, -2, -2, -2, -1, -2, -2, -2, 0, -2, -2, -2, 1, -2, -2, -2, 1, -2, -1, 0),
    (-2, 4, -1, 1, -1, 2, 2, 0, -1, 0, 1, 2, -1, 2, 0, 2, -2, 2, 0, 2, -2, 2, -1, 1),
    (-1, -1, 4, -1, 2, 0, 0, 1, 2, 0, -1, 1, -1, 1, 0, -1, -1, -1, 1, 0, -1, 1, 0, -2),
    (-2, 1, -1, 4, -1, 2, 1, 0, -1, 2, 2, 1, 0, 1, 1, 2, 0, 1, 2, 2, 0, 1, 0, 1),
    (-1, -1, 2, -1, 4, -1, 1, 1, 2, 0, -1, 1, 1, -1, 1, -1, 1, 0, 1, -1, -1, 0, 2, -2),
    (-2, 2, 0, 2, -1, 4, 2, 1, -1, 2, 2, 1, 0, 1, 0, 1, -2, 2, 0, 1, 0, 2, 0, 0),
    (-2, 2, 0, 1, 1, 2, 4, 0, -1, 1, 1, 1, 1, 1, 1, 0, -1, 1, 1, 0, -1, 1, 1, -1),
    (-2, 0, 1, 0, 1, 1, 0, 4, 1, 1, 2, 1, 1, 0, 2, 0, 0, 1, 0, 1, 1, 0, 2, -1),
    (-1, -1, 2, -1, 2, -1, -1, 1, 4, 1, -1, 0, -1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0),
    (-2, 0, 0, 2, 0, 2, 1, 1, 1, 4, 2, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1),
    (-2, 1, -1, 2, -1, 2, 1, 2, -1, 2, 4, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 0),
    (-2, 2, 1, 1, 1, 1, 1, 1, 0, 0, 0, 4, -1, 1, 0, 1, -1, 1, 1, 2, -2, 2, 0, 0),
    (0, -1, -1, 0, 1, 0, 1, 1, -1, 1, 1, -1, 4, -2, 1, -1, 1, 0, 0, -2, 1, -1, 2, -1),
    (-2, 2, 1, 1, -1, 1, 1, 0, 0, 0, 1, 1, -2, 4, 0, 1, -2, 0, 1, 2, -1, 1, -1, 0),
    (-2, 0, 0, 1, 1, 0, 1, 2, 1, 1, 1, 0, 1, 0, 4, 1, 1, 1, 1, 1, 1, 0, 2, 0),
    (-2, 2, -1, 2, -1, 1, 0, 0, 0, 1, 1, 1, -1, 1, 1, 4, -1, 2, 1, 2, -1, 2, -1, 2),
    (1, -2, -1, 0, 1, -2, -1, 0, 1, 0, 0, -1, 1, -2, 1, -1, 4, -1, 0, -1, 1, -2, 2, 0),
    (-2, 2, -1, 1, 0, 2, 1, 1, 0, 1, 1, 1, 0, 0, 1, 2, -1, 4, 0, 1, 0, 2, 0, 1),
    (-2, 0, 1, 2, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 4, 1, -1, 1, 0, 0),
    (-2, 2, 0, 2, -1, 1, 0, 1, 0, 0, 1, 2, -2, 2, 1, 2, -1, 1, 1, 4, -1, 1, -1, 1),
    (1, -2, -1, 0, -1, 0, -1, 1, 0, 1, 1, -2, 1, -1, 1, -1, 1, 0, -1, -1, 4, -2, 1, 0),
    (-2, 2, 1, 1, 0, 2, 1, 0, 0, 1, 0, 2, -1, 1, 0, 2, -2, 2, 1, 1, -2, 4, -1, 1),
    (-1, -1, 0, 0, 2, 0, 1, 2, 1, 1, 1, 0, 2, -1, 2, -1, 2, 0, 0, -1, 1, -1, 4, -1),
    (0, 1, -2, 1, -2, 0, -1, -1, 0, 1, 0, 0, -1, 0, 0, 2, 0, 1, 0, 1, 0, 1, -1, 4),
)


def _parse_param(name: str, param: str, minimum: int) -> int:
    try:
        value = int(param)
    except ValueError:
        raise LatticeFormatError(f"bad parameter in builtin name '{name}'") from None
    if value < minimum:
        raise LatticeFormatError(f"parameter in '{name}' must be >= {minimum}")
    return value


def builtin(name: str) -> GramLattice:
    """Look up a builtin lattice: zn:<n>, an:<n>, dn:<n>, e8, leech, scaledz:<q>.

    scaledz:<q> is the rank-1 lattice whose generator has squared norm q.
    """
    if name == "e8":
        return GramLattice(_cartan(8, _E8_EDGES), name="e8")
    if name == "leech":
        return GramLattice(_LEECH_GRAM, name="leech")
    family, sep, param = name.partition(":")
    if not sep:
        raise LatticeFormatError(f"unknown builtin lattice '{name}'")
    if family == "zn":
        n = _parse_param(name, param, 1)
        return GramLattice(_identity(n), name=name)
    if family == "an":
        n = _parse_param(name, param, 1)
        return GramLattice(_an_gram(n), name=name)
    if family == "dn":
        n = _parse_param(name, param, 2)
        return GramLattice(_dn_gram(n), name=name)
    if family == "scaledz":
        q = _parse_param(name, param, 1)
        return GramLattice([[q]], name=name)
    raise LatticeFormatError(f"unknown builtin lattice '{name}'")


# ---------------------------------------------------------------------------
# inner products and exact norm batches

def inner(L: GramLattice, v: Sequence[int], w: Sequence[int]) -> int:
    """Exact inner product v^T G w in the lattice's bilinear form."""
    if len(v) != L.n or len(w) != L.n:
        raise ValueError("vector length does not match lattice dimension")
    g = L.gram
    total = 0
    for i, vi in enumerate(v):
        if vi:
            row = g[i]
            total += vi * sum(row[j] * w[j] for j in range(L.n) if w[j])
    return total


def _exact_norms(V: np.ndarray, gram) -> np.ndarray:
    """Exact squared norms of the int64 rows of V under the integer form."""
    n = V.shape[1]
    vmax = int(np.abs(V).max()) if V.size else 0
    gmax = max(abs(x) for row in gram for x in row)
    bound = (n * vmax) ** 2 * gmax
    if bound < 2**52:
        # all intermediate values are integers below 2**53, so float64 matmul
        # is exact and fast
        Gf = np.array(gram, dtype=np.float64)
        W = V.astype(np.float64) @ Gf
        return np.rint(np.einsum("ij,ij->i", W, V.astype(np.float64))).astype(np.int64)
    if bound < 2**62:
        Gi = np.array(gram, dtype=np.int64)
        W = V @ Gi
        return np.einsum("ij,ij->i", W, V)
    out = np.empty(V.shape[0], dtype=object)
    rows = V.tolist()
    for idx, row in enumerate(rows):
        total = 0
        for i, vi in enumerate(row):
            if vi:
                gr = gram[i]
                total += vi * sum(gr[j] * row[j] for j in range(n))
        out[idx] = total
    return out


# ---------------------------------------------------------------------------
# shell enumeration
#
# Depth-first enumeration in the Cholesky frame, processed level by level on
# whole numpy frontiers instead of one vector at a time.  Pruning radii carry
# a small relative slack so no true solution is lost to rounding; every
# candidate is then checked exactly.  Antipodal halving keeps one vector per
# +-pair (the highest-index nonzero coordinate is positive) and the mirror is
# restored after verification.

_CHUNK_ROWS = 250_000
_FUZZ = 1e-9


def _expand_level(Rm, C, coords, partial, zflag, level):
    rii = Rm[level, level]
    s = coords @ Rm[level]
    rad = np.sqrt(np.maximum(C - partial, 0.0))
    lo = np.ceil((-rad - s) / rii - _FUZZ)
    hi = np.floor((rad - s) / rii + _FUZZ)
    lo = np.where(zflag, np.maximum(lo, 0.0), lo)
    cnt = (hi - lo + 1).astype(np.int64)
    np.maximum(cnt, 0, out=cnt)
    total = int(cnt.sum())
    if total == 0:
        return None
    idx = np.repeat(np.arange(coords.shape[0]), cnt)
    offs = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    vals = lo[idx] + offs
    newc = coords[idx]
    newc = np.ascontiguousarray(newc)
    newc[:, level] = vals.astype(np.int64)
    t = rii * vals + s[idx]
    newp = partial[idx] + t * t
    newz = zflag[idx] & (vals == 0)
    return newc, newp, newz


def _bottom_candidates(Rm, k, tol, coords, partial, zflag):
    r00 = Rm[0, 0]
    s = coords @ Rm[0]
    hi2 = (k + tol) - partial
    lo2 = np.maximum((k - tol) - partial, 0.0)
    hit = np.sqrt(np.maximum(hi2, 0.0))
    lot = np.sqrt(lo2)
    pieces = []
    for lob, hib in ((lot, hit), (-hit, -lot)):
        lo = np.ceil((lob - s) / r00 - _FUZZ)
        hi = np.floor((hib - s) / r00 + _FUZZ)
        lo = np.where(zflag, np.maximum(lo, 0.0), lo)
        cnt = (hi - lo + 1).astype(np.int64)
        np.maximum(cnt, 0, out=cnt)
        total = int(cnt.sum())
        if total == 0:
            continue
        idx = np.repeat(np.arange(coords.shape[0]), cnt)
        offs = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        vals = lo[idx] + offs
        newc = np.ascontiguousarray(coords[idx])
        newc[:, 0] = vals.astype(np.int64)
        pieces.append(newc)
    if not pieces:
        return None
    return np.concatenate(pieces) if len(pieces) > 1 else pieces[0]


def _search(Rm, k, tol, coords, partial, zflag, level):
    """Candidate representatives below the given frontier, as an int64 array."""
    n = Rm.shape[0]
    out = []
    stack = [(coords, partial, zflag, level)]
    while stack:
        c, p, z, lv = stack.pop()
        if c.shape[0] > _CHUNK_ROWS:
            for a in range(0, c.shape[0], _CHUNK_ROWS):
                stack.append((c[a : a + _CHUNK_ROWS], p[a : a + _CHUNK_ROWS], z[a : a + _CHUNK_ROWS], lv))
            continue
        if lv == 0:
            cand = _bottom_candidates(Rm, k, tol, c, p, z)
            if cand is not None:
                out.append(cand)
            continue
        ex = _expand_level(Rm, k + tol, c, p, z, lv)
        if ex is None:
            continue
        stack.append((ex[0], ex[1], ex[2], lv - 1))
    if not out:
        return np.empty((0, n), dtype=np.int64)
    return np.concatenate(out) if len(out) > 1 else out[0]


def _cholesky_upper(L: GramLattice) -> np.ndarray:
    G = np.array(L.gram, dtype=np.float64)
    try:
        return np.linalg.cholesky(G).T
    except np.linalg.LinAlgError:
        # exactly positive definite but too ill conditioned for float64
        raise InvalidGramError(
            "gram matrix is too ill conditioned for floating point factorization"
        ) from None


def _branch_worker(args):
    gram, k, coords, partial, zflag, level = args
    G = np.array(gram, dtype=np.float64)
    Rm = np.linalg.cholesky(G).T
    tol = k * 1e-6 + _FUZZ
    return _search(Rm, k, tol, coords, partial, zflag, level)


def enumerate_shell(
    L: GramLattice,
    k: int,
    threads: int = 1,
    on_progress: Optional[Callable[[int, int], None]] = None,
) -> Shell:
    """All lattice vectors of squared norm exactly k, sorted lexicographically.

    threads > 1 splits the search across worker processes; the output is
    identical regardless of schedule because it is sorted at the end.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    threads = max(int(threads or 1), 1)
    n = L.n

    if n == 1:
        q = L.gram[0][0]
        vectors = ()
        if k % q == 0:
            r = math.isqrt(k // q)
            if r * r * q == k:
                vectors = ((-r,), (r,))
        return Shell(k=k, vectors=vectors, lattice=L)

    Rm = _cholesky_upper(L)
    tol = k * 1e-6 + _FUZZ
    coords = np.zeros((1, n), dtype=np.int64)
    partial = np.zeros(1, dtype=np.float64)
    zflag = np.ones(1, dtype=bool)
    level = n - 1

    # grow the frontier a little so work can be split into branches
    target = max(8, threads * 4)
    while level > 1 and coords.shape[0] < target:
        ex = _expand_level(Rm, k + tol, coords, partial, zflag, level)
        if ex is None:
            return Shell(k=k, vectors=(), lattice=L)
        coords, partial, zflag = ex
        level -= 1

    rows = coords.shape[0]
    groups = min(rows, target)
    sel = np.arange(rows) % groups
    branches = [
        (coords[sel == g], partial[sel == g], zflag[sel == g], level) for g in range(groups)
    ]

    results = []
    if threads == 1 or groups == 1:
        for i, (c, p, z, lv) in enumerate(branches):
            results.append(_search(Rm, k, tol, c, p, z, lv))
            if on_progress:
                on_progress(i + 1, groups)
    else:
        from concurrent.futures import ProcessPoolExecutor

        payload = [(L.gram, k, c, p, z, lv) for c, p, z, lv in branches]
        with ProcessPoolExecutor(max_workers=min(threads, groups)) as pool:
            for i, res in enumerate(pool.map(_branch_worker, payload)):
                results.append(res)
                if on_progress:
                    on_progress(i + 1, groups)

    cand = np.concatenate(results) if len(results) > 1 else results[0]
    if cand.shape[0] == 0:
        return Shell(k=k, vectors=(), lattice=L)
    norms = _exact_norms(cand, L.gram)
    reps = cand[norms == k]
    if reps.shape[0] == 0:
        return Shell(k=k, vectors=(), lattice=L)
    full = np.concatenate([reps, -reps])
    full = np.unique(full, axis=0)
    vectors = tuple(tuple(int(x) for x in row) for row in full.tolist())
    return Shell(k=k, vectors=vectors, lattice=L)


def shell_count(L: GramLattice, k: int, threads: int = 1) -> int:
    """Number of lattice vectors of squared norm exactly k."""
    return len(enumerate_shell(L, k, threads=threads))


# ---------------------------------------------------------------------------
# independent brute-force oracle
#
# Scans the full coordinate box |x_i| <= sqrt(k / c), where c is an exact
# rational lower bound on the smallest eigenvalue of the Gram matrix obtained
# by bisection with integer positive-definiteness tests.  Shares nothing with
# the tree search above; intended for cross-checking it on small dimensions.

def _eigen_lower_bound(L: GramLattice) -> Fraction:
    gram = L.gram
    n = L.n

    def is_pd_shift(c: Fraction) -> bool:
        # positive definiteness of gram - c*I via the integer matrix q*gram - p*I
        p, q = c.numerator, c.denominator
        shifted = [
            [q * gram[i][j] - (p if i == j else 0) for j in range(n)] for i in range(n)
        ]
        return all(m > 0 for m in _leading_minors(shifted))

    lo = Fraction(0)
    hi = Fraction(min(gram[i][i] for i in range(n)))
    for _ in range(60):
        mid = (lo + hi) / 2
        if is_pd_shift(mid):
            lo = mid
        else:
            hi = mid
        if lo > 0 and hi - lo < lo / 8:
            break
    assert lo > 0, "bisection failed to certify a positive eigenvalue bound"
    return lo


def brute_force_shell(L: GramLattice, k: int) -> Shell:
    """Reference enumeration by exhaustive box scan; exponential in dimension."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    n = L.n
    c = _eigen_lower_bound(L)
    bound = math.isqrt((k * c.denominator) // c.numerator)
    side = 2 * bound + 1
    gmax = max(abs(x) for row in L.gram for x in row)
    assert (n * bound) ** 2 * gmax < 2**52, "box too large for exact float64 scan"
    Gf = np.array(L.gram, dtype=np.float64)

    # assign leading coordinates explicitly so each grid chunk stays small
    lead = 0
    while side ** (n - lead) > 2_000_000 and lead < n - 1:
        lead += 1

    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([rng] * (n - lead)), indexing="ij")
    tail = np.stack([g.ravel() for g in grids], axis=1)
    hits = []

    def scan(prefix):
        block = np.empty((tail.shape[0], n), dtype=np.int64)
        block[:, :lead] = prefix
        block[:, lead:] = tail
        Bf = block.astype(np.float64)
        norms = np.rint(np.einsum("ij,ij->i", Bf @ Gf, Bf)).astype(np.int64)
        match = block[norms == k]
        if match.size:
            hits.append(match)

    if lead == 0:
        scan(())
    else:
        import itertools

        for prefix in itertools.product(range(-bound, bound + 1), repeat=lead):
            scan(np.array(prefix, dtype=np.int64))

    if not hits:
        return Shell(k=k, vectors=(), lattice=L)
    allv = np.unique(np.concatenate(hits), axis=0)
    vectors = tuple(tuple(int(x) for x in row) for row in allv.tolist())
    return Shell(k=k, vectors=vectors, lattice=L)


# ---------------------------------------------------------------------------
# integer spans

def hermite_normal_form(rows) -> list:
    """Row-style Hermite normal form of the integer row span.

    Returns the nonzero rows: pivots positive, entries above each pivot reduced
    into [0, pivot).
    """
    H = [list(int(x) for x in r) for r in rows]
    if not H:
        raise ValueError("hermite_normal_form needs at least one row")
    m = len(H)
    n = len(H[0])
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if H[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        H[r], H[piv] = H[piv], H[r]
        while True:
            done = True
            for i in range(r + 1, m):
                if H[i][col] != 0:
                    done = False
                    if abs(H[i][col]) < abs(H[r][col]):
                        H[r], H[i] = H[i], H[r]
                    q = H[i][col] // H[r][col]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
            if done:
                break
        if H[r][col] < 0:
            H[r] = [-a for a in H[r]]
        for i in range(r):
            q = H[i][col] // H[r][col]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
        r += 1
        if r == m:
            break
    return H[:r]


def span_of(vectors, L: GramLattice) -> SpanBasis:
    """Hermite normal form basis of the integer span of the given vectors,
    together with the Gram matrix of that basis under L's form."""
    vectors = list(vectors)
    if not vectors:
        raise ValueError("span_of needs at least one vector")
    for v in vectors:
        if len(v) != L.n:
            raise ValueError("vector length does not match lattice dimension")
    basis = hermite_normal_form(vectors)
    rank = len(basis)
    gram = L.gram
    gb = [
        [sum(gram[a][b] * v[a] * w[b] for a in range(L.n) for b in range(L.n) if v[a] and w[b]) for w in basis]
        for v in basis
    ]
    return SpanBasis(
        rank=rank,
        basis=tuple(tuple(row) for row in basis),
        gram=tuple(tuple(row) for row in gb),
    )


def gram_det(B: SpanBasis) -> int:
    """Exact determinant of the span's Gram matrix."""
    return _bareiss_det(B.gram)


def is_even(B: SpanBasis) -> bool:
    """True when every basis vector of the span has even squared norm."""
    return all(B.gram[i][i] % 2 == 0 for i in range(B.rank))


def minimum(L: GramLattice, k_max: int):
    """Smallest k <= k_max with a nonempty shell, or None."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    for k in range(1, k_max + 1):
        if shell_count(L, k):
            return k
    return None


# ---------------------------------------------------------------------------
# lattice document format (JSON): {"name": str, "dim": int, "gram": [[int]]}

def lattice_from_document(text: str) -> GramLattice:
    """Parse a lattice document; raises LatticeFormatError on malformed input
    and InvalidGramError when the matrix is not a valid Gram matrix."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LatticeFormatError(f"lattice document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise LatticeFormatError("lattice document must be a JSON object")
    if "dim" not in doc or "gram" not in doc:
        raise LatticeFormatError("lattice document needs 'dim' and 'gram' fields")
    dim = doc["dim"]
    gram = doc["gram"]
    name = doc.get("name")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise LatticeFormatError("'dim' must be a positive integer")
    if name is not None and not isinstance(name, str):
        raise LatticeFormatError("'name' must be a string")
    if (
        not isinstance(gram, list)
        or len(gram) != dim
        or any(not isinstance(row, list) or len(row) != dim for row in gram)
    ):
        raise LatticeFormatError("'gram' must be a dim x dim array")
    for row in gram:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise LatticeFormatError("'gram' entries must be integers")
    return GramLattice(gram, name=name)


def lattice_to_document(L: GramLattice) -> str:
    doc = {"dim": L.n, "gram": [list(row) for row in L.gram]}
    if L.name is not None:
        doc["name"] = L.name
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
