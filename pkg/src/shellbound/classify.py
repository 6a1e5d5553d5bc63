"""End-to-end classification of shell-count equality: exact count versus the
shell bound, plus the recognition routes that pin down which lattice realizes
an equality (rank 1, the cubic lattice at norm 1, or the rank-8 even
unimodular root lattice at norm 2)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

import numpy as np

from .design import (
    annihilator_identity_holds,
    design_strength,
    pair_distribution,
    spectrum,
)
from .exactpoly import shell_bound
from .filter import (
    allowed_tight_strengths,
    circle_exclusion,
    norm3_filter_contradiction,
    root_filter,
)
from .lattice import (
    GramLattice,
    Shell,
    enumerate_shell,
    gram_det,
    is_even,
    span_of,
)

__all__ = [
    "RANK1",
    "ZN",
    "E8",
    "NONE",
    "EqualityReport",
    "SpanClassification",
    "check_equality",
    "orthonormal_system",
    "reflection_closure",
    "recognize_e8",
    "classify",
    "classify_shell_generated",
]

RANK1 = "RANK1"
ZN = "ZN"
E8 = "E8"
NONE = "NONE"


@dataclass(frozen=True)
class EqualityReport:
    n: int
    k: int
    count: int
    bound: int
    equality: bool
    case: str
    evidence: Dict


@dataclass(frozen=True)
class SpanClassification:
    rank: int
    saturates_in_span: bool
    case: str
    report: EqualityReport


def check_equality(L: GramLattice, k: int, shell: Optional[Shell] = None):
    """Exact (count, bound, equality) triple for the norm-k shell."""
    S = shell if shell is not None else enumerate_shell(L, k)
    count = len(S.vectors)
    bound = shell_bound(L.n, k)
    return count, bound, count == bound


def orthonormal_system(S: Shell):
    """One vector per antipodal pair of a norm-1 shell, verified mutually
    orthogonal; returns the list when it has full size n, else None."""
    if S.k != 1:
        raise ValueError("orthonormal extraction applies to norm-1 shells")
    L = S.lattice
    reps = [v for v in S.vectors if v > tuple(-x for x in v)]
    gram = L.gram
    n = L.n
    for i, v in enumerate(reps):
        gv = [sum(gram[a][b] * v[a] for a in range(n)) for b in range(n)]
        for w in reps[i + 1 :]:
            if sum(gv[t] * w[t] for t in range(n)) != 0:
                return None
    if len(reps) != n:
        return None
    return reps


def reflection_closure(S: Shell) -> bool:
    """True when a norm-2 shell is closed under its own root reflections
    s_a(b) = b - <b,a> a."""
    if S.k != 2:
        raise ValueError("reflection closure applies to norm-2 shells")
    if len(S.vectors) == 0:
        return True
    V = np.array(S.vectors, dtype=np.int64)
    G = np.array(S.lattice.gram, dtype=np.int64)
    P = V @ G @ V.T
    members = S.vector_set
    m = V.shape[0]
    for i in range(m):
        refl = V - P[:, i : i + 1] * V[i]
        for row in refl.tolist():
            if tuple(row) not in members:
                return False
    return True


def recognize_e8(S: Shell) -> bool:
    """Certificate that a norm-2 shell is the rank-8 even unimodular root
    system: 240 vectors spanning a rank-8 even determinant-1 sublattice that
    is closed under its reflections."""
    if S.k != 2:
        raise ValueError("the certificate applies to norm-2 shells")
    if len(S.vectors) != 240:
        return False
    span = span_of(S.vectors, S.lattice)
    if span.rank != 8:
        return False
    if gram_det(span) != 1 or not is_even(span):
        return False
    return reflection_closure(S)


def _exclusion_evidence(n: int, k: int) -> Dict:
    # name the mechanism that rules equality out, for auditability
    if k == 1 or (k == 2 and n != 2):
        return {"exclusion": "count"}
    if n == 2:
        return {"exclusion": "circle", "circle_excluded": circle_exclusion(k)}
    if k == 3:
        c = norm3_filter_contradiction()
        return {
            "exclusion": "norm3-filter",
            "n_from_sum": c.n_from_sum,
            "product_required": c.product_required,
            "product_actual": c.product_actual,
            "consistent": c.consistent,
        }
    return {
        "exclusion": "strength-table",
        "required_strength": 4 * k - 1,
        "allowed_strengths": sorted(allowed_tight_strengths()),
    }


def classify(
    L: GramLattice,
    k: int,
    threads: int = 1,
    shell: Optional[Shell] = None,
) -> EqualityReport:
    """Full equality classification of the norm-k shell of L.

    Equality cases carry certification evidence: the complete inner-product
    spectrum, strength and tightness, the annihilator identity, and the
    recognition route.  Non-equality reports name the exclusion mechanism.
    """
    S = shell if shell is not None else enumerate_shell(L, k, threads=threads)
    n = L.n
    count, bound, equality = check_equality(L, k, shell=S)
    evidence: Dict = {}

    if n == 1:
        q = L.gram[0][0]
        if equality:
            m = math.isqrt(k // q)
            assert q * m * m == k
            case = RANK1
            evidence = {"scale": q, "m": m}
        else:
            case = NONE
            evidence = {"exclusion": "count"}
        return EqualityReport(n, k, count, bound, equality, case, evidence)

    if not equality:
        return EqualityReport(n, k, count, bound, False, NONE, _exclusion_evidence(n, k))

    dist = pair_distribution(S, threads=threads)
    sp = spectrum(S, distribution=dist)
    full_values = {Fraction(j, k) for j in range(-(k - 1), k)} | {Fraction(-1)}
    report = design_strength(S, t_max=4 * k + 3, distribution=dist)
    evidence = {
        "spectrum": sp.values,
        "spectrum_complete": set(sp.values) == full_values,
        "strength": report.strength,
        "strength_at_least_required": report.strength >= 4 * k - 1,
        "tight": report.tight,
        "annihilator_identity": annihilator_identity_holds(L, k, shell=S, spectrum_values=sp),
    }
    consequences_ok = (
        evidence["spectrum_complete"]
        and evidence["strength_at_least_required"]
        and evidence["tight"]
        and evidence["annihilator_identity"]
    )

    if k == 1:
        ortho = orthonormal_system(S)
        if ortho is None or not consequences_ok:
            raise RuntimeError("norm-1 equality failed its certification; this is a bug")
        evidence["recognition"] = "orthonormal-system"
        evidence["orthonormal_count"] = len(ortho)
        case = ZN
    elif k == 2:
        fr = root_filter(n, 2)
        span = span_of(S.vectors, L)
        evidence["root_filter_passes"] = fr.passes
        evidence["span_rank"] = span.rank
        evidence["span_det"] = gram_det(span)
        evidence["span_even"] = is_even(span)
        evidence["reflection_closure"] = reflection_closure(S)
        evidence["recognition"] = "e8-certificate"
        if not (fr.passes and n == 8 and recognize_e8(S) and consequences_ok):
            raise RuntimeError("norm-2 equality failed its certification; this is a bug")
        case = E8
    else:
        # impossible for an integral lattice (the norm-3 filter and the
        # strength table exclude every k >= 3); reaching it means a bug
        raise RuntimeError(f"equality reported at k={k}, n={n}, which is impossible")

    return EqualityReport(n, k, count, bound, True, case, evidence)


def classify_shell_generated(
    L: GramLattice,
    k: int,
    threads: int = 1,
    shell: Optional[Shell] = None,
) -> SpanClassification:
    """Classify the sublattice M generated by the norm-k shell inside its own
    span.  S_k(M) = S_k(L), so the shell saturates the rank-r bound iff M is
    an equality case, and then M is a scaled line, the cubic lattice, or the
    rank-8 root lattice."""
    S = shell if shell is not None else enumerate_shell(L, k, threads=threads)
    if len(S.vectors) == 0:
        raise ValueError("classification needs a nonempty shell")
    span = span_of(S.vectors, L)
    M = GramLattice(span.gram, name="shell-span")
    sub = classify(M, k, threads=threads)
    return SpanClassification(
        rank=span.rank,
        saturates_in_span=sub.equality,
        case=sub.case,
        report=sub,
    )
