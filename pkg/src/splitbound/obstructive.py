"""Obstructive sublinks, the packing number c(L) and the linking lower bound.

A sublink is obstructive when it is non-split and all of its pairwise
linking numbers vanish.  Non-splitness is certified, never refuted: a
nonzero multivariable Alexander polynomial (or a nonzero linking number)
proves it, and anything else is reported as unknown.  The packing number
found here is therefore a lower bound for the true c(L), which is all the
bound ``a(L) + 2 c(L)`` needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .alexander import alexander_polynomial
from .diagram import LinkDiagram, sublink
from .linking import linking_matrix, parity_bound, total_linking

MAX_COMPONENTS = 8


@dataclass(frozen=True)
class NonSplit:
    reason: str


@dataclass(frozen=True)
class Unknown:
    reason: str = "no certificate"


def nonsplit_certificate(d: LinkDiagram) -> NonSplit | Unknown:
    """Certify that a diagram with at least two components is non-split.

    >>> from splitbound.diagram import parse_pd
    >>> nonsplit_certificate(parse_pd("PD[X[4,2,1,3], X[2,4,3,1]]"))
    NonSplit(reason='linking number 1 between components 0 and 1')
    """
    if d.n_components < 2:
        raise ValueError("non-splitness needs at least two components")
    M = linking_matrix(d)
    for i in range(M.size):
        for j in range(i + 1, M.size):
            if M[i, j]:
                return NonSplit(f"linking number {M[i, j]} between components {i} and {j}")
    if not alexander_polynomial(d).is_zero():
        return NonSplit("Alexander polynomial is nonzero")
    return Unknown()


@dataclass(frozen=True)
class ObstructiveCollection:
    members: tuple[tuple[int, ...], ...]
    reasons: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.members)

    def verify(self, d: LinkDiagram) -> bool:
        """Recheck the defining conditions independently of the search."""
        M = linking_matrix(d)
        for S in self.members:
            if len(S) < 2 or not M.submatrix(S).is_zero():
                return False
            if not isinstance(nonsplit_certificate(sublink(d, S)), NonSplit):
                return False
        for A, B in combinations(self.members, 2):
            if len(set(A) & set(B)) > 1:
                return False
        return True


def obstructive_sublinks(d: LinkDiagram) -> list[tuple[tuple[int, ...], str]]:
    """All certified obstructive sublinks as (component tuple, reason)."""
    m = d.n_components
    M = linking_matrix(d)
    out = []
    for r in range(2, m + 1):
        for S in combinations(range(m), r):
            if not M.submatrix(S).is_zero():
                continue
            cert = nonsplit_certificate(sublink(d, S))
            if isinstance(cert, NonSplit):
                out.append((S, cert.reason))
    return out


def _max_packing(sets: list[frozenset]) -> list[int]:
    """Largest family of indices whose sets pairwise share at most one element."""
    n = len(sets)
    clash = [[len(sets[i] & sets[j]) > 1 for j in range(n)] for i in range(n)]
    best: list[int] = []

    def grow(chosen: list[int], start: int):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + (n - start) <= len(best):
            return
        for i in range(start, n):
            if not any(clash[i][j] for j in chosen):
                chosen.append(i)
                grow(chosen, i + 1)
                chosen.pop()

    grow([], 0)
    return best


def c_invariant(d: LinkDiagram) -> tuple[int, ObstructiveCollection]:
    """Lower bound for c(L) with a witness collection.

    Exhaustive over sublinks, so diagrams with more than eight components
    are refused.
    """
    if d.n_components > MAX_COMPONENTS:
        raise ValueError(f"c_invariant supports at most {MAX_COMPONENTS} components")
    cands = obstructive_sublinks(d) if d.n_components >= 2 else []
    pick = _max_packing([frozenset(S) for S, _ in cands])
    coll = ObstructiveCollection(
        tuple(cands[i][0] for i in pick), tuple(cands[i][1] for i in pick)
    )
    return len(coll), coll


@dataclass(frozen=True)
class LemmaBound:
    bound: int
    parity: int
    total_linking: int
    c: int
    witness: ObstructiveCollection


def lemma_lower_bound(d: LinkDiagram) -> LemmaBound:
    """sp(L) >= a(L) + 2 c(L), together with sp(L) = a(L) mod 2."""
    M = linking_matrix(d)
    a = total_linking(M)
    c, coll = c_invariant(d)
    return LemmaBound(a + 2 * c, parity_bound(M), a, c, coll)
