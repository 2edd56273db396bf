"""Wirtinger presentations, Fox calculus and the multivariable Alexander polynomial.

Component ``i`` of a diagram carries the variable ``t_i``; for two-component
links these are rendered ``s`` and ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .diagram import LinkDiagram, sublink
from .laurent import (
    LaurentPoly,
    determinant,
    divides,
    exact_quotient,
    normalize,
    one,
    unit_equal,
    zero,
)

Word = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class WirtingerPresentation:
    """Generators are overpass arcs; one length-4 relator per crossing."""

    generator_component: tuple[int, ...]
    relators: tuple[Word, ...]
    n_components: int
    arc_of_edge: dict = field(compare=False, repr=False, default_factory=dict)

    @property
    def n_generators(self) -> int:
        return len(self.generator_component)


def wirtinger(d: LinkDiagram) -> WirtingerPresentation:
    """Wirtinger presentation of ``d``.

    At a crossing with incoming under-arc ``x_i``, outgoing under-arc ``x_j``
    and over-arc ``x_k`` the relator is ``x_k x_i x_k^-1 x_j^-1`` for a
    right-handed crossing and ``x_k^-1 x_i x_k x_j^-1`` otherwise.  A
    crossingless component contributes a free generator.
    """
    parent = {e: e for e in d.edge_labels}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for x in d.crossings:
        b, e4 = x.edges[1], x.edges[3]
        ra, rb = find(b), find(e4)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(e) for e in d.edge_labels})
    gen = {r: i for i, r in enumerate(roots)}
    arc_of_edge = {e: gen[find(e)] for e in d.edge_labels}
    comp = tuple(d.edge_component[r] for r in roots)
    rels = []
    for x in d.crossings:
        a, b, c, _ = x.edges
        i, j, k = arc_of_edge[a], arc_of_edge[c], arc_of_edge[b]
        if x.sign > 0:
            rels.append(((k, 1), (i, 1), (k, -1), (j, -1)))
        else:
            rels.append(((k, -1), (i, 1), (k, 1), (j, -1)))
    return WirtingerPresentation(comp, tuple(rels), d.n_components, arc_of_edge)


def abelianize(word: Word, generator_component: Sequence[int], nvars: int) -> tuple[int, ...]:
    e = [0] * nvars
    for g, p in word:
        e[generator_component[g]] += p
    return tuple(e)


def fox_derivative(word: Word, g: int, generator_component: Sequence[int], nvars: int) -> LaurentPoly:
    """Abelianized free derivative of ``word`` with respect to generator ``g``."""
    out: dict[tuple[int, ...], int] = {}
    prefix = [0] * nvars
    for h, p in word:
        c = generator_component[h]
        if h == g:
            if p > 0:
                k = tuple(prefix)
                out[k] = out.get(k, 0) + 1
            else:
                k = tuple(prefix[i] - (1 if i == c else 0) for i in range(nvars))
                out[k] = out.get(k, 0) - 1
        prefix[c] += p
    return LaurentPoly(out, nvars)


def fox_jacobian(p: WirtingerPresentation) -> list[list[LaurentPoly]]:
    nv = max(p.n_components, 1)
    rows = []
    for r in p.relators:
        rows.append([fox_derivative(r, g, p.generator_component, nv) for g in range(p.n_generators)])
    return rows


def fox_row_identity(row: Sequence[LaurentPoly], generator_component: Sequence[int], nvars: int) -> bool:
    """Check sum_j (dr/dx_j)(t_c(j) - 1) = 0 for one Jacobian row."""
    total = zero(nvars)
    for g, entry in enumerate(row):
        total = total + entry * (LaurentPoly.var(generator_component[g], nvars) - 1)
    return total.is_zero()


@dataclass(frozen=True)
class AlexanderResult:
    delta: LaurentPoly
    component_polys: tuple[LaurentPoly, ...]
    torres_value: int | None
    n_components: int

    def render(self) -> str:
        from .laurent import render

        return render(self.delta, _names(self.n_components))


def _names(m: int) -> tuple[str, ...]:
    if m == 1:
        return ("t",)
    if m == 2:
        return ("s", "t")
    return tuple(f"t{i + 1}" for i in range(m))


class AlexanderError(ArithmeticError):
    pass


def _minor_delta(J, gens, nv, m, col, row) -> LaurentPoly:
    M = [[J[r][c] for c in range(len(gens)) if c != col] for r in range(len(J)) if r != row]
    D = determinant(M, nv)
    if m == 1:
        return D
    if D.is_zero():
        return D
    q = exact_quotient(D, LaurentPoly.var(gens[col], nv) - 1)
    if q is None:
        raise AlexanderError("minor is not divisible by (t_j - 1)")
    return q


def alexander_polynomial(d: LinkDiagram, check: bool = True) -> LaurentPoly:
    """Unit-normalized multivariable Alexander polynomial of ``d``.

    Delete the column of one generator (variable ``t_j``) and one relator,
    take the determinant, and for two or more components divide exactly by
    ``t_j - 1``.  With ``check`` a second, independent choice of column and
    relator is computed and must agree up to units.
    """
    m = d.n_components
    nv = max(m, 1)
    if d.n_crossings == 0:
        return one(nv) if m == 1 else zero(nv)
    p = wirtinger(d)
    if m >= 2 and p.n_generators > len(p.relators):
        # some component never passes under: it lifts off, so the link is split
        return zero(nv)
    J = fox_jacobian(p)
    gens = p.generator_component
    n = len(J)
    first = _minor_delta(J, gens, nv, m, 0, n - 1)
    if check and n > 1:
        col2 = _second_column(gens)
        second = _minor_delta(J, gens, nv, m, col2, 0)
        if not unit_equal(first, second):
            raise AlexanderError("Alexander polynomial depends on the minor chosen")
    return normalize(first)


def _second_column(gens) -> int:
    # prefer a generator of a different component than column 0
    for c in range(len(gens) - 1, -1, -1):
        if gens[c] != gens[0]:
            return c
    return len(gens) - 1


def alexander_minors(d: LinkDiagram, choices) -> list[LaurentPoly]:
    """Normalized results for explicit ``(column, relator)`` choices."""
    m = d.n_components
    nv = max(m, 1)
    p = wirtinger(d)
    J = fox_jacobian(p)
    return [normalize(_minor_delta(J, p.generator_component, nv, m, c, r)) for c, r in choices]


def multivariable_alexander(d: LinkDiagram) -> AlexanderResult:
    delta = alexander_polynomial(d)
    m = d.n_components
    comps = tuple(alexander_polynomial(sublink(d, [i])) for i in range(m))
    torres = abs(delta.value_at_ones()) if m == 2 else None
    return AlexanderResult(delta, comps, torres, m)


def conjugation_symmetric(delta: LaurentPoly) -> bool:
    """Delta(t^-1) agrees with Delta(t) up to units."""
    return unit_equal(delta, delta.invert_vars())


class Verdict(str, Enum):
    OBSTRUCTS_SP_ONE = "ObstructsSpOne"
    NO_OBSTRUCTION = "NoObstruction"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ObstructionResult:
    verdict: Verdict
    divisor: LaurentPoly | None
    reason: str


def splitting_obstruction(res: AlexanderResult) -> ObstructionResult:
    """If sp(L) = 1 then Delta(s,1) * Delta(1,t) divides Delta(s,t).

    Returns ObstructsSpOne when the divisibility fails.
    """
    if res.n_components != 2:
        return ObstructionResult(Verdict.NOT_APPLICABLE, None, "needs exactly two components")
    delta = res.delta
    if delta.is_zero():
        return ObstructionResult(Verdict.NOT_APPLICABLE, None, "Delta vanishes")
    divisor = delta.set_var_to_one(1) * delta.set_var_to_one(0)
    if divisor.is_zero():
        return ObstructionResult(
            Verdict.NOT_APPLICABLE, divisor, "Delta(s,1)Delta(1,t) vanishes (linking number 0)"
        )
    if divides(divisor, delta):
        return ObstructionResult(Verdict.NO_OBSTRUCTION, normalize(divisor), "divides")
    return ObstructionResult(Verdict.OBSTRUCTS_SP_ONE, normalize(divisor), "does not divide")
