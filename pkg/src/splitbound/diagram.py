"""Oriented link diagrams: PD and DT notations, validation, sublinks.

Conventions
-----------
A crossing is written ``X[a,b,c,d]`` as in knot-atlas exports: ``a`` is the
incoming under-edge and the remaining edges follow counterclockwise, so the
under strand runs ``a -> c``.  The over strand runs either ``d -> b`` or
``b -> d``.  A crossing is right-handed (sign +1) exactly when the over strand
runs ``d -> b``; with the under strand pointing north that is the picture
where the over strand points east, and ``over x under > 0``.

Edge labels are kept as given.  Components are ordered by their smallest edge
label and each component is traversed starting from that edge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product


class DiagramError(ValueError):
    """Raised for malformed or inconsistent diagram input."""


@dataclass(frozen=True)
class Crossing:
    edges: tuple[int, int, int, int]
    sign: int

    @property
    def under(self) -> tuple[int, int]:
        return self.edges[0], self.edges[2]

    @property
    def over(self) -> tuple[int, int]:
        a, b, c, d = self.edges
        return (d, b) if self.sign > 0 else (b, d)

    def incoming_positions(self) -> tuple[int, int]:
        return (0, 3) if self.sign > 0 else (0, 1)


@dataclass(frozen=True)
class LinkDiagram:
    """Validated oriented diagram.

    ``crossings`` hold PD tuples with signs; ``loops`` are labels of
    crossingless unknotted components.  Derived data (components, edge
    endpoints) is computed lazily and never mutated.
    """

    crossings: tuple[Crossing, ...]
    loops: tuple[int, ...] = ()
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not self._checked:
            _validate(self.crossings, self.loops)

    # -- basic counts -------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @cached_property
    def tails(self) -> dict[int, tuple[int, int]]:
        """edge -> (crossing index, position) where the edge leaves."""
        out = {}
        for k, x in enumerate(self.crossings):
            ins = x.incoming_positions()
            for p in range(4):
                if p not in ins:
                    out[x.edges[p]] = (k, p)
        return out

    @cached_property
    def heads(self) -> dict[int, tuple[int, int]]:
        """edge -> (crossing index, position) where the edge arrives."""
        out = {}
        for k, x in enumerate(self.crossings):
            for p in x.incoming_positions():
                out[x.edges[p]] = (k, p)
        return out

    def next_edge(self, e: int) -> int:
        """Edge that continues the strand of ``e`` through its head crossing."""
        k, p = self.heads[e]
        return self.crossings[k].edges[(p + 2) % 4]

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Edge cycles in traversal order, ordered by smallest label."""
        seen: set[int] = set()
        comps = []
        for e in sorted(self.edge_labels):
            if e in seen:
                continue
            if e in self.loops:
                cyc = [e]
            else:
                cyc = [e]
                f = self.next_edge(e)
                while f != e:
                    cyc.append(f)
                    f = self.next_edge(f)
            seen.update(cyc)
            comps.append(tuple(cyc))
        return tuple(comps)

    @cached_property
    def edge_labels(self) -> frozenset[int]:
        labs = set(self.loops)
        for x in self.crossings:
            labs.update(x.edges)
        return frozenset(labs)

    @cached_property
    def edge_component(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    def strand_components(self, k: int) -> tuple[int, int]:
        """(under component, over component) at crossing ``k``."""
        x = self.crossings[k]
        return self.edge_component[x.edges[0]], self.edge_component[x.edges[1]]

    # -- faces --------------------------------------------------------
    @cached_property
    def faces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Faces as cycles of corners ``(crossing, p)``.

        Corner ``(k, p)`` is the sector between positions ``p`` and ``p+1``
        (counterclockwise) at crossing ``k``.  Walking out along position
        ``p+1`` keeps the corner on the right, so the next corner is the
        arrival corner at the far end of that edge.
        """
        ends: dict[int, list[tuple[int, int]]] = {}
        for k, x in enumerate(self.crossings):
            for p, e in enumerate(x.edges):
                ends.setdefault(e, []).append((k, p))
        seen = set()
        faces = []
        for k in range(len(self.crossings)):
            for p in range(4):
                if (k, p) in seen:
                    continue
                face = []
                cur = (k, p)
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    ck, cp = cur
                    q = (cp + 1) % 4
                    e = self.crossings[ck].edges[q]
                    a, b = ends[e]
                    nxt = b if a == (ck, q) else a
                    cur = nxt
                faces.append(tuple(face))
        return tuple(faces)

    @cached_property
    def corner_face(self) -> dict[tuple[int, int], int]:
        return {c: i for i, f in enumerate(self.faces) for c in f}

    def edge_sides(self, e: int) -> tuple[int, int]:
        """(left face, right face) of edge ``e`` with its orientation."""
        k, p = self.tails[e]
        left = self.corner_face[(k, p)]
        right = self.corner_face[(k, (p - 1) % 4)]
        return left, right

    def crossing_graph_pieces(self) -> list[list[int]]:
        """Crossing indices grouped by connected piece of the diagram."""
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for e, (k, _) in self.tails.items():
            h = self.heads[e][0]
            parent[find(k)] = find(h)
        groups: dict[int, list[int]] = {}
        for k in range(len(self.crossings)):
            groups.setdefault(find(k), []).append(k)
        return sorted(groups.values())

    # -- derived diagrams ---------------------------------------------
    def relabeled(self) -> "LinkDiagram":
        """Relabel edges 1..E along components in component order."""
        new = {}
        nxt = 1
        for comp in self.components:
            for e in comp:
                new[e] = nxt
                nxt += 1
        xs = tuple(Crossing(tuple(new[e] for e in x.edges), x.sign) for x in self.crossings)
        return LinkDiagram(xs, tuple(new[e] for e in self.loops))

    def mirror(self) -> "LinkDiagram":
        xs = []
        for x in self.crossings:
            a, b, c, d = x.edges
            if x.sign > 0:
                xs.append(Crossing((d, a, b, c), -1))
            else:
                xs.append(Crossing((b, c, d, a), +1))
        return LinkDiagram(tuple(xs), self.loops)

    def reverse(self, comps) -> "LinkDiagram":
        """Reverse the orientation of the given component indices."""
        flip = {e for i in comps for e in self.components[i]}
        xs = []
        for x in self.crossings:
            a, b, c, d = x.edges
            under_flip = a in flip
            over_flip = b in flip
            edges = (c, d, a, b) if under_flip else (a, b, c, d)
            sign = x.sign * (-1 if under_flip != over_flip else 1)
            xs.append(Crossing(edges, sign))
        return LinkDiagram(tuple(xs), self.loops)


def _validate(crossings, loops):
    counts: dict[int, int] = {}
    for x in crossings:
        if len(x.edges) != 4:
            raise DiagramError("crossing must have four edges")
        if x.sign not in (1, -1):
            raise DiagramError("crossing sign must be +1 or -1")
        for e in x.edges:
            counts[e] = counts.get(e, 0) + 1
    for e, c in counts.items():
        if c != 2:
            raise DiagramError(f"arc multiplicity: edge {e} appears {c} times")
    for e in loops:
        if e in counts:
            raise DiagramError(f"loop label {e} also used by a crossing")
    if len(set(loops)) != len(loops):
        raise DiagramError("duplicate loop label")
    heads: dict[int, int] = {}
    tails: dict[int, int] = {}
    for x in crossings:
        ins = x.incoming_positions()
        for p, e in enumerate(x.edges):
            d = heads if p in ins else tails
            d[e] = d.get(e, 0) + 1
    for e in counts:
        if heads.get(e, 0) != 1 or tails.get(e, 0) != 1:
            raise DiagramError(f"inconsistent orientation at edge {e}")
    if not crossings and not loops:
        raise DiagramError("empty diagram")


# ---------------------------------------------------------------------------
# PD text


_X_RE = re.compile(r"X\[([^\]]*)\]")
_LOOP_RE = re.compile(r"Loop\[([^\]]*)\]")


def parse_pd_tuples(text: str) -> tuple[list[tuple[int, int, int, int]], list[int]]:
    s = "".join(text.split())
    if not s:
        raise DiagramError("empty PD text")
    body = s
    if s.startswith("PD["):
        if not s.endswith("]"):
            raise DiagramError("malformed PD: missing closing bracket")
        body = s[3:-1]
    tuples = []
    loops = []
    pos = 0
    while pos < len(body):
        if body[pos] == ",":
            pos += 1
            continue
        m = _X_RE.match(body, pos)
        if m:
            try:
                vals = tuple(int(v) for v in m.group(1).split(","))
            except ValueError:
                raise DiagramError(f"malformed PD: bad integer in {m.group(0)}") from None
            if len(vals) != 4:
                raise DiagramError(f"malformed PD: {m.group(0)} needs four entries")
            tuples.append(vals)
            pos = m.end()
            continue
        m = _LOOP_RE.match(body, pos)
        if m:
            try:
                loops.append(int(m.group(1)))
            except ValueError:
                raise DiagramError(f"malformed PD: bad loop {m.group(0)}") from None
            pos = m.end()
            continue
        raise DiagramError(f"malformed PD near {body[pos:pos + 12]!r}")
    return tuples, loops


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``PD[X[..],...]`` text (``Loop[k]`` marks a crossingless unknot).

    >>> d = parse_pd("PD[X[4,2,1,3], X[2,4,3,1]]")
    >>> [x.sign for x in d.crossings], d.n_components
    ([1, 1], 2)
    """
    tuples, loops = parse_pd_tuples(text)
    if not tuples and not loops:
        loops = [1]
    return diagram_from_pd(tuples, loops)


def diagram_from_pd(tuples, loops=()) -> LinkDiagram:
    """Build a diagram from unsigned PD tuples, inferring over-strand directions.

    Under strands fix their own direction.  The direction propagates along
    each component through its over passes.  A component that never passes
    under is oriented so that labels increase along it.
    """
    tuples = [tuple(t) for t in tuples]
    counts: dict[int, int] = {}
    for t in tuples:
        for e in t:
            counts[e] = counts.get(e, 0) + 1
    for e, c in counts.items():
        if c != 2:
            raise DiagramError(f"arc multiplicity: edge {e} appears {c} times")
    for e in loops:
        if e in counts:
            raise DiagramError(f"arc multiplicity: loop label {e} also used by a crossing")

    ends: dict[int, list[tuple[int, int]]] = {}
    for k, t in enumerate(tuples):
        for p, e in enumerate(t):
            ends.setdefault(e, []).append((k, p))

    # out_pos[(k, p)] is True if the strand leaves crossing k at position p
    direction: dict[tuple[int, int], bool] = {}

    def other_end(e, here):
        a, b = ends[e]
        return b if a == here else a

    def walk(k, p_in):
        # strand enters crossing k at position p_in; follow until closed
        while True:
            if (k, p_in) in direction:
                if direction[(k, p_in)]:
                    raise DiagramError(f"inconsistent orientation at crossing {k + 1}")
                return
            p_out = (p_in + 2) % 4
            if direction.get((k, p_out)) is False:
                raise DiagramError(f"inconsistent orientation at crossing {k + 1}")
            direction[(k, p_in)] = False
            direction[(k, p_out)] = True
            e = tuples[k][p_out]
            k, p_in = other_end(e, (k, p_out))

    for k in range(len(tuples)):
        if (k, 0) not in direction:
            walk(k, 0)
        elif direction[(k, 0)]:
            raise DiagramError(f"inconsistent orientation at crossing {k + 1}")
        if direction.get((k, 2)) is False:
            raise DiagramError(f"inconsistent orientation at crossing {k + 1}")
    for k in range(len(tuples)):
        if (k, 1) in direction:
            continue
        e = min(tuples[k][1], tuples[k][3])
        # orient the smallest edge of this over-only strand toward e + 1
        a, b = ends[e]
        start = None
        for here in (a, b):
            ck, cp = here
            nxt = tuples[ck][(cp + 2) % 4]
            if nxt == e + 1:
                start = here
        if start is None:
            start = a
        walk(start[0], start[1])
    xs = []
    for k, t in enumerate(tuples):
        sign = 1 if direction[(k, 3)] is False else -1
        xs.append(Crossing(t, sign))
    return LinkDiagram(tuple(xs), tuple(loops))


def render_pd(d: LinkDiagram) -> str:
    parts = [f"X[{a},{b},{c},{e}]" for a, b, c, e in (x.edges for x in d.crossings)]
    parts += [f"Loop[{e}]" for e in d.loops]
    return "PD[" + ",".join(parts) + "]"


def pd_tuples(d: LinkDiagram) -> list[list[int]]:
    return [list(x.edges) for x in d.crossings]


def disjoint_union(*ds: LinkDiagram) -> LinkDiagram:
    xs = []
    loops = []
    shift = 0
    for d in ds:
        for x in d.crossings:
            xs.append(Crossing(tuple(e + shift for e in x.edges), x.sign))
        loops.extend(e + shift for e in d.loops)
        shift += max(d.edge_labels)
    return LinkDiagram(tuple(xs), tuple(loops))


def isomorphic(d1: LinkDiagram, d2: LinkDiagram) -> bool:
    """Labelled-crossing isomorphism up to edge relabelling (small diagrams)."""
    if (d1.n_crossings, len(d1.loops)) != (d2.n_crossings, len(d2.loops)):
        return False
    if sorted(x.sign for x in d1.crossings) != sorted(x.sign for x in d2.crossings):
        return False
    if not d1.crossings:
        return True
    # anchor crossing 0 of d1 against every crossing of d2 with matching sign
    for k2 in range(d2.n_crossings):
        if _match_from(d1, d2, 0, k2):
            return True
    return False


def _match_from(d1, d2, k1, k2):
    ends1, ends2 = _ends(d1), _ends(d2)
    cmap = {k1: k2}
    stack = [(k1, k2)]
    while stack:
        a, b = stack.pop()
        xa, xb = d1.crossings[a], d2.crossings[b]
        if xa.sign != xb.sign:
            return False
        for p in range(4):
            oa = _other(ends1[xa.edges[p]], (a, p))
            ob = _other(ends2[xb.edges[p]], (b, p))
            if oa[1] != ob[1]:
                return False
            if oa[0] in cmap:
                if cmap[oa[0]] != ob[0]:
                    return False
            else:
                cmap[oa[0]] = ob[0]
                stack.append((oa[0], ob[0]))
    return len(cmap) == d1.n_crossings and len(set(cmap.values())) == len(cmap)


def _other(pair, here):
    a, b = pair
    return b if a == here else a


def _ends(d):
    ends: dict[int, list[tuple[int, int]]] = {}
    for k, x in enumerate(d.crossings):
        for p, e in enumerate(x.edges):
            ends.setdefault(e, []).append((k, p))
    return ends


# ---------------------------------------------------------------------------
# sublinks


def sublink(d: LinkDiagram, keep) -> LinkDiagram:
    """Diagram of the components in ``keep`` (indices into ``d.components``).

    Crossings between two kept strands survive.  A crossing with one deleted
    strand is smoothed away by joining the kept strand's two edges; crossings
    of deleted strands vanish.  Labels are renumbered along the kept
    components in their original order.
    """
    keep = sorted(set(keep))
    if not keep:
        raise DiagramError("sublink needs at least one component")
    m = d.n_components
    for i in keep:
        if not 0 <= i < m:
            raise DiagramError(f"unknown component {i}")
    kept_edges = {e for i in keep for e in d.components[i]}
    parent = {e: e for e in kept_edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    survivors = []
    for x in d.crossings:
        a, b, c, e4 = x.edges
        u_kept = a in kept_edges
        o_kept = b in kept_edges
        if u_kept and o_kept:
            survivors.append(x)
        elif u_kept:
            parent[find(a)] = find(c)
        elif o_kept:
            parent[find(b)] = find(e4)
    # number classes along the kept components, starting at a class boundary
    label: dict[int, int] = {}
    nxt = 1
    for i in keep:
        comp = d.components[i]
        start = next((j for j, e in enumerate(comp) if find(e) != find(comp[j - 1])), 0)
        for e in comp[start:] + comp[:start]:
            r = find(e)
            if r not in label:
                label[r] = nxt
                nxt += 1
    used = {find(e) for x in survivors for e in x.edges}
    loops = [label[find(d.components[i][0])] for i in keep if find(d.components[i][0]) not in used]
    xs = tuple(Crossing(tuple(label[find(e)] for e in x.edges), x.sign) for x in survivors)
    return LinkDiagram(xs, tuple(loops))


# ---------------------------------------------------------------------------
# DT codes


@dataclass(frozen=True)
class DTCode:
    components: tuple[tuple[int, ...], ...]

    @property
    def n_crossings(self) -> int:
        return sum(len(c) for c in self.components)

    def __str__(self) -> str:
        return ",".join("(" + ",".join(str(v) for v in c) + ")" for c in self.components)


def parse_dt(text: str) -> DTCode:
    """Parse per-component tuples of signed even labels.

    >>> parse_dt("(4,6,2)").n_crossings
    3
    """
    s = "".join(text.split())
    s = s.replace("[", "(").replace("]", ")")
    if s in ("", "()"):
        return DTCode(())
    groups = re.findall(r"\(([^()]*)\)", s)
    rest = re.sub(r"\(([^()]*)\)", "", s).replace(",", "")
    if rest:
        raise DiagramError(f"malformed DT code near {rest[:10]!r}")
    comps = []
    for g in groups:
        if not g:
            raise DiagramError("empty DT component")
        try:
            comps.append(tuple(int(v) for v in g.split(",")))
        except ValueError:
            raise DiagramError(f"malformed DT entry in ({g})") from None
    vals = [v for c in comps for v in c]
    for v in vals:
        if v % 2:
            raise DiagramError(f"odd label {v} in DT code")
    n = len(vals)
    if sorted(abs(v) for v in vals) != list(range(2, 2 * n + 1, 2)):
        if len({abs(v) for v in vals}) != n:
            raise DiagramError("duplicate label in DT code")
        raise DiagramError("DT labels must be exactly 2, 4, ..., 2n")
    return DTCode(tuple(comps))


def realize_dt(code: DTCode | str) -> LinkDiagram:
    """Planar diagram for a DT code.

    Component ``i`` carries consecutive labels; its length is twice the size
    of its tuple.  The even label paired with odd label ``2j-1`` is the
    ``j``-th entry overall.  A negative entry means the even passage is the
    over-strand.  At every crossing there are two ways to cyclically order
    the four half-edges; the search keeps the choices whose face count gives
    Euler characteristic 2 (crossing 1 is fixed, which fixes the mirror).
    Edge ``j`` of the result runs from passage ``j`` to the next passage.
    """
    if isinstance(code, str):
        code = parse_dt(code)
    n = code.n_crossings
    if n == 0:
        return LinkDiagram((), (1,))
    sizes = [2 * len(c) for c in code.components]
    nxt: dict[int, int] = {}
    prv: dict[int, int] = {}
    start = 1
    for s in sizes:
        labs = list(range(start, start + s))
        for i, v in enumerate(labs):
            nxt[v] = labs[(i + 1) % s]
            prv[nxt[v]] = v
        start += s
    evens = [v for c in code.components for v in c]
    pairs = []  # (odd, even, even_over)
    for j, v in enumerate(evens):
        pairs.append((2 * j + 1, abs(v), v < 0))
    # half-edge ids: passage label v has in-half (edge prv[v]) and out-half (edge v)
    # candidate counterclockwise orders at each crossing, as (label, 'in'/'out')
    choices = []
    for o, e, _ in pairs:
        a = [(o, 0), (e, 0), (o, 1), (e, 1)]
        b = [(o, 0), (e, 1), (o, 1), (e, 0)]
        choices.append((a, b))
    # component connectivity check (diagram must be connected)
    where = {}
    for k, (o, e, _) in enumerate(pairs):
        where[o] = k
        where[e] = k
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for v in nxt:
        parent[find(where[v])] = find(where[nxt[v]])
    if len({find(k) for k in range(n)}) > 1:
        raise DiagramError("not realizable: DT code describes a disconnected diagram")

    solutions = []
    for bits in product((0, 1), repeat=n - 1):
        rot = [choices[0][0]] + [choices[k + 1][b] for k, b in enumerate(bits)]
        if _face_count(rot, nxt, prv) == n + 2:
            solutions.append(rot)
    if not solutions:
        raise DiagramError("not realizable: no planar embedding for this DT code")
    rot = solutions[0]
    xs = []
    for k, (o, e, even_over) in enumerate(pairs):
        order = rot[k]
        under_label = o if even_over else e
        # rotate so the incoming under half-edge comes first
        idx = order.index((under_label, 0))
        order = order[idx:] + order[:idx]
        edges = tuple(prv[v] if io == 0 else v for v, io in order)
        over_label = e if even_over else o
        over_in_pos = order.index((over_label, 0))
        sign = 1 if over_in_pos == 3 else -1
        xs.append(Crossing(edges, sign))
    return LinkDiagram(tuple(xs))


def _face_count(rot, nxt, prv):
    # half-edge (v, 0): incoming end of edge prv[v] at passage v;
    # half-edge (v, 1): outgoing end of edge v at passage v
    pos = {}
    for k, order in enumerate(rot):
        for i, h in enumerate(order):
            pos[h] = (k, i)
    seen = set()
    faces = 0
    for h0 in pos:
        if h0 in seen:
            continue
        faces += 1
        h = h0
        while h not in seen:
            seen.add(h)
            k, i = pos[h]
            v, io = rot[k][(i + 1) % 4]
            h = (nxt[v], 0) if io == 1 else (prv[v], 1)
    return faces
