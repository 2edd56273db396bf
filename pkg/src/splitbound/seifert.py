"""Seifert surfaces from diagrams, Seifert matrices and signatures.

The surface is the one produced by Seifert's algorithm: one disk per Seifert
circle, stacked by nesting depth, joined by a half-twisted band at every
crossing.  A basis of H_1 comes from fundamental cycles of the Seifert graph.

Linking numbers ``lk(a, b+)`` are half the signed count of projection
crossings between ``a`` and the pushoff ``b+``.  Those crossings occur in

* shared bands: one crossing per shared band, sign ``-eps * alpha_a * alpha_b``
  where ``alpha`` is +1 when the loop runs from the left circle to the right
  circle of the crossing;
* disks: two arcs with endpoints on a circle cross an odd number of times
  iff their endpoints interleave.  Both loops may sit on the same disk, or one
  may sit on the disk while the other makes an excursion above it through the
  circle's interior.  Every circle is a cut vertex of the Seifert graph, so a
  loop through a circle spends the rest of its life either entirely inside it
  or entirely outside.

Inside a band the curves keep a lateral order; running across the band it is
reversed relative to the circle directions, so the slot of a curve at a port
is ordered by width on the left circle and against it on the right circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .diagram import LinkDiagram
from .laurent import LaurentPoly, determinant


@dataclass(frozen=True)
class Band:
    crossing: int
    sign: int
    left: int
    right: int


@dataclass(frozen=True)
class SeifertData:
    """Combinatorics of the Seifert surface and its Seifert matrix."""

    circles: tuple[tuple[int, ...], ...]
    bands: tuple[Band, ...]
    n_loops: int
    b0: int
    matrix: tuple[tuple[int, ...], ...]
    loops: tuple[tuple[int, ...], ...] = ()

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def euler_characteristic(self) -> int:
        return len(self.circles) + self.n_loops - len(self.bands)

    def symmetrized(self) -> list[list[int]]:
        A = self.matrix
        n = len(A)
        return [[A[i][j] + A[j][i] for j in range(n)] for i in range(n)]


def seifert_circles(d: LinkDiagram) -> tuple[list[tuple[int, ...]], dict[int, int]]:
    """Seifert circles as edge cycles, and the circle index of every edge."""
    succ = {}
    for e, (k, p) in d.heads.items():
        x = d.crossings[k]
        if x.sign > 0:
            q = {0: 1, 3: 2}[p]
        else:
            q = {0: 3, 1: 2}[p]
        succ[e] = x.edges[q]
    circles = []
    circle_of = {}
    for e in sorted(succ):
        if e in circle_of:
            continue
        cyc = [e]
        circle_of[e] = len(circles)
        f = succ[e]
        while f != e:
            circle_of[f] = len(circles)
            cyc.append(f)
            f = succ[f]
        circles.append(tuple(cyc))
    return circles, circle_of


def _left_right(d: LinkDiagram, k: int, circle_of) -> tuple[int, int]:
    x = d.crossings[k]
    if x.sign > 0:
        left, right = circle_of[x.edges[3]], circle_of[x.edges[0]]
    else:
        left, right = circle_of[x.edges[0]], circle_of[x.edges[1]]
    if left == right:
        raise AssertionError("both arcs of a smoothed crossing on one circle")
    return left, right


def _gap_corners(sign: int) -> tuple[int, int]:
    return (1, 3) if sign > 0 else (0, 2)


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _piece_matrix(d: LinkDiagram, piece: Sequence[int], circles, circle_of, bands):
    """Seifert matrix and loops for one connected piece of the diagram."""
    piece_set = set(piece)
    my_circles = sorted({circle_of[e] for k in piece for e in d.crossings[k].edges})
    faces = sorted({d.corner_face[(k, p)] for k in piece for p in range(4)})

    # regions of the smoothed diagram: faces glued through the gap at each crossing
    uf = _UnionFind(faces)
    for k in piece:
        g1, g2 = _gap_corners(d.crossings[k].sign)
        uf.union(d.corner_face[(k, g1)], d.corner_face[(k, g2)])
    crossing_region = {k: uf.find(d.corner_face[(k, _gap_corners(d.crossings[k].sign)[0])]) for k in piece}

    sides = {}
    for c in my_circles:
        lr = {tuple(uf.find(f) for f in d.edge_sides(e)) for e in circles[c]}
        if len(lr) != 1:
            raise AssertionError("circle sides are not constant")
        sides[c] = lr.pop()
    regions = sorted({uf.find(f) for f in faces})
    if len(regions) != len(my_circles) + 1:
        raise AssertionError("region/circle count mismatch")

    # root the region tree at the region of the first face
    root = uf.find(faces[0])
    interior = {}
    frontier = [root]
    seen_regions = {root}
    while frontier:
        r = frontier.pop()
        for c in my_circles:
            if c in interior:
                continue
            lft, rgt = sides[c]
            if r in (lft, rgt):
                inner = rgt if r == lft else lft
                interior[c] = inner
                if inner not in seen_regions:
                    seen_regions.add(inner)
                    frontier.append(inner)
    ccw = {c: 1 if interior[c] == sides[c][0] else -1 for c in my_circles}

    # ports: order in which each circle passes through its crossings
    port_index = {}
    for c in my_circles:
        for i, e in enumerate(circles[c]):
            port_index[(c, d.heads[e][0])] = i

    # Seifert graph spanning tree and fundamental cycles
    adj: dict[int, list[tuple[int, int]]] = {c: [] for c in my_circles}
    for k in piece:
        b = bands[k]
        adj[b.left].append((k, b.right))
        adj[b.right].append((k, b.left))
    start = my_circles[0]
    parent = {start: (None, None)}
    depth = {start: 0}
    order = [start]
    tree_edges = set()
    for c in order:
        for k, o in sorted(adj[c]):
            if o not in parent:
                parent[o] = (k, c)
                depth[o] = depth[c] + 1
                tree_edges.add(k)
                order.append(o)
    loops = []
    for k in sorted(piece_set - tree_edges):
        loops.append(_fundamental_cycle(bands[k], parent, depth))

    # loop i runs at width 2i+2 and its pushoff at 2i+3
    visits = [_visits(loop, bands, port_index, crossing_region, interior) for loop in loops]
    n = len(loops)
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            A[i][j] = _pair_linking(visits[i], visits[j], 2 * i + 2, 2 * j + 3, bands, ccw)
    return A, [tuple(k for k, _ in lp) for lp in loops]


def _fundamental_cycle(band: Band, parent, depth):
    """Cycle closing the tree through ``band``: list of (crossing, from circle)."""
    u, v = band.left, band.right
    up_u, up_v = [], []
    while depth[u] > depth[v]:
        k, p = parent[u]
        up_u.append((k, u, p))
        u = p
    while depth[v] > depth[u]:
        k, p = parent[v]
        up_v.append((k, v, p))
        v = p
    while u != v:
        k, p = parent[u]
        up_u.append((k, u, p))
        u = p
        k, p = parent[v]
        up_v.append((k, v, p))
        v = p
    # travel left -> right through the band, then back from right to left in the tree
    steps = [(band.crossing, band.left)]
    for k, child, par in up_v:
        steps.append((k, child))
    for k, child, par in reversed(up_u):
        steps.append((k, par))
    return steps


def _visits(loop, bands, port_index, crossing_region, interior):
    """Band directions and per-circle chord data for one loop.

    Returns ``(alpha, chords)`` where ``alpha[k]`` is +1 if the loop crosses
    band ``k`` from its left circle to its right circle, and ``chords[c]`` is
    ``((entry port, entry on left), (exit port, exit on left), inward)``.
    """
    alpha = {}
    arrive = {}
    leave = {}
    for k, frm in loop:
        b = bands[k]
        to = b.right if frm == b.left else b.left
        alpha[k] = 1 if frm == b.left else -1
        leave[frm] = k
        arrive[to] = k
    chords = {}
    for c in arrive:
        k_in, k_out = arrive[c], leave[c]
        inward = {crossing_region[k_in] == interior[c], crossing_region[k_out] == interior[c]}
        if len(inward) != 1:
            raise AssertionError("loop leaves a circle on both sides")
        chords[c] = (
            (port_index[(c, k_in)], bands[k_in].left == c),
            (port_index[(c, k_out)], bands[k_out].left == c),
            inward.pop(),
        )
    return alpha, chords


def _slot(port, w):
    idx, on_left = port
    return (idx, w if on_left else -w)


def _fwd(p, a, b) -> bool:
    """Is ``p`` strictly on the forward arc from ``a`` to ``b`` of a circle."""
    if a < b:
        return a < p < b
    return p > a or p < b


def _pair_linking(va, vb, wa, wb, bands, ccw) -> int:
    """lk(a, b+) with ``a`` drawn at width ``wa`` and ``b+`` at width ``wb``."""
    alpha_a, chords_a = va
    alpha_b, chords_b = vb
    twice = 0
    for k, s in alpha_a.items():
        if k in alpha_b:
            twice -= bands[k].sign * s * alpha_b[k]
    for c, (ain, aout, a_inward) in chords_a.items():
        if c not in chords_b:
            continue
        bin_, bout, b_inward = chords_b[c]
        p_a, q_a = _slot(ain, wa), _slot(aout, wa)
        p_b, q_b = _slot(bin_, wb), _slot(bout, wb)
        f = _fwd(p_b, p_a, q_a)
        if f == _fwd(q_b, p_a, q_a):
            continue
        f = 1 if f else -1
        # same-disk crossing, then excursions of b+ above a and of a above b+
        twice -= f
        if b_inward:
            twice += ccw[c] * f
        if a_inward:
            twice -= ccw[c] * f
    if twice % 2:
        raise AssertionError("half-integral Seifert pairing")
    return twice // 2


def seifert_matrix(d: LinkDiagram) -> SeifertData:
    """Seifert data of the surface from Seifert's algorithm.

    Disconnected diagrams give the disjoint union of the surfaces of their
    pieces, so the matrix is block diagonal.

    >>> from splitbound.diagram import realize_dt
    >>> seifert_matrix(realize_dt("(4,6,2)")).matrix
    ((-1, 0), (-1, -1))
    """
    circles, circle_of = seifert_circles(d)
    bands = {}
    for k, x in enumerate(d.crossings):
        left, right = _left_right(d, k, circle_of)
        bands[k] = Band(k, x.sign, left, right)
    blocks = []
    all_loops = []
    pieces = d.crossing_graph_pieces() if d.crossings else []
    for piece in pieces:
        A, loops = _piece_matrix(d, piece, circles, circle_of, bands)
        blocks.append(A)
        all_loops.extend(loops)
    n = sum(len(B) for B in blocks)
    M = [[0] * n for _ in range(n)]
    off = 0
    for B in blocks:
        for i, row in enumerate(B):
            for j, v in enumerate(row):
                M[off + i][off + j] = v
        off += len(B)
    return SeifertData(
        circles=tuple(circles),
        bands=tuple(bands[k] for k in range(len(d.crossings))),
        n_loops=len(d.loops),
        b0=len(pieces) + len(d.loops),
        matrix=tuple(tuple(r) for r in M),
        loops=tuple(all_loops),
    )


def seifert_alexander(data: SeifertData) -> LaurentPoly:
    """det(t A - A^T), the one-variable Alexander polynomial up to units."""
    A = data.matrix
    n = len(A)
    if n == 0:
        return LaurentPoly.const(1, 1)
    t = LaurentPoly.var(0, 1)
    M = [[t * A[i][j] - A[j][i] for j in range(n)] for i in range(n)]
    return determinant(M, 1)


# ---------------------------------------------------------------------------
# inertia of symmetric integer matrices


def inertia(S: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts by exact congruence diagonalization.

    A zero diagonal with a nonzero off-diagonal entry ``S[i][j]`` is handled by
    adding row and column ``j`` to ``i``, which makes the pivot ``2 S[i][j]``.

    >>> inertia([[0, 1], [1, 0]])
    (1, 1, 0)
    """
    M = [[Fraction(v) for v in row] for row in S]
    n = len(M)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if M[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and M[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for r in range(n):
                M[i][r] += M[j][r]
            for r in range(n):
                M[r][i] += M[r][j]
            piv = i
        p = M[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for r in active:
            if M[r][piv] != 0:
                f = M[r][piv] / p
                for c in active:
                    M[r][c] -= f * M[piv][c]
        for r in active:
            M[r][piv] = M[piv][r] = Fraction(0)
    return pos, neg, n - pos - neg


def charpoly(S: Sequence[Sequence[int]]) -> list[int]:
    """Characteristic polynomial coefficients, highest degree first (Faddeev-LeVerrier)."""
    n = len(S)
    A = [[Fraction(v) for v in row] for row in S]
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        M = [[AM[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(AM[i][i] for i in range(n)) / k
        coeffs.append(c)
    out = [int(c) for c in coeffs]
    if any(Fraction(o) != c for o, c in zip(out, coeffs)):
        raise AssertionError("non-integral characteristic polynomial")
    return out


def _sign_changes(seq) -> int:
    nz = [v for v in seq if v != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


def inertia_by_charpoly(S: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Inertia from Descartes' rule, exact because every root is real."""
    n = len(S)
    if n == 0:
        return 0, 0, 0
    cp = charpoly(S)
    zero = 0
    while cp and cp[-1] == 0:
        cp.pop()
        zero += 1
    pos = _sign_changes(cp)
    deg = len(cp) - 1
    neg = _sign_changes([c * (-1) ** (deg - i) for i, c in enumerate(cp)])
    if pos + neg + zero != n:
        raise AssertionError("charpoly root count mismatch")
    return pos, neg, zero


@dataclass(frozen=True)
class SignatureResult:
    signature: int
    nullity: int
    data: SeifertData


def signature_data(d: LinkDiagram, check: bool = True) -> SignatureResult:
    data = seifert_matrix(d)
    S = data.symmetrized()
    pos, neg, zero = inertia(S)
    if check and (pos, neg, zero) != inertia_by_charpoly(S):
        raise AssertionError("inertia methods disagree")
    return SignatureResult(pos - neg, zero, data)


def signature(d: LinkDiagram) -> int:
    """sign(A + A^T) for the Seifert matrix of ``d`` with its orientation."""
    return signature_data(d).signature


def slice_genus_lower_bound(d: LinkDiagram) -> int:
    """ceil(|sigma| / 2) for a knot diagram."""
    if d.n_components != 1:
        raise ValueError("slice genus bound expects a knot")
    return (abs(signature(d)) + 1) // 2


@dataclass(frozen=True)
class MurasugiResult:
    obstructed: bool
    sigma: int
    allowance: int

    @property
    def verdict(self) -> str:
        return "Obstructed" if self.obstructed else "Consistent"


def murasugi_obstruction(d: LinkDiagram | int, g: int, b0: int, m: int | None = None) -> MurasugiResult:
    """Compare |sigma| with 2g + m - b0 for a surface of genus g with b0 components.

    ``d`` may be a diagram or an already computed signature.
    """
    if isinstance(d, LinkDiagram):
        sigma = signature(d)
        if m is None:
            m = d.n_components
    else:
        sigma = d
        if m is None:
            raise ValueError("component count needed with a bare signature")
    allowance = 2 * g + m - b0
    return MurasugiResult(abs(sigma) > allowance, sigma, allowance)
