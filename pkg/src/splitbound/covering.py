"""Braid closures, 2-fold covering links along a braid axis, and the
obstructions that covering links give for the splitting number.

When a link is a closed braid ``beta`` together with its braid axis, the
double cover of the solid torus complementary to the axis unrolls the
braid twice, so the covering link branched over the axis is the closure of
``beta * beta``.  Covers of other presentations enter as diagrams supplied
by the caller.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .diagram import Crossing, DiagramError, LinkDiagram
from .linking import LinkingMatrix, linking_matrix
from .obstructive import lemma_lower_bound
from .seifert import murasugi_obstruction, signature, slice_genus_lower_bound


@dataclass(frozen=True)
class BraidWord:
    """``strands`` strands; ``word`` entry ``i`` is sigma_i, ``-i`` its inverse."""

    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"generator {g} out of range for {self.strands} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.word + other.word)

    def permutation(self) -> tuple[int, ...]:
        """``perm[p]`` is the bottom position of the strand starting at ``p``."""
        at = list(range(self.strands))  # at[pos] = starting strand now at pos
        for g in self.word:
            i = abs(g) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        perm = [0] * self.strands
        for pos, s in enumerate(at):
            perm[s] = pos
        return tuple(perm)

    def __str__(self) -> str:
        return f"BR[{self.strands}; " + ",".join(str(g) for g in self.word) + "]"


_BR_RE = re.compile(r"^BR\[\s*(\d+)\s*[;,]\s*\{?([-\d,\s]*)\}?\s*\]$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``BR[k; 1,-2,...]``.

    >>> parse_braid("BR[3; 1,-2,1]")
    BraidWord(strands=3, word=(1, -2, 1))
    >>> parse_braid("BR[2;]").word
    ()
    """
    m = _BR_RE.match(text.strip())
    if not m:
        raise DiagramError(f"malformed braid {text!r}")
    body = m.group(2).replace(" ", "")
    word = tuple(int(v) for v in body.split(",") if v) if body else ()
    try:
        return BraidWord(int(m.group(1)), word)
    except ValueError as exc:
        raise DiagramError(str(exc)) from None


def braid_closure(b: BraidWord) -> LinkDiagram:
    """PD diagram of the closure, strands running down the page.

    At sigma_i the strand coming in at position ``i`` passes under and moves
    right, which makes the crossing right-handed; sigma_i^-1 is the mirror.
    Strands never touched by the word become crossingless loops.

    >>> d = braid_closure(parse_braid("BR[2; 1,1,1]"))
    >>> d.n_crossings, d.n_components, {x.sign for x in d.crossings}
    (3, 1, {1})
    """
    k = b.strands
    cur = list(range(1, k + 1))
    nxt = k + 1
    raw = []
    for g in b.word:
        i = abs(g) - 1
        a_in, b_in = cur[i], cur[i + 1]
        a_out, b_out = nxt, nxt + 1
        nxt += 2
        if g > 0:
            raw.append(((a_in, b_out, a_out, b_in), 1))
        else:
            raw.append(((b_in, a_in, b_out, a_out), -1))
        cur[i], cur[i + 1] = b_out, a_out
    close = {cur[p]: p + 1 for p in range(k) if cur[p] != p + 1}
    xs = tuple(Crossing(tuple(close.get(e, e) for e in t), s) for t, s in raw)
    used = {e for x in xs for e in x.edges}
    loops = tuple(p for p in range(1, k + 1) if p not in used)
    return LinkDiagram(xs, loops).relabeled()


def _axis_word(k: int) -> BraidWord:
    # sigma_k ... sigma_1 sigma_1 ... sigma_k: strand k+1 encircles the rest
    return BraidWord(k + 1, tuple(range(k, 0, -1)) + tuple(range(1, k + 1)))


@dataclass(frozen=True)
class AxisLink:
    """The closure of ``braid`` together with its axis, the branch component."""

    braid: BraidWord

    def closure(self) -> LinkDiagram:
        return braid_closure(self.braid)

    def axis_linking(self) -> tuple[int, ...]:
        """Linking of the axis with each closure component (its strand count)."""
        return tuple(len(c) for c in _cycles(self.braid.permutation()))

    def with_axis(self) -> tuple[LinkDiagram, int]:
        """Diagram of closure plus axis, and the axis component index.

        >>> d, i = AxisLink(parse_braid("BR[2; 1,1]")).with_axis()
        >>> d.n_components, i, linking_matrix(d).rows[i]
        (3, 2, (1, 1, 0))
        """
        k = self.braid.strands
        wide = BraidWord(k + 1, self.braid.word) * _axis_word(k)
        d = braid_closure(wide)
        # components come out in order of their first top position
        comps = _cycles(wide.permutation())
        return d, next(i for i, c in enumerate(comps) if k in c)


def _cycles(perm) -> list[list[int]]:
    seen = set()
    out = []
    for s in range(len(perm)):
        if s in seen:
            continue
        cyc = []
        while s not in seen:
            seen.add(s)
            cyc.append(s)
            s = perm[s]
        out.append(cyc)
    return out


def double_cover_along_axis(ax: AxisLink) -> LinkDiagram:
    """Covering link of ``closure(beta) + axis`` branched over the axis.

    Orientations are the lifted ones.

    >>> d = double_cover_along_axis(AxisLink(parse_braid("BR[2; 1,1]")))
    >>> d.n_components, linking_matrix(d).rows
    (2, ((0, 2), (2, 0)))
    """
    return braid_closure(ax.braid * ax.braid)


def cover_component_count(b: BraidWord) -> int:
    """Number of cycles of the squared braid permutation."""
    p = b.permutation()
    return len(_cycles(tuple(p[p[s]] for s in range(len(p)))))


def band_sum(d: LinkDiagram, e1: int, e2: int, twists: int = 0) -> LinkDiagram:
    """Oriented band move between edges ``e1`` and ``e2``.

    The band runs inside a face that both edges bound on the same side, so
    the untwisted band is planar and inherits the orientation.  ``twists``
    full twists add ``2 |twists|`` crossings of sign ``sign(twists)`` to the
    band.  Joining two components this way is an internal band sum.

    >>> from splitbound.diagram import parse_pd
    >>> hopf = parse_pd("PD[X[4,2,1,3], X[2,4,3,1]]")
    >>> band_sum(hopf, 1, 3).n_components
    1
    """
    if e1 == e2 or e1 in d.loops or e2 in d.loops:
        raise ValueError("band needs two distinct edges that meet crossings")
    l1, r1 = d.edge_sides(e1)
    l2, r2 = d.edge_sides(e2)
    if l1 != l2 and r1 != r2:
        raise ValueError(f"edges {e1} and {e2} share no face on the same side")
    h1, h2 = d.heads[e1], d.heads[e2]
    n = 2 * abs(twists)
    top = max(d.edge_labels) + 1
    a = [e1] + [top + i for i in range(n)]
    b = [e2] + [top + n + i for i in range(n)]
    xs = []
    for k, x in enumerate(d.crossings):
        edges = list(x.edges)
        if k == h1[0]:
            edges[h1[1]] = b[-1]
        if k == h2[0]:
            edges[h2[1]] = a[-1]
        xs.append(Crossing(tuple(edges), x.sign))
    if n == 0:
        return LinkDiagram(tuple(xs), d.loops).relabeled()
    # the band's crossings in order along the arc from e1; the arc from e2
    # meets them in reverse.  Two planar layouts exist; keep the one whose
    # face count is right.
    sign = 1 if twists > 0 else -1
    for layout in (0, 1):
        extra = []
        for i in range(n):
            ai, ao = a[i], a[i + 1]
            bi, bo = b[n - 1 - i], b[n - i]
            a_under = (i + layout) % 2 == 0
            if a_under:
                t = (ai, bo, ao, bi) if sign > 0 else (ai, bi, ao, bo)
            else:
                t = (bi, ao, bo, ai) if sign > 0 else (bi, ai, bo, ao)
            extra.append(Crossing(t, sign))
        out = LinkDiagram(tuple(xs + extra), d.loops)
        if _is_planar(out):
            return out.relabeled()
    raise ValueError("no planar layout for the twisted band")


def _is_planar(d: LinkDiagram) -> bool:
    pieces = len(d.crossing_graph_pieces())
    return len(d.faces) == d.n_crossings + 2 * pieces - (pieces - 1)


@dataclass(frozen=True)
class SplitBudget:
    """Crossing changes that split a link, sorted by the branch component.

    ``alpha`` changes involve the branch component, ``beta`` do not.
    ``genera`` are slice genera of the non-branch components.
    """

    alpha: int
    beta: int
    genera: tuple[int, ...] = ()

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0 or any(g < 0 for g in self.genera):
            raise ValueError("budget entries must be nonnegative")


@dataclass(frozen=True)
class EulerBudget:
    chi: int
    connected: bool | None


def euler_char_budget(m: int, budget: SplitBudget, changed_pairs=None, branch: int = 0) -> EulerBudget:
    """Euler characteristic of the surface in the 4-ball bounded by the covering link.

    chi = 2(m-1) - alpha - 4 beta - 4 (sum of slice genera).  When the changed
    pairs of components are given, ``connected`` reports whether the
    surface is forced to be connected (see ``star_connected``); otherwise
    it is None.

    >>> euler_char_budget(3, SplitBudget(2, 1)).chi
    -2
    """
    if m < 2:
        raise ValueError("covering links need at least two components")
    chi = 2 * (m - 1) - budget.alpha - 4 * budget.beta - 4 * sum(budget.genera)
    connected = None
    if changed_pairs is not None:
        connected = star_connected(m, changed_pairs, branch)
    return EulerBudget(chi, connected)


def star_connected(m: int, changed_pairs, branch: int = 0) -> bool:
    """True when some component j other than the branch has been changed
    against every other component (the surface is then connected).

    >>> star_connected(3, [(0, 1), (1, 2)])
    True
    >>> star_connected(3, [(0, 1), (0, 2)])
    False
    """
    pairs = {frozenset(p) for p in changed_pairs}
    return any(
        all(frozenset((j, k)) in pairs for k in range(m) if k != j)
        for j in range(m)
        if j != branch
    )


class Outcome(str, Enum):
    OBSTRUCTED = "Obstructed"
    CONSISTENT = "Consistent"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CoverVerdict:
    outcome: Outcome
    reason: str
    evidence: dict = field(default_factory=dict)

    @property
    def obstructed(self) -> bool:
        return self.outcome is Outcome.OBSTRUCTED


def covering_knot_obstruction(cover: LinkDiagram, k: int) -> CoverVerdict:
    """If sp(L) = 2k+1 with lk odd, every 2-fold covering knot has g4 <= k.

    Obstructed when the signature bound on the cover's slice genus exceeds k.
    """
    if cover.n_components != 1:
        raise ValueError("covering_knot_obstruction needs a covering knot")
    sig = signature(cover)
    g = slice_genus_lower_bound(cover)
    ev = {"signature": sig, "slice_genus_lower_bound": g, "k": k}
    if g > k:
        return CoverVerdict(Outcome.OBSTRUCTED, f"g4 >= {g} > {k}", ev)
    return CoverVerdict(Outcome.CONSISTENT, f"g4 >= {g} <= {k}", ev)


def sp_i_bound(cover: LinkDiagram) -> int:
    """Lower bound for sp_i(L): half the cover's linking bound, rounded up."""
    if cover.n_components < 2:
        return 0
    return (lemma_lower_bound(cover).bound + 1) // 2


def weak_slice_obstruction(cover: LinkDiagram, band_sums=()) -> CoverVerdict:
    """Show that a 2-component covering link bounds no annulus in the 4-ball.

    The cover must carry the lifted orientation.  Murasugi's bound for an
    annulus is |sigma| <= 1.  Each knot in ``band_sums`` is taken to be an
    oriented internal band sum of ``cover``; an annulus plus a band is a
    punctured torus, so such a knot would have g4 <= 1.
    """
    if cover.n_components != 2:
        raise ValueError("weak_slice_obstruction needs a 2-component link")
    sig = signature(cover)
    ev: dict = {"signature": sig}
    mu = murasugi_obstruction(sig, 0, 1, 2)
    if mu.obstructed:
        return CoverVerdict(Outcome.OBSTRUCTED, f"|sigma| = {abs(sig)} > 1", ev)
    for n, knot in enumerate(band_sums):
        if knot.n_components != 1:
            raise ValueError("a band sum of a 2-component link is a knot")
        g = slice_genus_lower_bound(knot)
        ev[f"band_sum_{n}_slice_genus_lower_bound"] = g
        if g > 1:
            return CoverVerdict(Outcome.OBSTRUCTED, f"band sum {n} has g4 >= {g} > 1", ev)
    return CoverVerdict(Outcome.UNKNOWN, "no obstruction found", ev)


@dataclass(frozen=True)
class CoverInput:
    """A covering link of a base link, as consumed by ``covering_lower_bound``.

    ``cover`` is branched over base component ``branch``.  ``oriented``
    says whether its orientation is the lifted one (needed for link
    signatures and band sums; a covering knot needs no orientation).
    Without it the smallest |sigma| over all orientations is used.
    ``band_sums`` are knots obtained from ``cover`` by oriented internal band
    sums.  ``genus_lower`` is an extra lower bound on the slice genus of a
    covering knot, e.g. from a cited fact.
    """

    branch: int
    cover: LinkDiagram
    oriented: bool = False
    band_sums: tuple[LinkDiagram, ...] = ()
    genus_lower: int = 0


@dataclass(frozen=True)
class Exclusion:
    counts: tuple[tuple[tuple[int, int], int], ...]
    alpha: int
    beta: int
    reason: str


@dataclass(frozen=True)
class CoverBound:
    bound: int
    excluded: tuple[Exclusion, ...]
    sp_i: int
    sigma: int
    capped: bool = False


def _flip_sets(m: int):
    """Component subsets to reverse, one per orientation up to global reversal."""
    for mask in range(1 << (m - 1)):
        yield tuple(i + 1 for i in range(m - 1) if mask >> i & 1)


def _distributions(lks: dict, s: int):
    """Ways to spread s changes over pairs with n >= |lk|, n = lk mod 2."""
    pairs = sorted(lks)

    def rec(k, left):
        if k == len(pairs):
            if left == 0:
                yield ()
            return
        n = abs(lks[pairs[k]])
        while n <= left:
            for rest in rec(k + 1, left - n):
                yield (n,) + rest
            n += 2

    for ns in rec(0, s):
        yield dict(zip(pairs, ns))


def covering_lower_bound(
    lk: LinkingMatrix,
    data: CoverInput,
    start: int,
    genera: tuple[int, ...] | None,
    span: int = 6,
) -> CoverBound:
    """Smallest splitting-sequence length not excluded by the covering link.

    Every candidate length s from ``start`` upward (same parity) is split
    into counts of changes per pair of base components.  A distribution is
    excluded when the covering link cannot bound the surface that such a
    sequence would produce:

    * no change touches the branch and s < ceil(sp_lower(cover) / 2);
    * Murasugi's inequality |sigma| <= b0 - chi fails;
    * a band-sum knot needs more slice genus than the surface allows.

    ``genera`` are upper bounds for the slice genera of the base components
    (0 for unknots).  Without them only the first test is used.  The search
    stops after ``span`` lengths; if all of them are excluded the bound is
    the next length, flagged ``capped``.
    """
    m = lk.size
    b = data.branch
    J = data.cover
    mJ = J.n_components
    sp_i = sp_i_bound(J)
    if mJ == 1 or data.oriented:
        sigma = signature(J)
    else:
        # the lifted orientation is one of these, so the smallest |sigma| is safe
        sigma = min(abs(signature(J.reverse(f))) for f in _flip_sets(mJ))
    knot_genus = 0
    if mJ == 1:
        knot_genus = max(slice_genus_lower_bound(J), data.genus_lower)
    band_genus = [slice_genus_lower_bound(k) for k in data.band_sums] if data.oriented else []
    if genera is not None:
        others = sum(g for k, g in enumerate(genera) if k != b)
    lks = {(i, j): lk[i, j] for i in range(m) for j in range(i + 1, m)}
    excluded: list[Exclusion] = []
    s = start
    while s <= start + span:
        for counts in _distributions(lks, s):
            alpha = sum(n for p, n in counts.items() if b in p)
            beta = s - alpha
            why = None
            if alpha == 0 and s < sp_i:
                why = f"sp_i >= {sp_i} > {s}"
            elif genera is not None:
                chi = 2 * (m - 1) - alpha - 4 * beta - 4 * others
                changed = [p for p, n in counts.items() if n]
                conn = star_connected(m, changed, b)
                if mJ == 1:
                    allowed = (2 - chi) // 2
                    if knot_genus > allowed:
                        why = f"covering knot g4 >= {knot_genus} > {allowed} (chi = {chi})"
                elif sigma is not None:
                    b0 = 1 if conn else mJ
                    if abs(sigma) > b0 - chi:
                        why = f"|sigma| = {abs(sigma)} > {b0 - chi} (chi = {chi}, b0 = {b0})"
                    elif conn:
                        allowed = (mJ - chi + 1) // 2
                        for n, g in enumerate(band_genus):
                            if g > allowed:
                                why = f"band sum {n}: g4 >= {g} > {allowed} (chi = {chi})"
                                break
            if why is None:
                return CoverBound(s, tuple(excluded), sp_i, sigma)
            excluded.append(Exclusion(tuple(sorted(counts.items())), alpha, beta, why))
        s += 2
    return CoverBound(s, tuple(excluded), sp_i, sigma, capped=True)
