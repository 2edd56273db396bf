"""Offline helper: 2-fold covering links branched over one component.

Run with a Python that has SnapPy installed:

    python tools/covers.py L8a16 0 [L9a46 0 ...] > covers.json

The branch index refers to SnapPy's cusp order for the named link.  The
base manifold is filled with slope (2, 0) on the branch cusp, the cover
is taken through the Z/2 quotient sending that meridian to 1 and every
other meridian to 0, and the lifted (1, 0) filling is turned back into a
link diagram.  Output is a JSON list of {name, branch, pd, base_pd, base_linking,
unknotted}.
"""

from __future__ import annotations

import itertools
import json
import sys

import snappy


def _parity(word, assign, gens):
    return sum(assign[gens.index(ch.lower())] for ch in word) % 2


def branched_cover_link(name: str, branch: int):
    M = snappy.Manifold(name)
    M.dehn_fill((2, 0), branch)
    G = M.fundamental_group()
    gens = G.generators()
    mer = [pc[0] for pc in G.peripheral_curves()]
    sols = [
        a
        for a in itertools.product((0, 1), repeat=len(gens))
        if all(_parity(r, a, gens) == 0 for r in G.relators())
        and all(_parity(w, a, gens) == (j == branch) for j, w in enumerate(mer))
    ]
    if len(sols) != 1:
        raise RuntimeError(f"{name}: expected one Z/2 map, found {len(sols)}")
    C = M.cover([[1, 0] if a else [0, 1] for a in sols[0]])
    L = C.filled_triangulation().exterior_to_link()
    L.simplify("global")
    return L


def unknotted_components(name: str) -> list[bool]:
    """Flag components whose exterior group simplifies to Z (so: unknots)."""
    L = snappy.Manifold(name).link()
    out = []
    for k in range(len(L.link_components)):
        G = L.sublink([k]).exterior().fundamental_group()
        out.append(G.num_generators() == 1 and G.num_relators() == 0)
    return out


def main(argv):
    out = []
    for name, b in zip(argv[::2], argv[1::2]):
        L = branched_cover_link(name, int(b))
        base = snappy.Manifold(name).link()
        out.append(
            {
                "name": name,
                "branch": int(b),
                "base_pd": base.PD_code(),
                "base_linking": base.linking_matrix(),
                "pd": L.PD_code(),
                "unknotted": unknotted_components(name),
            }
        )
    json.dump(out, sys.stdout)


if __name__ == "__main__":
    main(sys.argv[1:])
