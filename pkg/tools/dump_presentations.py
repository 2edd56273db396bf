"""Dump fundamental-group presentations and meridians from SnapPy (offline oracle input).

Run with an interpreter that has snappy installed:
    python tools/dump_presentations.py NAME ... > out.json
Names may also be ``DT:[...]`` strings.
"""
import json
import sys

import snappy


def dump(name):
    M = snappy.Manifold(name)
    G = M.fundamental_group()
    return {
        "name": name,
        "generators": G.generators(),
        "relators": G.relators(),
        "meridians": [m for m, _ in G.peripheral_curves()],
    }


if __name__ == "__main__":
    json.dump([dump(n) for n in sys.argv[1:]], sys.stdout, indent=1)
