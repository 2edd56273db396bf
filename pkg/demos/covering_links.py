"""Covering-link bounds: a braid axis example and L12a1622.

    python demos/covering_links.py
"""

from __future__ import annotations

from splitbound.bounds import aggregate, bundled_catalog
from splitbound.covering import AxisLink, double_cover_along_axis, parse_braid
from splitbound.linking import linking_matrix
from splitbound.seifert import signature


def main() -> None:
    ax = AxisLink(parse_braid("BR[3; 1,2,1,1,2]"))
    J = double_cover_along_axis(ax)
    print("axis linking:", ax.axis_linking())
    print("cover components:", J.n_components, "signature:", signature(J))
    print("cover linking matrix:", linking_matrix(J).rows)

    entry = next(e for e in bundled_catalog() if e.name == "L12a1622")
    cert = aggregate(entry)
    cov = cert.witnesses["cover"]
    print(f"\nL12a1622: sp >= {cert.bound} via method ({int(cert.method)})")
    print("cover sigma:", cov["sigma"])
    for line in cov["excluded"][:6]:
        print("  excluded", line)


if __name__ == "__main__":
    main()
