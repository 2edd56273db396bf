"""Walk through the divisibility obstruction for L9a29.

    python demos/alexander_obstruction.py
"""

from __future__ import annotations

from splitbound.alexander import multivariable_alexander, splitting_obstruction
from splitbound.bounds import aggregate, bundled_catalog
from splitbound.laurent import render
from splitbound.linking import linking_matrix


def main() -> None:
    entry = next(e for e in bundled_catalog() if e.name == "L9a29")
    d = entry.diagram()
    print("linking number:", linking_matrix(d)[0, 1])
    res = multivariable_alexander(d)
    print("Delta(s,t) =", res.render())
    ob = splitting_obstruction(res)
    print("Delta(s,1) Delta(1,t) =", render(ob.divisor, ("s", "t")))
    print("verdict:", ob.verdict.value)
    cert = aggregate(entry)
    print(f"certified: sp >= {cert.bound} (recorded {entry.sp})")


if __name__ == "__main__":
    main()
