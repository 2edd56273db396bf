"""Regenerate the bundled catalogs in src/splitbound/data/.

    python tools/build_catalog.py TABLE_TEXT

TABLE_TEXT is any text file containing the splitting-number rows in the
form ``$L2a1$ & 1 & (\\ref{aaitem:non-trivial-link})``.  Diagrams come
from the frozen fixtures in tests/fixtures/: LinkInfo PD codes, DT codes of
the 12-crossing links, and SnapPy-computed covering links.  Whenever a
link has a covering link, the SnapPy diagram of the base link is used so
that component indices agree with the cover's branch index; its Alexander
polynomial is checked against the LinkInfo one first.
"""

from __future__ import annotations

import csv
import json
import re
import sys
from itertools import permutations, product
from pathlib import Path

from splitbound.alexander import alexander_polynomial
from splitbound.diagram import diagram_from_pd, realize_dt, render_pd
from splitbound.laurent import normalize
from splitbound.linking import linking_matrix

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "tests" / "fixtures"
OUT = ROOT / "src" / "splitbound" / "data"

METHOD_LABELS = {
    "non-trivial-link": 1,
    "linking-no-whitehead": 2,
    "two-comp-lk-one-unknotted": 3,
    "alexander-polynomial": 4,
    "two-comp-lk-zero-unknotted": 5,
}
ROW_RE = re.compile(r"^\$(L\d+[an]\d+)\$\s*&\s*(\d+)\s*&\s*\(\\ref\{aaitem:([a-z-]+)\}\)")

# LinkInfo records come in orientation variants; this one needs {1}
VARIANT = {"L9a29": "{1}"}

# lifted orientations of covering links, as component reversals of the
# SnapPy cover diagram (determined offline, see the decisions ledger)
LIFTED = {"L12a1622": [0, 3], "L9a40": [0]}
BAND_SUMS = {"L9a40": [{"edges": [0, 9], "twists": 1}]}

KOHN = "Kohn93"
CITED_BOUNDS = {
    n: [{"key": KOHN, "claim": "unlinking number is not one", "bound": 3, "method": 3}]
    for n in ("L7a6", "L8a8", "L8a9", "L9a20", "L9a22", "L9a26")
}
CITED_BOUNDS["L9a36"] = [{"key": KOHN, "claim": "unlinking number is not two", "bound": 4, "method": 5}]
CITED_GENUS = {
    "L9a30": {"key": "CassonGordon", "claim": "the covering twist knot is not slice", "genus_lower": 1},
    "L12n1321": {"key": "Rasmussen-s", "claim": "s-invariant of the covering knot is 4", "genus_lower": 2},
    "L12n1320": {"key": "twisted-Alexander", "claim": "twisted polynomial (p=3, q=7) does not factor", "genus_lower": 1},
    "L12n1326": {"key": "twisted-Alexander", "claim": "twisted polynomial (p=3, q=7) does not factor", "genus_lower": 1},
}
# 12-crossing row whose printed polynomial matches only with the first component reversed
ORIENT = {"L12n1404": [0]}


def same_up_to_symmetry(p, q) -> bool:
    """Equal up to units after permuting and inverting variables."""
    n = p.nvars
    target = normalize(q)
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            images = [[signs[i] if j == perm[i] else 0 for j in range(n)] for i in range(n)]
            if normalize(p.substitute(images, n)) == target:
                return True
    return False


def table_rows(path: Path):
    rows = []
    for line in path.read_text().splitlines():
        m = ROW_RE.match(line.strip())
        if m:
            rows.append((m.group(1), int(m.group(2)), METHOD_LABELS[m.group(3)]))
    return rows


def knotinfo_pd(links, name):
    for key in (name + VARIANT.get(name, "{0}"), name + "{0,0}", name + "{0,0,0}", name):
        rec = links.get(key)
        if rec is not None:
            return rec
    raise SystemExit(f"no LinkInfo record for {name}")


def cover_annotation(rec):
    name = rec["name"]
    ann = {
        "cover": {
            "pd": render_pd(diagram_from_pd(rec["pd"])),
            "branch": rec["branch"],
            "flips": LIFTED.get(name, []),
            "oriented": name in LIFTED,
            "band_sums": BAND_SUMS.get(name, []),
            "source": "SnapPy branched cover",
        },
        "unknotted": rec["unknotted"],
    }
    if name in CITED_GENUS:
        ann["cover"]["cited"] = [CITED_GENUS[name]]
    return ann


def checked_base(rec, ki_rec=None, dt=None):
    d = diagram_from_pd(rec["base_pd"])
    if [list(r) for r in linking_matrix(d).rows] != rec["base_linking"]:
        raise SystemExit(f"{rec['name']}: component order differs from the cover's")
    ref = diagram_from_pd(ki_rec["pd"]) if ki_rec else realize_dt(dt)
    if not same_up_to_symmetry(alexander_polynomial(d), alexander_polynomial(ref)):
        raise SystemExit(f"{rec['name']}: SnapPy diagram disagrees with the reference")
    return d


def write_csv(path: Path, rows):
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, quoting=csv.QUOTE_MINIMAL)
        w.writerow(["name", "pd", "dt", "sp", "method", "labels"])
        w.writerows(rows)


def main(argv):
    if len(argv) != 1:
        raise SystemExit(__doc__)
    ki = json.loads((FIX / "knotinfo.json").read_text())
    links = {r["name"]: r for r in ki["links"]}
    covers = {r["name"]: r for r in json.loads((FIX / "covers.json").read_text())}
    OUT.mkdir(exist_ok=True)

    rows, ann = [], {}
    for name, sp, method in table_rows(Path(argv[0])):
        rec = knotinfo_pd(links, name)
        if name in covers:
            d = checked_base(covers[name], ki_rec=rec)
            ann[name] = cover_annotation(covers[name])
        else:
            d = diagram_from_pd(rec["pd"])
        if name in CITED_BOUNDS:
            ann.setdefault(name, {})["cited"] = CITED_BOUNDS[name]
        labels = ";".join(f"L{i + 1}" for i in range(d.n_components))
        rows.append([name, render_pd(d), "", sp, method, labels])
    write_csv(OUT / "links_le9.csv", rows)
    (OUT / "links_le9.json").write_text(json.dumps(ann, indent=1, sort_keys=True) + "\n")

    rows, ann = [], {}
    for t in json.loads((FIX / "twelve_crossing.json").read_text()):
        d = realize_dt(t["dt"])
        rows.append([t["name"], render_pd(d), t["dt"], t["sp"], 4, "L1;L2"])
        if t["name"] in ORIENT:
            ann[t["name"]] = {"orient": ORIENT[t["name"]]}
    for t in json.loads((FIX / "covering_knots.json").read_text()):
        d = checked_base(covers[t["name"]], dt=t["dt"])
        rows.append([t["name"], render_pd(d), t["dt"], t["sp"], "", "L1;L2"])
        ann[t["name"]] = cover_annotation(covers[t["name"]])
    rec = covers["L12a1622"]
    d = diagram_from_pd(rec["base_pd"])
    rows.append(["L12a1622", render_pd(d), "", 5, "", "L1;L2;L3"])
    ann["L12a1622"] = cover_annotation(rec)
    write_csv(OUT / "links_extra.csv", rows)
    (OUT / "links_extra.json").write_text(json.dumps(ann, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main(sys.argv[1:])
