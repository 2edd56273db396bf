"""Command line interface: ``splitbound invariants|bound|cover|table``.

Exit codes: 0 ok, 1 parse or schema error, 2 soundness violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from itertools import combinations

from .alexander import multivariable_alexander, splitting_obstruction
from .bounds import (
    CatalogEntry,
    CatalogError,
    aggregate,
    bundled_catalog,
    load_catalog,
    report,
)
from .covering import (
    AxisLink,
    braid_closure,
    double_cover_along_axis,
    parse_braid,
    sp_i_bound,
    covering_knot_obstruction,
    weak_slice_obstruction,
)
from .diagram import DiagramError, LinkDiagram, parse_pd, realize_dt, render_pd
from .laurent import render
from .linking import linking_matrix
from .obstructive import lemma_lower_bound
from .seifert import signature


def parse_code(text: str) -> LinkDiagram:
    """A diagram from PD (``PD[...]``), braid (``BR[...]``) or DT text."""
    t = text.strip()
    if t.startswith("PD"):
        return parse_pd(t)
    if t.startswith("BR"):
        return braid_closure(parse_braid(t))
    return realize_dt(t)


def invariants(d: LinkDiagram) -> dict:
    M = linking_matrix(d)
    out = {
        "crossings": d.n_crossings,
        "components": d.n_components,
        "linking_matrix": [list(r) for r in M.rows],
        "signature": signature(d),
    }
    res = multivariable_alexander(d)
    out["alexander"] = res.render()
    if d.n_components >= 2:
        lb = lemma_lower_bound(d)
        out["a"] = lb.total_linking
        out["c"] = lb.c
        out["obstructive_sublinks"] = [list(S) for S in lb.witness.members]
        out["lemma_bound"] = lb.bound
        out["component_alexander"] = [render(p, ("t",)) for p in res.component_polys]
    if d.n_components == 2:
        out["divisibility"] = splitting_obstruction(res).verdict.value
    return out


def _print(obj: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, indent=1))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def _flip_sets(spec: str, m: int):
    if spec == "all":
        rest = range(1, m)
        return [c for r in range(m) for c in combinations(rest, r)]
    try:
        return [tuple(int(x) for x in spec.split(",") if x.strip())]
    except ValueError:
        raise DiagramError(f"bad --orient value {spec!r}") from None


def cmd_invariants(args) -> int:
    d = parse_code(args.code)
    _print(invariants(d), args.json)
    return 0


def _find_entry(key: str, catalog) -> CatalogEntry:
    entries = load_catalog(catalog) if catalog else bundled_catalog()
    for e in entries:
        if e.name == key:
            return e
    d = parse_code(key)
    return CatalogEntry(name="input", pd=render_pd(d))


def cmd_bound(args) -> int:
    entry = _find_entry(args.link, args.catalog)
    m = entry.diagram().n_components
    best = None
    for flips in _flip_sets(args.orient, m) if args.orient else [()]:
        if any(f not in range(m) for f in flips):
            raise DiagramError(f"no component {flips} to reverse")
        ann = entry.annotations
        cover = ann.cover
        if flips and cover is not None and cover.oriented:
            # the recorded lift belongs to the catalog orientation only
            cover = replace(cover, oriented=False, band_sums=())
        orient = tuple(sorted(set(ann.orient) ^ set(flips)))
        e = replace(entry, annotations=replace(ann, cover=cover, orient=orient))
        cert = aggregate(e)
        if best is None or cert.bound > best.bound:
            best = cert
            best.witnesses["orientation_flips"] = list(flips)
    out = best.to_json()
    if args.json:
        print(json.dumps(out, indent=1))
    else:
        print(f"{best.name}: sp >= {best.bound}  method ({int(best.method)}) {best.method.name}")
        if best.cited_assumption:
            print("  depends on a cited assumption")
        for c in best.cited:
            print(f"  cited {c['key']}: {c['claim']} (used: {c['used']})")
        for k, v in best.witnesses.items():
            print(f"  {k}: {v}")
    if best.upper is not None and best.bound > best.upper:
        return 2
    return 0


def cmd_cover(args) -> int:
    ax = AxisLink(parse_braid(args.axis))
    J = double_cover_along_axis(ax)
    out = {
        "axis_linking": list(ax.axis_linking()),
        "cover_pd": render_pd(J),
        "components": J.n_components,
        "linking_matrix": [list(r) for r in linking_matrix(J).rows],
        "signature": signature(J),
        "sp_i_lower": sp_i_bound(J),
    }
    if J.n_components == 1 and args.k is not None:
        v = covering_knot_obstruction(J, args.k)
        out["covering_knot"] = f"{v.outcome.value}: {v.reason}"
    if J.n_components == 2:
        v = weak_slice_obstruction(J)
        out["weak_slice"] = f"{v.outcome.value}: {v.reason}"
    _print(out, args.json)
    return 0


def cmd_table(args) -> int:
    entries = load_catalog(args.catalog) if args.catalog else bundled_catalog()
    rep = report(entries, check=args.check, as_json=args.json, jobs=args.jobs)
    print(rep.text)
    if rep.problems and args.json:
        print("\n".join(rep.problems), file=sys.stderr)
    return rep.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="splitbound", description="Lower bounds for splitting numbers of links.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="linking, Alexander and signature data of a diagram")
    s.add_argument("code", help="PD[...], BR[k; ...] or a DT code")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("bound", help="certified lower bound for a catalog link or a code")
    s.add_argument("link", help="catalog name (e.g. L9a29) or a PD/braid/DT code")
    s.add_argument("--orient", help="components to reverse, e.g. 0,2, or 'all' to take the best")
    s.add_argument("--catalog", help="catalog CSV (default: bundled)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("cover", help="2-fold covering link branched over a braid axis")
    s.add_argument("--axis", required=True, help="braid word, e.g. 'BR[3; 1,2,1,1,2]'")
    s.add_argument("--k", type=int, help="test slice genus <= k for a covering knot")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("table", help="certificates for a whole catalog")
    s.add_argument("--catalog", help="catalog CSV (default: bundled)")
    s.add_argument("--check", action="store_true", help="exit 2 on any soundness violation")
    s.add_argument("--json", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CatalogError, DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
