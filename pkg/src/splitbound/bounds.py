"""Combine every available obstruction into one certified lower bound.

Method tags follow the splitting-number table:

1. linking numbers (and parity) alone,
2. linking numbers plus obstructive sublinks,
3. a cited unlinking number, or a covering-link argument when the
   splitting number is odd,
4. Alexander polynomial divisibility,
5. a covering-link argument when the splitting number is even.

Catalogs are CSV files (``name,pd,dt,sp,method,labels``) with an optional
sidecar ``<stem>.json`` holding per-link annotations.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import IntEnum
from pathlib import Path

from .alexander import Verdict, multivariable_alexander, splitting_obstruction
from .covering import (
    AxisLink,
    CoverInput,
    band_sum,
    covering_lower_bound,
    double_cover_along_axis,
    parse_braid,
)
from .diagram import DiagramError, LinkDiagram, parse_pd
from .laurent import render
from .linking import linking_matrix, parity_bound, total_linking
from .obstructive import NonSplit, lemma_lower_bound, nonsplit_certificate

DATA = Path(__file__).resolve().parent / "data"
BUNDLED = ("links_le9.csv", "links_extra.csv")


class Method(IntEnum):
    LinkingParity = 1
    LinkingPlusObstructive = 2
    UnlinkingCitation = 3
    AlexanderDivisibility = 4
    CoveringEvenCase = 5


class CatalogError(ValueError):
    """Schema or consistency problem in a catalog file."""


@dataclass(frozen=True)
class Cited:
    """An external fact consumed as an assumption, never proved here.

    Either ``bound`` (with ``method``) bounds sp directly, or
    ``genus_lower`` bounds the slice genus of the covering knot.
    """

    key: str
    claim: str
    bound: int | None = None
    method: int | None = None
    genus_lower: int | None = None


@dataclass(frozen=True)
class CoverSpec:
    pd: str | None = None
    axis: str | None = None
    branch: int = 0
    flips: tuple[int, ...] = ()
    oriented: bool = False
    band_sums: tuple[tuple[int, int, int], ...] = ()
    cited: tuple[Cited, ...] = ()
    source: str = ""


@dataclass(frozen=True)
class Annotations:
    cover: CoverSpec | None = None
    unknotted: tuple[bool, ...] | None = None
    orient: tuple[int, ...] = ()
    cited: tuple[Cited, ...] = ()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    pd: str
    dt: str = ""
    sp: int | None = None
    method: int | None = None
    labels: tuple[str, ...] = ()
    annotations: Annotations = field(default_factory=Annotations)
    line: int = 0

    def diagram(self) -> LinkDiagram:
        """The PD diagram with any recorded orientation reversals applied."""
        d = parse_pd(self.pd)
        if self.annotations.orient:
            d = d.reverse(self.annotations.orient)
        return d


@dataclass
class BoundCertificate:
    name: str
    bound: int
    parity: int
    method: Method
    witnesses: dict
    cited: list[dict] = field(default_factory=list)
    cited_assumption: bool = False
    upper: int | None = None

    @property
    def sharp(self) -> bool:
        return self.upper is not None and self.upper == self.bound

    def to_json(self) -> dict:
        out = asdict(self)
        out["method"] = int(self.method)
        out["method_name"] = self.method.name
        out["sharp"] = self.sharp
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "BoundCertificate":
        keep = {k: v for k, v in obj.items() if k not in ("method_name", "sharp")}
        keep["method"] = Method(keep["method"])
        return cls(**keep)


# -- catalog -----------------------------------------------------------

def _cited(obj, where) -> Cited:
    try:
        return Cited(
            key=str(obj["key"]),
            claim=str(obj["claim"]),
            bound=obj.get("bound"),
            method=obj.get("method"),
            genus_lower=obj.get("genus_lower"),
        )
    except (KeyError, TypeError) as exc:
        raise CatalogError(f"{where}: malformed cited assumption ({exc})") from None


def _annotations(obj: dict, where: str) -> Annotations:
    if not isinstance(obj, dict):
        raise CatalogError(f"{where}: annotation must be an object")
    cover = None
    if "cover" in obj:
        c = obj["cover"]
        if not (c.get("pd") or c.get("axis")):
            raise CatalogError(f"{where}: cover annotation needs a pd or an axis braid")
        try:
            bands = tuple((int(b["edges"][0]), int(b["edges"][1]), int(b.get("twists", 0))) for b in c.get("band_sums", ()))
        except (KeyError, TypeError, IndexError):
            raise CatalogError(f"{where}: malformed band sum") from None
        cover = CoverSpec(
            pd=c.get("pd"),
            axis=c.get("axis"),
            branch=int(c.get("branch", 0)),
            flips=tuple(c.get("flips", ())),
            oriented=bool(c.get("oriented", False)),
            band_sums=bands,
            cited=tuple(_cited(x, where) for x in c.get("cited", ())),
            source=str(c.get("source", "")),
        )
    unk = obj.get("unknotted")
    return Annotations(
        cover=cover,
        unknotted=tuple(bool(x) for x in unk) if unk is not None else None,
        orient=tuple(obj.get("orient", ())),
        cited=tuple(_cited(x, where) for x in obj.get("cited", ())),
    )


def _int_or_none(text: str, what: str, where: str) -> int | None:
    text = text.strip()
    if not text:
        return None
    try:
        return int(text)
    except ValueError:
        raise CatalogError(f"{where}: {what} must be an integer, got {text!r}") from None


def load_catalog(path, annotations_path=None) -> list[CatalogEntry]:
    """Read and validate a catalog CSV and its sidecar annotations.

    Rejects duplicate names, unparsable PD codes, methods outside 1..5 and
    recorded splitting numbers of the wrong parity.  Errors name the line.
    """
    path = Path(path)
    side = Path(annotations_path) if annotations_path else path.with_suffix(".json")
    notes = {}
    if side.exists():
        try:
            notes = json.loads(side.read_text() or "{}")
        except json.JSONDecodeError as exc:
            raise CatalogError(f"{side}: invalid JSON ({exc})") from None
    text = path.read_text()
    if not text.strip():
        if notes:
            raise CatalogError(f"{side}: annotations for missing entries {sorted(notes)}")
        return []
    reader = csv.DictReader(text.splitlines())
    need = {"name", "pd"}
    if not need <= set(reader.fieldnames or ()):
        raise CatalogError(f"{path}:1: header must contain name and pd")
    out: list[CatalogEntry] = []
    seen: set[str] = set()
    for row in reader:
        where = f"{path}:{reader.line_num}"
        name = (row.get("name") or "").strip()
        if not name:
            raise CatalogError(f"{where}: missing name")
        if name in seen:
            raise CatalogError(f"{where}: duplicate entry {name}")
        seen.add(name)
        pd = (row.get("pd") or "").strip()
        try:
            d = parse_pd(pd)
        except DiagramError as exc:
            raise CatalogError(f"{where}: {name}: bad PD code ({exc})") from None
        sp = _int_or_none(row.get("sp") or "", "sp", where)
        method = _int_or_none(row.get("method") or "", "method", where)
        if method is not None and method not in range(1, 6):
            raise CatalogError(f"{where}: {name}: method must be 1..5")
        ann = _annotations(notes.get(name, {}), f"{side}: {name}")
        entry = CatalogEntry(
            name=name,
            pd=pd,
            dt=(row.get("dt") or "").strip(),
            sp=sp,
            method=method,
            labels=tuple(x for x in (row.get("labels") or "").split(";") if x),
            annotations=ann,
            line=reader.line_num,
        )
        if sp is not None and d.n_components >= 2:
            par = parity_bound(linking_matrix(entry.diagram()))
            if sp % 2 != par:
                raise CatalogError(f"{where}: {name}: recorded sp {sp} has the wrong parity (linking forces {par} mod 2)")
        out.append(entry)
    missing = sorted(set(notes) - seen)
    if missing:
        raise CatalogError(f"{side}: annotations for missing entries {missing}")
    return out


def bundled_catalog() -> list[CatalogEntry]:
    entries = []
    for name in BUNDLED:
        entries += load_catalog(DATA / name)
    return entries


# -- aggregation -------------------------------------------------------

def _round_to_parity(b: int, parity: int) -> int:
    return b + ((b - parity) % 2)


def _cover_input(entry: CatalogEntry, genus_lower: int = 0) -> CoverInput:
    spec = entry.annotations.cover
    if spec.axis:
        J = double_cover_along_axis(AxisLink(parse_braid(spec.axis)))
        oriented = True
    else:
        try:
            J = parse_pd(spec.pd)
        except DiagramError as exc:
            raise CatalogError(f"{entry.name}: bad cover PD ({exc})") from None
        if spec.flips:
            J = J.reverse(spec.flips)
        oriented = spec.oriented
    bands = []
    for e1, e2, tw in spec.band_sums:
        if e1 not in J.edge_labels or e2 not in J.edge_labels:
            raise CatalogError(f"{entry.name}: band sum refers to missing edges {e1}, {e2}")
        bands.append(band_sum(J, e1, e2, tw))
    return CoverInput(spec.branch, J, oriented, tuple(bands), genus_lower)


def _genera(entry: CatalogEntry, m: int) -> tuple[int, ...] | None:
    unk = entry.annotations.unknotted
    if unk is None or len(unk) != m or not all(unk):
        return None
    return (0,) * m


def aggregate(entry: CatalogEntry) -> BoundCertificate:
    """Best lower bound for ``entry`` with the method that achieves it.

    Computed bounds always win ties against cited ones; among computed
    bounds the smallest method tag wins.
    """
    d = entry.diagram()
    m = d.n_components
    M = linking_matrix(d)
    a = total_linking(M)
    par = parity_bound(M)
    wit: dict = {"linking_matrix": [list(r) for r in M.rows], "a": a, "parity": par}
    # (bound, method, cited?) candidates
    cands: list[tuple[int, Method, bool]] = []

    if m < 2:
        wit["note"] = "a knot is already split"
        return BoundCertificate(entry.name, 0, 0, Method.LinkingParity, wit, upper=entry.sp)

    cert = nonsplit_certificate(d)
    nonsplit = isinstance(cert, NonSplit)
    wit["nonsplit"] = cert.reason
    cands.append((_round_to_parity(max(a, 1 if nonsplit else 0), par), Method.LinkingParity, False))

    lemma = lemma_lower_bound(d)
    wit["c"] = lemma.c
    wit["obstructive_sublinks"] = [list(S) for S in lemma.witness.members]
    if lemma.c:
        cands.append((lemma.bound, Method.LinkingPlusObstructive, False))

    if m == 2 and abs(M[0, 1]) == 1:
        res = multivariable_alexander(d)
        ob = splitting_obstruction(res)
        wit["alexander"] = res.render()
        wit["divisibility"] = ob.verdict.value
        if ob.verdict is Verdict.OBSTRUCTS_SP_ONE:
            wit["divisor"] = render(ob.divisor, ("s", "t"))
            cands.append((3, Method.AlexanderDivisibility, False))

    cover_tag = Method.UnlinkingCitation if par else Method.CoveringEvenCase
    cited_out: list[dict] = []
    if entry.annotations.cover is not None:
        spec = entry.annotations.cover
        if spec.branch not in range(m):
            raise CatalogError(f"{entry.name}: branch component {spec.branch} does not exist")
        unk = entry.annotations.unknotted
        if not spec.axis and (unk is None or not unk[spec.branch]):
            raise CatalogError(f"{entry.name}: the branch component must be annotated as unknotted")
        start = max(c[0] for c in cands)
        genera = _genera(entry, m)
        cin = _cover_input(entry)
        cb = covering_lower_bound(M, cin, start, genera)
        wit["cover"] = {
            "source": spec.source or ("axis " + spec.axis if spec.axis else ""),
            "branch": spec.branch,
            "components": cin.cover.n_components,
            "sp_i_lower": cb.sp_i,
            "sigma": cb.sigma,
            "bound": cb.bound,
            "excluded": [f"{dict(x.counts)}: {x.reason}" for x in cb.excluded],
        }
        cands.append((cb.bound, cover_tag, False))
        for c in spec.cited:
            if c.genus_lower is None:
                continue
            cbc = covering_lower_bound(M, _cover_input(entry, c.genus_lower), start, genera)
            cited_out.append({**asdict(c), "bound": cbc.bound, "method": int(cover_tag)})
            cands.append((cbc.bound, cover_tag, True))
    for c in entry.annotations.cited:
        if c.bound is None:
            continue
        cited_out.append(asdict(c))
        cands.append((_round_to_parity(c.bound, par), Method(c.method or 3), True))

    best = max(b for b, _, _ in cands)
    computed = [c for c in cands if not c[2]]
    top_computed = max(b for b, _, _ in computed)
    if top_computed == best:
        method = min(t for b, t, ci in computed if b == best)
        uses_cited = False
    else:
        method = min(t for b, t, ci in cands if b == best and ci)
        uses_cited = True
    for c in cited_out:
        c["used"] = uses_cited and c["bound"] == best
    return BoundCertificate(
        entry.name, best, par, method, wit, cited_out, uses_cited, upper=entry.sp
    )


def verify_certificate(entry: CatalogEntry, cert: BoundCertificate) -> bool:
    """Recompute the winning method alone and check it reaches the bound."""
    d = entry.diagram()
    M = linking_matrix(d)
    if cert.parity != parity_bound(M) or cert.bound % 2 != cert.parity:
        return d.n_components < 2 and cert.bound == 0
    if cert.upper is not None and cert.bound > cert.upper:
        return False
    if cert.cited_assumption:
        return any(c["used"] for c in cert.cited)
    if cert.method is Method.LinkingParity:
        ns = isinstance(nonsplit_certificate(d), NonSplit)
        return _round_to_parity(max(total_linking(M), 1 if ns else 0), cert.parity) >= cert.bound
    if cert.method is Method.LinkingPlusObstructive:
        lemma = lemma_lower_bound(d)
        return lemma.witness.verify(d) and lemma.bound >= cert.bound
    if cert.method is Method.AlexanderDivisibility:
        ob = splitting_obstruction(multivariable_alexander(d))
        return ob.verdict is Verdict.OBSTRUCTS_SP_ONE and cert.bound <= 3
    return aggregate(entry).bound >= cert.bound and "cover" in cert.witnesses


def aggregate_all(entries, jobs: int = 1) -> list[BoundCertificate]:
    """Certificates for many entries, optionally in a process pool."""
    entries = list(entries)
    if jobs <= 1 or len(entries) < 2:
        return [aggregate(e) for e in entries]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(aggregate, entries, chunksize=4))


# -- reporting ---------------------------------------------------------

@dataclass
class Report:
    text: str
    exit_code: int
    problems: list[str]


def check_certificates(entries, certs) -> list[str]:
    """Soundness problems: bound above the recorded sp, or parity mismatch."""
    problems = []
    for e, c in zip(entries, certs):
        if e.sp is None:
            continue
        if c.bound > e.sp:
            problems.append(f"{e.name}: lower bound {c.bound} exceeds recorded sp {e.sp}")
        if e.sp % 2 != c.parity and e.diagram().n_components >= 2:
            problems.append(f"{e.name}: recorded sp {e.sp} has parity other than {c.parity}")
    return problems


def report(entries, check: bool = False, as_json: bool = False, jobs: int = 1) -> Report:
    """Render certificates as a table or JSON; with ``check`` flag soundness."""
    entries = list(entries)
    certs = aggregate_all(entries, jobs)
    problems = check_certificates(entries, certs) if check else []
    if as_json:
        text = json.dumps([c.to_json() for c in certs], indent=1)
    else:
        lines = [f"{'link':<10} {'bound':>5} {'sp':>4} {'method':<24} {'sharp':<5} note"]
        for e, c in zip(entries, certs):
            note = "cited-assumption" if c.cited_assumption else ""
            if "cover" in c.witnesses:
                note = (note + " cover").strip()
            sp = "" if e.sp is None else str(e.sp)
            lines.append(
                f"{e.name:<10} {c.bound:>5} {sp:>4} {f'({int(c.method)}) {c.method.name}':<24} {str(c.sharp):<5} {note}"
            )
        lines += problems
        text = "\n".join(lines)
    return Report(text, 2 if problems else 0, problems)
