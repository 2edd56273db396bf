from __future__ import annotations

import json
from dataclasses import replace

import pytest
from conftest import HOPF, WHITEHEAD, catalog_by_name

from splitbound.bounds import (
    Annotations,
    BoundCertificate,
    CatalogEntry,
    CatalogError,
    Cited,
    Method,
    aggregate,
    bundled_catalog,
    load_catalog,
    report,
    verify_certificate,
)

HEADER = "name,pd,dt,sp,method,labels\n"


def write(tmp_path, rows, notes=None):
    p = tmp_path / "cat.csv"
    p.write_text(HEADER + "".join(rows))
    if notes is not None:
        p.with_suffix(".json").write_text(json.dumps(notes))
    return p


def test_empty_file(tmp_path):
    p = tmp_path / "empty.csv"
    p.write_text("")
    assert load_catalog(p) == []


def test_small_catalog(tmp_path):
    p = write(tmp_path, [f'hopf,"{HOPF}",,1,1,\n', f'wh,"{WHITEHEAD}",,2,2,\n'])
    entries = load_catalog(p)
    assert [e.name for e in entries] == ["hopf", "wh"]
    assert entries[1].line == 3


def test_duplicate(tmp_path):
    p = write(tmp_path, [f'hopf,"{HOPF}",,1,1,\n', f'hopf,"{HOPF}",,1,1,\n'])
    with pytest.raises(CatalogError, match=":3: duplicate"):
        load_catalog(p)


def test_wrong_parity(tmp_path):
    p = write(tmp_path, [f'hopf,"{HOPF}",,2,1,\n'])
    with pytest.raises(CatalogError, match="wrong parity"):
        load_catalog(p)


def test_bad_pd(tmp_path):
    p = write(tmp_path, ['bad,"PD[X[1,2,3]]",,1,1,\n'])
    with pytest.raises(CatalogError, match=":2: bad: bad PD"):
        load_catalog(p)


def test_bad_method(tmp_path):
    p = write(tmp_path, [f'hopf,"{HOPF}",,1,7,\n'])
    with pytest.raises(CatalogError, match="1..5"):
        load_catalog(p)


def test_orphan_annotations(tmp_path):
    p = write(tmp_path, [f'hopf,"{HOPF}",,1,1,\n'], {"other": {"unknotted": [True, True]}})
    with pytest.raises(CatalogError, match="missing entries"):
        load_catalog(p)


def test_bad_cover_annotation(tmp_path):
    p = write(tmp_path, [f'hopf,"{HOPF}",,1,1,\n'], {"hopf": {"cover": {"branch": 0}}})
    with pytest.raises(CatalogError, match="pd or an axis"):
        load_catalog(p)


def test_branch_must_be_unknotted():
    e = catalog_by_name()["L8a16"]
    bad = replace(e, annotations=replace(e.annotations, unknotted=(False, True, True)))
    with pytest.raises(CatalogError, match="unknotted"):
        aggregate(bad)


def test_missing_band_edge():
    e = catalog_by_name()["L9a40"]
    cov = replace(e.annotations.cover, band_sums=((900, 901, 0),))
    with pytest.raises(CatalogError, match="missing edges"):
        aggregate(replace(e, annotations=replace(e.annotations, cover=cov)))


def test_bundled_size():
    entries = bundled_catalog()
    assert len(entries) >= 130
    assert len({e.name for e in entries}) == len(entries)


def test_aggregate_hopf():
    c = aggregate(CatalogEntry("hopf", HOPF, sp=1))
    assert (c.bound, c.parity, c.method) == (1, 1, Method.LinkingParity)
    assert c.sharp


def test_aggregate_l9a29():
    c = aggregate(catalog_by_name()["L9a29"])
    assert c.bound == 3 and c.method is Method.AlexanderDivisibility
    assert c.witnesses["divisibility"] == "ObstructsSpOne"
    assert verify_certificate(catalog_by_name()["L9a29"], c)


def test_cited_listed_but_unused_when_computed_ties():
    c = aggregate(catalog_by_name()["L7a6"])
    assert c.bound == 3 and not c.cited_assumption
    assert c.cited and not any(x["used"] for x in c.cited)


def test_cited_used_when_stronger():
    c = aggregate(catalog_by_name()["L8a9"])
    assert c.bound == 3 and c.cited_assumption
    assert any(x["used"] for x in c.cited)


def test_cited_bound_rounded_to_parity():
    e = CatalogEntry("hopf", HOPF, annotations=Annotations(cited=(Cited("X", "claim", bound=2, method=3),)))
    c = aggregate(e)
    assert c.bound == 3 and c.cited_assumption


def test_json_round_trip():
    c = aggregate(catalog_by_name()["L9a40"])
    again = BoundCertificate.from_json(json.loads(json.dumps(c.to_json())))
    assert again == c


def test_knot_entry():
    c = aggregate(CatalogEntry("unknot", "PD[Loop[1]]"))
    assert c.bound == 0


def test_report_flags_unsound(tmp_path):
    # a recorded sp below a computed bound must be reported
    p = write(tmp_path, [f'wh,"{WHITEHEAD}",,0,1,\n'])
    rep = report(load_catalog(p), check=True)
    assert rep.exit_code == 2 and rep.problems


def test_report_json(tmp_path):
    p = write(tmp_path, [f'hopf,"{HOPF}",,1,1,\n'])
    rep = report(load_catalog(p), as_json=True)
    assert rep.exit_code == 0
    assert json.loads(rep.text)[0]["bound"] == 1
