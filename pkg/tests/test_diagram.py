from __future__ import annotations

import pytest
from conftest import HOPF, link

from splitbound.alexander import alexander_polynomial
from splitbound.diagram import (
    DiagramError,
    disjoint_union,
    isomorphic,
    parse_dt,
    parse_pd,
    realize_dt,
    render_pd,
    sublink,
)
from splitbound.laurent import normalize, parse_poly
from splitbound.linking import linking_matrix


def test_hopf_parses_with_positive_crossings():
    d = parse_pd(HOPF)
    assert d.n_components == 2
    assert d.n_crossings == 2
    assert [x.sign for x in d.crossings] == [1, 1]


def test_unknot_loop():
    d = parse_pd("PD[Loop[1]]")
    assert (d.n_components, d.n_crossings) == (1, 0)


@pytest.mark.parametrize(
    "text, msg",
    [
        ("PD[X[1,1,1,2]]", "arc multiplicity"),
        ("PD[X[1,2,3,4]", "malformed PD"),
        ("PD[X[1,2", "closing bracket"),
        ("PD[X[1,2,3]]", "four entries"),
        ("", "empty"),
    ],
)
def test_parse_errors(text, msg):
    with pytest.raises(DiagramError, match=msg):
        parse_pd(text)


def test_whitespace_insensitive():
    assert render_pd(parse_pd("PD[ X[4, 2,1,3],\n X[2,4,3,1] ]")) == render_pd(parse_pd(HOPF))


def test_parse_dt_table_row():
    code = parse_dt("(14,-6,-10,16,-4,-18),(-20,22,8,-24,-2,12)")
    assert code.n_crossings == 12
    assert len(code.components) == 2


@pytest.mark.parametrize("text", ["(3,5)", "(2,2)", "(2,6)"])
def test_parse_dt_rejects(text):
    with pytest.raises(DiagramError):
        parse_dt(text)


def test_realize_trefoil():
    d = realize_dt("(4,6,2)")
    assert d.n_crossings == 3
    assert normalize(alexander_polynomial(d)) == normalize(parse_poly("1-t+t^2", ("t",)))


def test_realize_empty_is_unknot():
    d = realize_dt("")
    assert (d.n_components, d.n_crossings) == (1, 0)


def test_round_trip_isomorphic():
    d = link("L9a54")
    assert isomorphic(parse_pd(render_pd(d)), d)


def test_sublink_l9a54():
    d = link("L9a54")
    M = linking_matrix(d)
    assert M.is_zero()
    # exactly one pair is an unlink, the other two are Whitehead links
    zero_pairs = [p for p in [(0, 1), (0, 2), (1, 2)] if alexander_polynomial(sublink(d, p)).is_zero()]
    assert len(zero_pairs) == 1
    wh = normalize(parse_poly("st-s-t+1"))
    for p in {(0, 1), (0, 2), (1, 2)} - set(zero_pairs):
        assert normalize(alexander_polynomial(sublink(d, p))) == wh


def test_sublink_all_is_identity():
    d = link("L9a54")
    assert isomorphic(sublink(d, [0, 1, 2]).relabeled(), d.relabeled())


def test_sublink_nested():
    d = link("L9a54")
    a = sublink(sublink(d, [0, 2]), [1])
    b = sublink(d, [2])
    assert a.n_crossings == b.n_crossings


def test_sublink_errors():
    d = parse_pd(HOPF)
    with pytest.raises(DiagramError):
        sublink(d, [])
    with pytest.raises(DiagramError):
        sublink(d, [5])


def test_disjoint_union_components():
    d = disjoint_union(parse_pd(HOPF), parse_pd(HOPF))
    assert d.n_components == 4


def test_interlinking_sign_sum_even():
    d = link("L9a40")
    comp = d.edge_component
    total = sum(x.sign for x in d.crossings if comp[x.edges[0]] != comp[x.edges[1]])
    assert total % 2 == 0
