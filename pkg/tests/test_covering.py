from __future__ import annotations

import pytest
from conftest import catalog_by_name, knot

from splitbound.alexander import alexander_polynomial
from splitbound.bounds import _cover_input, _genera
from splitbound.covering import (
    AxisLink,
    BraidWord,
    CoverInput,
    Outcome,
    SplitBudget,
    band_sum,
    braid_closure,
    cover_component_count,
    covering_lower_bound,
    double_cover_along_axis,
    euler_char_budget,
    parse_braid,
    sp_i_bound,
    star_connected,
    covering_knot_obstruction,
    weak_slice_obstruction,
)
from splitbound.diagram import DiagramError
from splitbound.laurent import parse_poly, unit_equal
from splitbound.linking import linking_matrix, parity_bound
from splitbound.seifert import signature


def test_parse_braid_forms():
    assert parse_braid("BR[3; 1,-2,1]") == parse_braid("BR[3, {1, -2, 1}]")
    assert str(parse_braid("BR[2; 1,1,1]")).startswith("BR[2")


@pytest.mark.parametrize("text", ["BR[2; 2]", "BR[2; 0]", "BR[x]", "BR[1; 1]"])
def test_parse_braid_rejects(text):
    with pytest.raises((DiagramError, ValueError)):
        parse_braid(text)


def test_trefoil_closure():
    d = braid_closure(parse_braid("BR[2; 1,1,1]"))
    assert d.n_components == 1
    assert unit_equal(alexander_polynomial(d), parse_poly("1-t+t^2", ("t",)))
    assert abs(signature(d)) == 2


def test_identity_braid_unlink():
    d = braid_closure(BraidWord(3, ()))
    assert d.n_components == 3 and d.n_crossings == 0


def test_figure_eight_closure():
    d = braid_closure(parse_braid("BR[3; 1,-2,1,-2]"))
    assert unit_equal(alexander_polynomial(d), alexander_polynomial(knot("4_1")))


def test_component_count():
    assert cover_component_count(parse_braid("BR[2; 1]")) == 2
    assert cover_component_count(parse_braid("BR[3; 1,2]")) == 1
    assert cover_component_count(parse_braid("BR[4; 1,2,3]")) == 2


def test_cover_of_axis_link():
    ax = AxisLink(parse_braid("BR[3; 1,2,1,1,2]"))
    d, i = ax.with_axis()
    assert d.n_components == 3
    assert sorted(linking_matrix(d).rows[i]) == sorted(ax.axis_linking() + (0,))
    J = double_cover_along_axis(ax)
    assert J.n_components == 3 and signature(J) == -7


def test_torus_link_not_weakly_slice():
    J = braid_closure(parse_braid("BR[2; 1,1,1,1]"))
    v = weak_slice_obstruction(J)
    assert v.outcome is Outcome.OBSTRUCTED and v.obstructed


def test_hopf_weak_slice_unknown(hopf):
    assert weak_slice_obstruction(hopf).outcome is Outcome.UNKNOWN


def test_band_sum_to_7_5():
    e = catalog_by_name()["L9a40"]
    cin = _cover_input(e)
    assert len(cin.band_sums) == 1
    k = cin.band_sums[0]
    assert k.n_components == 1 and abs(signature(k)) == 4
    v = weak_slice_obstruction(cin.cover, cin.band_sums)
    assert v.obstructed


def test_band_sum_missing_edge(hopf):
    with pytest.raises((DiagramError, KeyError, ValueError)):
        band_sum(hopf, 1, 99)


def test_covering_knot_obstruction():
    t = braid_closure(parse_braid("BR[2; 1,1,1,1,1]"))
    assert covering_knot_obstruction(t, 1).obstructed
    assert not covering_knot_obstruction(t, 2).obstructed
    with pytest.raises(ValueError):
        covering_knot_obstruction(braid_closure(parse_braid("BR[2; 1,1]")), 1)


def test_euler_budget():
    assert euler_char_budget(2, SplitBudget(1, 0)).chi == 1
    assert euler_char_budget(3, SplitBudget(0, 1, (1,))).chi == -4
    eb = euler_char_budget(4, SplitBudget(2, 1), [(1, 0), (1, 2), (1, 3)])
    assert eb.connected is True
    with pytest.raises(ValueError):
        SplitBudget(-1, 0)
    with pytest.raises(ValueError):
        euler_char_budget(1, SplitBudget(0, 0))


def test_star_connected_ignores_branch_star():
    # the branch component touching everything does not force connectedness
    assert not star_connected(3, [(0, 1), (0, 2)], branch=0)
    assert star_connected(3, [(0, 1), (0, 2)], branch=1)


def test_sp_i_bound_l9a46():
    J = _cover_input(catalog_by_name()["L9a46"]).cover
    assert sp_i_bound(J) == 3


@pytest.mark.parametrize(
    "name, expected", [("L8a16", 3), ("L9a46", 3), ("L12a1622", 5), ("L9a40", 4)]
)
def test_covering_lower_bound(name, expected):
    e = catalog_by_name()[name]
    d = e.diagram()
    M = linking_matrix(d)
    cb = covering_lower_bound(M, _cover_input(e), parity_bound(M), _genera(e, d.n_components))
    assert cb.bound == expected and not cb.capped
    assert cb.excluded


def test_covering_bound_without_genera():
    # without unknottedness only the branch-free test applies
    e = catalog_by_name()["L12a1622"]
    M = linking_matrix(e.diagram())
    cb = covering_lower_bound(M, _cover_input(e), 1, None)
    assert cb.bound < 5


def test_cited_genus_lifts_bound():
    e = catalog_by_name()["L9a30"]
    M = linking_matrix(e.diagram())
    base = _cover_input(e)
    g = _genera(e, 2)
    plain = covering_lower_bound(M, base, 1, g)
    lifted = covering_lower_bound(
        M, CoverInput(base.branch, base.cover, base.oriented, (), 3), 1, g
    )
    assert lifted.bound >= plain.bound
    assert lifted.bound > 3
