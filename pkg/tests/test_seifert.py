from __future__ import annotations

import pytest
from conftest import catalog_by_name, knot

from splitbound.alexander import alexander_polynomial
from splitbound.bounds import _cover_input
from splitbound.diagram import disjoint_union, parse_pd
from splitbound.laurent import unit_equal
from splitbound.seifert import (
    inertia,
    inertia_by_charpoly,
    murasugi_obstruction,
    seifert_alexander,
    seifert_matrix,
    signature,
    slice_genus_lower_bound,
)

TREFOIL = "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]"
# connected sum of two copies of the trefoil above
GRANNY = "PD[X[1,5,2,4], X[3,1,4,12], X[5,3,6,2], X[7,11,8,10], X[9,7,10,6], X[11,9,12,8]]"


def test_trefoil_signature():
    d = parse_pd(TREFOIL)
    assert abs(signature(d)) == 2
    assert signature(d.mirror()) == -signature(d)


def test_seifert_matrix_gives_alexander():
    d = parse_pd(TREFOIL)
    data = seifert_matrix(d)
    assert data.rank == 2
    assert unit_equal(seifert_alexander(data), alexander_polynomial(d))


def test_granny():
    d = parse_pd(GRANNY)
    assert abs(signature(d)) == 4
    assert slice_genus_lower_bound(d) == 2


def test_7_5():
    assert abs(signature(knot("7_5"))) == 4


@pytest.mark.parametrize("name", ["4_1", "6_1", "8_20"])
def test_slice_or_amphichiral_zero(name):
    assert signature(knot(name)) == 0


def test_hopf_signature(hopf):
    assert abs(signature(hopf)) == 1


def test_split_union_adds(hopf):
    t = parse_pd(TREFOIL)
    assert signature(disjoint_union(t, hopf)) == signature(t) + signature(hopf)


def test_inertia_agree():
    S = [[2, 1, 0], [1, -2, 3], [0, 3, 0]]
    assert inertia(S) == inertia_by_charpoly(S)
    assert sum(inertia(S)) == 3
    assert inertia([[0, 0], [0, 0]]) == (0, 0, 2)


def test_l12a1622_cover_signature():
    J = _cover_input(catalog_by_name()["L12a1622"]).cover
    assert J.n_components == 4
    assert abs(signature(J)) == 7


def test_murasugi_three_punctured_disc():
    J = _cover_input(catalog_by_name()["L12a1622"]).cover
    r = murasugi_obstruction(J, g=0, b0=1)
    assert r.allowance == 3 and r.obstructed and r.verdict == "Obstructed"


def test_murasugi_bare_signature():
    assert not murasugi_obstruction(2, g=1, b0=1, m=1).obstructed
    assert murasugi_obstruction(4, g=1, b0=1, m=1).obstructed
    with pytest.raises(ValueError):
        murasugi_obstruction(4, g=1, b0=1)


def test_slice_genus_bound_needs_knot(hopf):
    with pytest.raises(ValueError):
        slice_genus_lower_bound(hopf)
