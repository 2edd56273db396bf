from __future__ import annotations

import pytest
from conftest import BORROMEAN, catalog_by_name, link

from splitbound.bounds import _cover_input
from splitbound.diagram import disjoint_union, parse_pd
from splitbound.linking import linking_matrix, parity_bound, total_linking
from splitbound.obstructive import (
    NonSplit,
    Unknown,
    c_invariant,
    lemma_lower_bound,
    nonsplit_certificate,
    obstructive_sublinks,
)


def test_linking_hopf(hopf):
    M = linking_matrix(hopf)
    assert M[0, 1] == M[1, 0] == 1
    assert total_linking(M) == 1 and parity_bound(M) == 1


def test_linking_reversal_flips_sign(hopf):
    assert linking_matrix(hopf.reverse([0]))[0, 1] == -1


def test_linking_three_components():
    M = linking_matrix(link("L9a54"))
    assert M.size == 3 and M.is_zero()
    assert parity_bound(M) == 0


def test_nonsplit(whitehead, borromean):
    assert isinstance(nonsplit_certificate(whitehead), NonSplit)
    assert isinstance(nonsplit_certificate(borromean), NonSplit)


def test_unlink_unknown():
    unlink = parse_pd("PD[Loop[1], Loop[2]]")
    assert isinstance(nonsplit_certificate(unlink), Unknown)


def test_nonsplit_rejects_knot():
    with pytest.raises(ValueError):
        nonsplit_certificate(parse_pd("PD[Loop[1]]"))


def test_c_l9a54():
    c, coll = c_invariant(link("L9a54"))
    assert c == 2
    assert coll.verify(link("L9a54"))


def test_c_cover_of_l9a46():
    J = _cover_input(catalog_by_name()["L9a46"]).cover
    c, coll = c_invariant(J)
    assert c == 2 and coll.verify(J)


def test_split_borromean_pair():
    d = disjoint_union(parse_pd(BORROMEAN), parse_pd(BORROMEAN))
    lb = lemma_lower_bound(d)
    assert lb.c == 2 and lb.total_linking == 0 and lb.bound == 4


def test_borromean_single_triple(borromean):
    subs = obstructive_sublinks(borromean)
    assert [S for S, _ in subs] == [(0, 1, 2)]
    assert lemma_lower_bound(borromean).bound == 2


def test_whitehead_bound(whitehead):
    lb = lemma_lower_bound(whitehead)
    assert (lb.total_linking, lb.c, lb.bound) == (0, 1, 2)


def test_lemma_parity(hopf):
    lb = lemma_lower_bound(hopf)
    assert lb.bound == 1 and lb.parity == 1


def test_c_refuses_many_components(hopf):
    d = hopf
    for _ in range(4):
        d = disjoint_union(d, hopf)
    assert d.n_components == 10
    with pytest.raises(ValueError):
        c_invariant(d)
