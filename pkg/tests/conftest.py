from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

import pytest

from splitbound.bounds import bundled_catalog
from splitbound.diagram import diagram_from_pd, parse_pd

FIX = Path(__file__).parent / "fixtures"

HOPF = "PD[X[4,2,1,3], X[2,4,3,1]]"
WHITEHEAD = "PD[X[6,1,7,2],X[10,7,5,8],X[4,5,1,6],X[2,10,3,9],X[8,4,9,3]]"
BORROMEAN = "PD[X[6,1,7,2],X[12,8,9,7],X[4,12,1,11],X[10,5,11,6],X[8,4,5,3],X[2,9,3,10]]"


@lru_cache(maxsize=None)
def knotinfo() -> dict:
    return json.loads((FIX / "knotinfo.json").read_text())


@lru_cache(maxsize=None)
def _links() -> dict:
    return {r["name"]: r for r in knotinfo()["links"]}


def link_record(name: str) -> dict:
    recs = _links()
    for key in (name, name + "{0}", name + "{0,0}", name + "{0,0,0}"):
        if key in recs:
            return recs[key]
    raise KeyError(name)


def link(name: str):
    return diagram_from_pd(link_record(name)["pd"])


def knot(name: str):
    for r in knotinfo()["knots"]:
        if r["name"] == name:
            return diagram_from_pd(r["pd"])
    raise KeyError(name)


@lru_cache(maxsize=None)
def catalog_by_name() -> dict:
    return {e.name: e for e in bundled_catalog()}


@lru_cache(maxsize=None)
def covers() -> dict:
    return {r["name"]: r for r in json.loads((FIX / "covers.json").read_text())}


def twelve_crossing() -> list[dict]:
    return json.loads((FIX / "twelve_crossing.json").read_text())


@pytest.fixture
def hopf():
    return parse_pd(HOPF)


@pytest.fixture
def whitehead():
    return parse_pd(WHITEHEAD)


@pytest.fixture
def borromean():
    return parse_pd(BORROMEAN)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
