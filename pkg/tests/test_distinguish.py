import json

import pytest
from hypothesis import given, strategies as st

from gfr.distinguish import Basis, Kind, audit, classify_catalog, distinguish
from gfr.families import complete, complete_bipartite, cycle, line, star
from gfr.graph import Graph
from gfr.sampling import random_h_rigid_pair, shuffled

from conftest import graphs


def test_bipartite_pair_gets_replayable_certificate():
    v = distinguish(complete_bipartite(3, 3), complete_bipartite(2, 5))
    assert v.kind is Kind.ISOMORPHIC_FACTORS and v.basis is Basis.FACTOR_CALCULUS
    assert v.certificate.validates()
    assert not audit(v, complete_bipartite(3, 3), complete_bipartite(2, 5))


@pytest.mark.parametrize("n, m", [(n, m) for n in range(2, 9) for m in range(n + 1, 9)])
def test_lines_are_separated(n, m):
    v = distinguish(line(n), line(m))
    assert (v.kind, v.basis) == (Kind.NOT_ISOMORPHIC, Basis.THEOREM_4_7)
    assert all(r.h_rigid for r in v.reports)


@pytest.mark.parametrize("n, m", [(n, m) for n in range(5, 10) for m in range(n + 1, 10)])
def test_long_cycles_are_separated(n, m):
    assert distinguish(cycle(n), cycle(m)).kind is Kind.NOT_ISOMORPHIC


def test_complete_graphs_all_collapse():
    for i in range(1, 8):
        for j in range(1, 8):
            v = distinguish(complete(i), complete(j))
            assert v.kind is Kind.ISOMORPHIC_FACTORS
            assert not audit(v, complete(i), complete(j))


def test_stars_stay_unknown():
    v = distinguish(star(3), star(4))
    assert (v.kind, v.basis) == (Kind.UNKNOWN, Basis.NONE)
    assert all(r.h_rigid for r in v.reports)


def test_cycle_four_is_outside_the_hypotheses():
    v = distinguish(cycle(4), cycle(5))
    assert v.kind is Kind.UNKNOWN
    assert v.evidence["failed_hypotheses"] == ["g1 is not H-rigid"]
    assert v.evidence["notes"]
    both_bad = distinguish(cycle(4), complete_bipartite(3, 3))
    assert both_bad.kind is Kind.INAPPLICABLE


def test_disconnected_h_rigid_graphs_are_not_separated():
    g = Graph.from_edge_list(range(1, 6), [(1, 2), (2, 3), (4, 5)])
    v = distinguish(g, line(6))
    assert v.kind is Kind.UNKNOWN
    assert "g1 is not connected" in v.evidence["failed_hypotheses"]


def test_verdict_json_is_deterministic():
    a = json.dumps(distinguish(line(4), line(7)).to_json(), sort_keys=True)
    b = json.dumps(distinguish(line(4), line(7)).to_json(), sort_keys=True)
    assert a == b and json.loads(a)["schema"] == 1


@given(graphs(max_n=7), graphs(max_n=7))
def test_symmetric_and_audited(g, h):
    v, w = distinguish(g, h), distinguish(h, g)
    assert v.kind is w.kind and v.basis is w.basis
    assert audit(v, g, h) == []


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_isomorphic_graphs_are_never_separated(g, rng):
    h = shuffled(g, rng)
    v = distinguish(g, h)
    assert (v.kind, v.basis) == (Kind.ISOMORPHIC_FACTORS, Basis.GRAPH_ISOMORPHIC)
    assert audit(v, g, h) == []


@given(st.randoms(use_true_random=False))
def test_pairs_with_isomorphic_internal_graphs_are_never_separated(rng):
    g1, g2 = random_h_rigid_pair(rng)
    v = distinguish(g1, g2)
    assert v.kind is not Kind.NOT_ISOMORPHIC


def test_catalog_classes():
    graphs_ = [line(n) for n in range(2, 8)]
    rep = classify_catalog(graphs_)
    assert rep.classes == tuple((i,) for i in range(6))
    assert len(rep.separations()) == 15
    mixed = classify_catalog([complete(2), complete(5), complete_bipartite(3, 3), complete_bipartite(2, 5), star(3)])
    assert mixed.classes == ((0, 1), (2, 3), (4,))
    assert mixed.to_json()["matrix"][0][1] == {"kind": "ISOMORPHIC_FACTORS", "basis": "FACTOR_CALCULUS"}
