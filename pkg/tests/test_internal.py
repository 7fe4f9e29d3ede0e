import itertools

import networkx as nx
import pytest
from hypothesis import assume, given, strategies as st

from gfr.families import complete, complete_bipartite, cycle, line, random_tree, star
from gfr.graph import INF, Graph
from gfr.sampling import random_all_singletons_graph
from gfr.internal import (
    Z4_DISCREPANCY,
    PreconditionViolated,
    TooLarge,
    check_external_adjacency,
    check_radius_bound,
    internal_graph,
    internal_sets_bruteforce,
    internal_sets_fast,
    internal_vertices,
    is_h_rigid,
    link_condition,
    link_condition_bruteforce,
)

from conftest import graphs, to_nx


# -- independent oracles built on networkx -----------------------------------------


def nx_internal_vertices(h: nx.Graph) -> set:
    out = set()
    for v in h:
        nb = list(h[v])
        if any(not h.has_edge(a, b) for a, b in itertools.combinations(nb, 2)):
            out.add(v)
    return out


def nx_internal_sets(h: nx.Graph) -> list[frozenset]:
    """Definition-level enumeration: S is internal iff its common neighbourhood is not a clique."""
    nodes = sorted(h)
    found = []
    for k in range(1, len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            lk = set(nodes)
            for v in s:
                lk &= set(h[v])
            if any(not h.has_edge(a, b) for a, b in itertools.combinations(sorted(lk), 2)):
                found.append(frozenset(s))
    return found


def nx_link_condition(h: nx.Graph) -> bool:
    nodes = sorted(h)
    for k in range(1, len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            if not set.intersection(*(set(h[v]) for v in s)):
                continue
            sub = h.subgraph(s)
            for comp in nx.connected_components(sub):
                c = len(comp)
                if sub.subgraph(comp).number_of_edges() != c * (c - 1) // 2:
                    return False
    return True


# -- worked examples ------------------------------------------------------------------


def test_internal_vertices_of_line_five():
    g = line(5)
    assert internal_vertices(g) == (2, 3, 4)
    assert internal_graph(g) == Graph.from_edge_list([2, 3, 4], [(2, 3), (3, 4)])


def test_internal_vertices_of_cycle_five():
    assert internal_vertices(cycle(5)) == (1, 2, 3, 4, 5)
    assert internal_graph(cycle(5)) == cycle(5)


def test_complete_graph_has_no_internal_vertices():
    assert internal_vertices(complete(5)) == ()
    assert is_h_rigid(complete(5)).h_rigid


def test_cycle_four_rejected_with_witness_and_note():
    rep = is_h_rigid(cycle(4), oracle=True)
    assert not rep.h_rigid
    assert not rep.internal_sets_are_vertices
    assert rep.internal_set_witness == frozenset({2, 4})
    assert rep.link_condition
    assert rep.notes == (Z4_DISCREPANCY,)
    assert "Z_4" in rep.notes[0] and "{2,4}" in rep.notes[0]
    assert rep.oracle_agrees
    assert not rep.int_graph_well_defined


def test_cycle_four_bruteforce_witness_is_also_internal():
    brute = internal_sets_bruteforce(cycle(4))
    assert brute.witness == frozenset({1, 3})
    assert frozenset({2, 4}) in brute.sets


def test_wheel_fails_link_condition():
    w4 = Graph.from_edge_list([1, 2, 3, 4, "h"], cycle(4).edges() + [("h", v) for v in (1, 2, 3, 4)])
    ok, w = link_condition(w4)
    assert not ok
    assert w.vertex == "h" and w.path == (1, 2, 3)
    assert link_condition_bruteforce(w4) == (False, frozenset({1, 2, 3}))


def test_report_json_shape():
    data = is_h_rigid(cycle(4)).to_json()
    assert data["h_rigid"] is False
    assert data["witnesses"]["internal_set"] == [2, 4]
    assert data["radius"] == 2
    disc = is_h_rigid(Graph.from_edge_list([1, 2, 3], [(1, 2)])).to_json()
    assert disc["radius"] == "inf" and disc["connected"] is False


@pytest.mark.parametrize("n", range(2, 11))
def test_lines_are_h_rigid(n):
    assert is_h_rigid(line(n)).h_rigid


@pytest.mark.parametrize("n", [3, 5, 6, 7, 8, 9, 10])
def test_cycles_other_than_four_are_h_rigid(n):
    rep = is_h_rigid(cycle(n))
    assert rep.h_rigid and not rep.notes


@pytest.mark.parametrize("seed", range(40))
def test_random_trees_are_h_rigid(seed):
    assert is_h_rigid(random_tree(1 + seed % 14, seed)).h_rigid


def test_complete_bipartite_fails_condition_two():
    rep = is_h_rigid(complete_bipartite(3, 3))
    assert not rep.internal_sets_are_vertices
    assert is_h_rigid(star(4)).h_rigid


# -- fast paths against definitions -------------------------------------------------------


@given(graphs(max_n=7))
def test_internal_vertices_match_definition(g):
    assert set(internal_vertices(g)) == nx_internal_vertices(to_nx(g))


@given(graphs(max_n=6))
def test_bruteforce_matches_definition(g):
    assert list(internal_sets_bruteforce(g).sets) == nx_internal_sets(to_nx(g))


@given(graphs(max_n=7))
def test_fast_condition_two_matches_bruteforce(g):
    fast, brute = internal_sets_fast(g), internal_sets_bruteforce(g)
    assert fast.all_singletons == brute.all_singletons
    if fast.witness is not None:
        assert len(fast.witness) >= 2 and fast.witness in set(brute.sets)


@given(graphs(max_n=7))
def test_fast_condition_three_matches_definition(g):
    ok, witness = link_condition(g)
    assert ok == nx_link_condition(to_nx(g)) == link_condition_bruteforce(g)[0]
    if witness is not None:
        a, b, c = witness.path
        assert g.has_edge(a, b) and g.has_edge(b, c) and not g.has_edge(a, c)
        assert all(g.has_edge(witness.vertex, x) for x in witness.path)


@given(graphs(max_n=7))
def test_oracle_flag_agrees(g):
    assert is_h_rigid(g, oracle=True).oracle_agrees


def test_bruteforce_guard():
    big = line(21)
    with pytest.raises(TooLarge):
        internal_sets_bruteforce(big)
    assert internal_sets_bruteforce(big, max_size=1, force=True).truncated
    assert is_h_rigid(big).h_rigid  # fast path has no size limit


# -- statements valid for every connected all-singletons graph ---------------------------------


singleton_graphs = st.randoms(use_true_random=False).map(random_all_singletons_graph)


@given(singleton_graphs)
def test_external_vertices_touch_internal_ones(g):
    assume(internal_vertices(g))
    h = to_nx(g)
    inner = nx_internal_vertices(h)
    assert check_external_adjacency(g)
    assert all(set(h[v]) & inner for v in h if v not in inner)


@given(singleton_graphs)
def test_radius_bound(g):
    h = to_nx(g)
    inner = h.subgraph(nx_internal_vertices(h))
    if len(inner) == 0:
        r_int = 0
    elif nx.is_connected(inner):
        r_int = nx.radius(inner)
    else:
        r_int = INF
    assert check_radius_bound(g)
    assert nx.radius(h) <= r_int + 1


def test_preconditions_are_enforced():
    with pytest.raises(PreconditionViolated):
        check_radius_bound(Graph.from_edge_list([1, 2], []))
    with pytest.raises(PreconditionViolated):
        check_external_adjacency(cycle(4))
    with pytest.raises(PreconditionViolated):
        check_external_adjacency(complete(4))
