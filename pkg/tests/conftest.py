import itertools
import sys

import networkx as nx
from hypothesis import settings, strategies as st

from gfr.graph import Graph

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edge_list(range(1, n + 1), [p for p, keep in zip(pairs, chosen) if keep])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    return Graph.from_edge_list(list(h.nodes), list(h.edges))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
