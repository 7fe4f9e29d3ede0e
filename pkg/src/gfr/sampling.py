"""Random graph streams for the property sweeps.

Not part of the modelling API: these are the samplers the verification
suites and tests draw from.  Every sampler takes a ``random.Random`` so a
sweep is reproducible from ``(seed, sample index)`` alone.
"""

from __future__ import annotations

import random

from .families import cycle, random_tree
from .graph import Graph, is_connected, relabel
from .internal import common_neighbourhood_witness, internal_vertex_mask, is_h_rigid


def sample_rng(seed: int, suite: str, index: int) -> random.Random:
    """Independent generator for one sample of one sweep."""
    return random.Random(f"{seed}:{suite}:{index}")


def erdos_renyi(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return Graph.from_edge_list(range(1, n + 1), edges)


def shuffled(g: Graph, rng: random.Random) -> Graph:
    """Same graph with vertices renamed by a random permutation of ``1..n``."""
    targets = list(range(1, len(g) + 1))
    rng.shuffle(targets)
    return relabel(g, dict(zip(g.vertices, targets)))


def _tree_plus_edges(n: int, extra: int, rng: random.Random) -> Graph:
    t = random_tree(n, rng.randrange(2**32))
    edges = t.edges()
    for _ in range(extra):
        u, v = rng.sample(range(1, n + 1), 2)
        edges.append((u, v))
    return Graph.from_edge_list(range(1, n + 1), edges)


def random_connected_graph(rng: random.Random, n_min: int = 2, n_max: int = 12) -> Graph:
    """Connected graph from a mix of Erdős–Rényi draws and sparse trees-plus-edges."""
    while True:
        n = rng.randint(n_min, n_max)
        if rng.random() < 0.5:
            g = erdos_renyi(n, rng.uniform(0.1, 0.7), rng)
        else:
            g = _tree_plus_edges(n, rng.randint(0, n), rng)
        if is_connected(g):
            return g


def random_all_singletons_graph(
    rng: random.Random,
    n_min: int = 2,
    n_max: int = 12,
    *,
    need_internal: bool = False,
    max_tries: int = 100_000,
) -> Graph:
    """Rejection-sample a connected graph whose internal sets are all singletons."""
    for _ in range(max_tries):
        g = random_connected_graph(rng, n_min, n_max)
        if common_neighbourhood_witness(g):
            continue
        if need_internal and internal_vertex_mask(g) == 0:
            continue
        return g
    raise RuntimeError("rejection sampler exhausted its budget")


def _with_pendants(base: Graph, rng: random.Random) -> Graph:
    """Attach pendant leaves so that every base vertex ends up internal."""
    edges = base.edges()
    verts = list(base.vertices)
    nxt = max(verts, default=0) + 1
    for v in base.vertices:
        need = max(0, 2 - base.degree(v))
        for _ in range(need + rng.choice((0, 0, 1, 2))):
            verts.append(nxt)
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edge_list(verts, edges)


def random_base_graph(rng: random.Random) -> Graph:
    """A tree or a long cycle, to serve as a prescribed internal graph."""
    if rng.random() < 0.7:
        return random_tree(rng.randint(1, 8), rng.randrange(2**32))
    return cycle(rng.randint(5, 9))


def random_h_rigid_pair(rng: random.Random, max_tries: int = 1000) -> tuple[Graph, Graph]:
    """Two connected H-rigid graphs built around the same internal graph.

    Both graphs are checked with :func:`is_h_rigid`; the second one is
    randomly relabelled.
    """
    for _ in range(max_tries):
        base = random_base_graph(rng)
        g1 = _with_pendants(base, rng)
        g2 = shuffled(_with_pendants(base, rng), rng)
        r1, r2 = is_h_rigid(g1), is_h_rigid(g2)
        if r1.h_rigid and r2.h_rigid and r1.connected and r2.connected:
            return g1, g2
    raise RuntimeError("could not build an H-rigid pair")
