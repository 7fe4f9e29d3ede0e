"""Finite simple graphs and the basic neighbourhood / distance operations.

Vertices are opaque hashable labels.  Internally a graph re-indexes its
vertices to ``0..n-1`` in label order and stores adjacency as integer
bitmasks, which keeps the subset-heavy code in :mod:`gfr.internal` cheap.

Distances and radii live in the extended naturals; ``math.inf`` plays the
role of the point at infinity, so ``INF + 1 == INF`` and ``n < INF`` come for
free.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Hashable, Iterable, Iterator
from typing import Union

INF = math.inf
ExtNat = Union[int, float]  # non-negative int, or INF

Vertex = Hashable


class GraphError(Exception):
    """Base class for graph construction and lookup errors."""


class SelfLoop(GraphError, ValueError):
    def __init__(self, vertex: Vertex) -> None:
        super().__init__(f"self-loop at vertex {vertex!r}")
        self.vertex = vertex


class UnknownVertex(GraphError, KeyError):
    def __init__(self, vertex: Vertex) -> None:
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex

    def __str__(self) -> str:
        return self.args[0]


def label_key(v: Vertex) -> tuple:
    """Total order on mixed labels: integers first, then everything else by str."""
    if isinstance(v, bool):
        return (1, type(v).__name__, str(v))
    if isinstance(v, int):
        return (0, v, "")
    return (1, type(v).__name__, str(v))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable finite simple undirected graph."""

    __slots__ = ("_vertices", "_index", "_adj", "_hash")

    def __init__(self, vertices: Iterable[Vertex], masks: Iterable[int]) -> None:
        # Trusted constructor: ``vertices`` sorted by label_key and ``masks``
        # symmetric and irreflexive.  Use from_edge_list from outside.
        self._vertices: tuple = tuple(vertices)
        self._index: dict = {v: i for i, v in enumerate(self._vertices)}
        self._adj: tuple[int, ...] = tuple(masks)
        self._hash: int | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edge_list(
        cls, vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]]
    ) -> Graph:
        """Build a graph from declared vertices and unordered vertex pairs.

        Duplicate and reversed pairs collapse to one edge.  Raises
        :class:`SelfLoop` on a pair ``(v, v)`` and :class:`UnknownVertex`
        when an endpoint was not declared.
        """
        verts = sorted(set(vertices), key=label_key)
        index = {v: i for i, v in enumerate(verts)}
        masks = [0] * len(verts)
        for u, v in edges:
            if u == v:
                raise SelfLoop(u)
            for w in (u, v):
                if w not in index:
                    raise UnknownVertex(w)
            i, j = index[u], index[v]
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return cls(verts, masks)

    @classmethod
    def empty(cls) -> Graph:
        return cls((), ())

    # -- basic accessors --------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        try:
            return v in self._index
        except TypeError:
            return False

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._vertices)

    @property
    def adjacency(self) -> dict[Vertex, frozenset]:
        return {v: frozenset(self.neighbors(v)) for v in self._vertices}

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Edges as ``(u, v)`` pairs with ``u`` before ``v`` in vertex order."""
        out = []
        for i, mask in enumerate(self._adj):
            for j in iter_bits(mask >> (i + 1) << (i + 1)):
                out.append((self._vertices[i], self._vertices[j]))
        return out

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except (KeyError, TypeError):
            raise UnknownVertex(v) from None

    def neighbors(self, v: Vertex) -> list[Vertex]:
        return self.labels(self._adj[self.index(v)])

    def degree(self, v: Vertex) -> int:
        return self._adj[self.index(v)].bit_count()

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return bool(self._adj[self.index(u)] >> self.index(v) & 1)

    # -- bitmask helpers (used by the enumeration-heavy modules) ----------

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << len(self._vertices)) - 1

    def mask_of(self, vs: Iterable[Vertex]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    def labels(self, mask: int) -> list[Vertex]:
        return [self._vertices[i] for i in iter_bits(mask)]

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._vertices)!r}, edges={self.edges()!r})"


def from_edge_list(vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]]) -> Graph:
    return Graph.from_edge_list(vertices, edges)


def _check_subset(g: Graph, vs: Iterable[Vertex]) -> int:
    return g.mask_of(vs)


def link(g: Graph, vs: Iterable[Vertex]) -> frozenset:
    """Common neighbourhood of ``vs``; the link of the empty set is every vertex."""
    return frozenset(g.labels(link_mask(g, _check_subset(g, vs))))


def link_mask(g: Graph, mask: int) -> int:
    out = g.full_mask
    for i in iter_bits(mask):
        out &= g.masks[i]
    return out


def star(g: Graph, v: Vertex) -> frozenset:
    return frozenset(g.neighbors(v)) | {v}


def induced_subgraph(g: Graph, vs: Iterable[Vertex]) -> Graph:
    return induced_by_mask(g, _check_subset(g, vs))


def induced_by_mask(g: Graph, mask: int) -> Graph:
    idx = list(iter_bits(mask))
    remap = {old: new for new, old in enumerate(idx)}
    masks = []
    for old in idx:
        m = 0
        for j in iter_bits(g.masks[old] & mask):
            m |= 1 << remap[j]
        masks.append(m)
    return Graph([g.vertices[i] for i in idx], masks)


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within``, as masks."""
    todo = g.full_mask if within is None else within
    comps = []
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= g.masks[i]
            nxt &= todo & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        todo &= ~comp
    return comps


def connected_components(g: Graph) -> list[frozenset]:
    """Vertex sets of the connected components, ordered by least vertex."""
    return [frozenset(g.labels(m)) for m in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True for a non-empty graph with a single component."""
    return len(component_masks(g)) == 1


def is_complete(g: Graph, vs: Iterable[Vertex] | None = None) -> bool:
    mask = g.full_mask if vs is None else _check_subset(g, vs)
    return is_complete_mask(g, mask)


def is_complete_mask(g: Graph, mask: int) -> bool:
    for i in iter_bits(mask):
        # every other member of the set must be a neighbour of i
        if mask & ~g.masks[i] & ~(1 << i):
            return False
    return True


def bfs_distances(g: Graph, source: int) -> list[ExtNat]:
    """Distances from vertex index ``source`` to every vertex index."""
    dist: list[ExtNat] = [INF] * len(g)
    masks = g.masks
    seen = frontier = 1 << source
    d = 0
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            dist[i] = d
            nxt |= masks[i]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def eccentricity_index(g: Graph, source: int) -> ExtNat:
    masks = g.masks
    seen = frontier = 1 << source
    d = -1
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= masks[i]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return d if seen == g.full_mask else INF


def distance(g: Graph, u: Vertex, v: Vertex) -> ExtNat:
    i, j = g.index(u), g.index(v)
    return bfs_distances(g, i)[j]


def eccentricities(g: Graph) -> dict[Vertex, ExtNat]:
    return {v: eccentricity_index(g, i) for i, v in enumerate(g.vertices)}


def radius(g: Graph) -> ExtNat:
    """Minimum eccentricity; 0 for the empty graph and INF when disconnected."""
    if len(g) == 0:
        return 0
    if not is_connected(g):
        return INF
    return min(eccentricity_index(g, i) for i in range(len(g)))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.vertices, [full & ~m & ~(1 << i) for i, m in enumerate(g.masks)])


def relabel(g: Graph, mapping: dict) -> Graph:
    """Graph with every vertex ``v`` renamed to ``mapping[v]``."""
    return Graph.from_edge_list(
        (mapping[v] for v in g.vertices), ((mapping[u], mapping[v]) for u, v in g.edges())
    )


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union with vertices relabelled ``1..n`` in input order."""
    verts, edges, offset = [], [], 0
    for h in graphs:
        pos = {v: offset + k + 1 for k, v in enumerate(h.vertices)}
        verts.extend(pos.values())
        edges.extend((pos[u], pos[v]) for u, v in h.edges())
        offset += len(h)
    return Graph.from_edge_list(verts, edges)


def join(*graphs: Graph) -> Graph:
    """Graph join (every cross pair adjacent) with vertices relabelled ``1..n``."""
    return complement(disjoint_union(*(complement(h) for h in graphs)))


def format_extnat(x: ExtNat) -> int | str:
    """JSON-friendly form: finite values as int, infinity as ``"inf"``."""
    return "inf" if x == INF else int(x)
