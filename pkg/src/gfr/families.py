"""Named graph families, seeded random trees and an exhaustive small-graph catalog.

All generators label vertices ``1..n``.  Infinite objects (the infinite line,
infinite regular trees) are only available through their finite truncations
``line(n)`` and ``truncated_regular_tree(d, depth)``.
"""

from __future__ import annotations

import enum
import heapq
import random
from dataclasses import dataclass, field

from .graph import Graph


class BadParam(ValueError):
    pass


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise BadParam(message)


def line(n: int) -> Graph:
    """Path ``1 - 2 - ... - n`` (n >= 2)."""
    _need(n >= 2, f"line needs n >= 2, got {n}")
    return Graph.from_edge_list(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    """Line ``l_n`` closed by the edge ``n - 1`` (n >= 3)."""
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Graph.from_edge_list(range(1, n + 1), edges)


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edge_list(
        range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    )


def complete_bipartite(m: int, n: int) -> Graph:
    """``K_{m,n}`` with parts ``1..m`` and ``m+1..m+n``."""
    _need(m >= 1 and n >= 1, f"complete bipartite graph needs m, n >= 1, got {m}, {n}")
    return Graph.from_edge_list(
        range(1, m + n + 1), [(i, j) for i in range(1, m + 1) for j in range(m + 1, m + n + 1)]
    )


def star(k: int) -> Graph:
    """``K_{1,k}``: centre 1 and leaves ``2..k+1``."""
    _need(k >= 1, f"star needs k >= 1, got {k}")
    return complete_bipartite(1, k)


def edgeless(n: int) -> Graph:
    _need(n >= 0, f"edgeless graph needs n >= 0, got {n}")
    return Graph.from_edge_list(range(1, n + 1), [])


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labelled tree on ``1..n`` with Prüfer sequence ``seq``."""
    if n == 1:
        return []
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(1, n + 1) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labelled tree on ``1..n`` from a seeded Prüfer sequence."""
    _need(n >= 1, f"random tree needs n >= 1, got {n}")
    rng = random.Random(seed)
    seq = [rng.randint(1, n) for _ in range(max(n - 2, 0))]
    return Graph.from_edge_list(range(1, n + 1), prufer_decode(seq, n))


def truncated_regular_tree(d: int, depth: int) -> Graph:
    """Finite part of the rooted tree where every vertex has ``d - 1`` children.

    The root is vertex 1 and vertices are numbered breadth-first; the tree is
    cut after ``depth`` generations, so it has ``sum((d-1)**k for k <= depth)``
    vertices.
    """
    _need(d >= 2, f"regular tree needs d >= 2, got {d}")
    _need(depth >= 1, f"regular tree needs depth >= 1, got {depth}")
    edges = []
    level = [1]
    nxt = 2
    for _ in range(depth):
        new_level = []
        for parent in level:
            for _ in range(d - 1):
                edges.append((parent, nxt))
                new_level.append(nxt)
                nxt += 1
        level = new_level
    return Graph.from_edge_list(range(1, nxt), edges)


# -- family specs -----------------------------------------------------------------


class Family(str, enum.Enum):
    LINE = "line"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "kbipartite"
    STAR = "star"
    RANDOM_TREE = "tree"
    TRUNCATED_REGULAR_TREE = "regtree"
    EDGELESS = "edgeless"


_ARITY = {
    Family.LINE: (1, 1),
    Family.CYCLE: (1, 1),
    Family.COMPLETE: (1, 1),
    Family.COMPLETE_BIPARTITE: (2, 2),
    Family.STAR: (1, 1),
    Family.RANDOM_TREE: (1, 2),  # n[:seed]
    Family.TRUNCATED_REGULAR_TREE: (2, 2),
    Family.EDGELESS: (1, 1),
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]
    seed: int | None = field(default=None)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``<tag>:<p1>[:<p2>...]``, e.g. ``line:5`` or ``tree:12:7``."""
        tag, *rest = text.split(":")
        try:
            fam = Family(tag)
        except ValueError:
            known = ", ".join(f.value for f in Family)
            raise BadParam(f"unknown family {tag!r} (known: {known})") from None
        try:
            nums = tuple(int(p) for p in rest)
        except ValueError:
            raise BadParam(f"non-integer parameter in {text!r}") from None
        lo, hi = _ARITY[fam]
        _need(lo <= len(nums) <= hi, f"family {tag} takes {lo}..{hi} parameters, got {len(nums)}")
        if fam is Family.RANDOM_TREE:
            return cls(fam, nums[:1], nums[1] if len(nums) > 1 else 0)
        return cls(fam, nums)

    def build(self) -> Graph:
        p = self.params
        if self.family is Family.LINE:
            return line(*p)
        if self.family is Family.CYCLE:
            return cycle(*p)
        if self.family is Family.COMPLETE:
            return complete(*p)
        if self.family is Family.COMPLETE_BIPARTITE:
            return complete_bipartite(*p)
        if self.family is Family.STAR:
            return star(*p)
        if self.family is Family.RANDOM_TREE:
            return random_tree(p[0], self.seed)
        if self.family is Family.TRUNCATED_REGULAR_TREE:
            return truncated_regular_tree(*p)
        return edgeless(*p)

    def __str__(self) -> str:
        parts = [self.family.value, *map(str, self.params)]
        if self.seed is not None:
            parts.append(str(self.seed))
        return ":".join(parts)


# -- catalog ----------------------------------------------------------------------


def graph_catalog(max_n: int) -> list[Graph]:
    """One representative of every isomorphism class on ``0..max_n`` vertices.

    Built by extending each graph on ``n - 1`` vertices with a new vertex in
    every possible way and keeping one graph per isomorphism class.  Every
    graph on ``n`` vertices arises this way (delete any vertex), so the
    catalog is complete.
    """
    from .isomorphism import are_isomorphic, fingerprint

    out = [Graph.empty()]
    prev = [Graph.empty()]
    for n in range(1, max_n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        level = []
        for g in prev:
            base = [(u, v) for u, v in g.edges()]
            for nb in range(1 << (n - 1)):
                edges = base + [(i + 1, n) for i in range(n - 1) if nb >> i & 1]
                h = Graph.from_edge_list(range(1, n + 1), edges)
                bucket = buckets.setdefault(fingerprint(h), [])
                if any(are_isomorphic(h, k) for k in bucket):
                    continue
                bucket.append(h)
                level.append(h)
        out.extend(level)
        prev = level
    return out
