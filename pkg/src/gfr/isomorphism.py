"""Exact isomorphism testing for small graphs.

Backtracking search in the VF2 spirit: vertices of the first graph are
matched in a connectivity-preserving order that starts from the rarest
vertex class, and candidates are pruned by a per-vertex signature (degree,
triangle count, sorted neighbour degrees) plus adjacency consistency with the
partial map.  Disconnected graphs are split into components, which are paired
by fingerprint before the per-component search.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, component_masks, eccentricity_index, induced_by_mask, iter_bits


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    mapping: dict | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.isomorphic


def _triangles(g: Graph) -> list[int]:
    masks = g.masks
    out = []
    for i, m in enumerate(masks):
        t = 0
        for j in iter_bits(m):
            t += (masks[j] & m).bit_count()
        out.append(t // 2)
    return out


def _ecc_key(x) -> tuple:
    # sortable stand-in for an ExtNat
    return (1, 0) if x == float("inf") else (0, x)


@lru_cache(maxsize=8192)
def fingerprint(g: Graph) -> tuple:
    """Isomorphism invariant: (|V|, |E|, degrees, triangle counts, eccentricities).

    The three sequences are sorted; infinite eccentricities are written ``"inf"``.
    """
    degrees = sorted(m.bit_count() for m in g.masks)
    ecc = sorted((eccentricity_index(g, i) for i in range(len(g))), key=_ecc_key)
    return (
        len(g),
        g.num_edges(),
        tuple(degrees),
        tuple(sorted(_triangles(g))),
        tuple("inf" if e == float("inf") else int(e) for e in ecc),
    )


def _signatures(g: Graph) -> list[tuple]:
    masks = g.masks
    deg = [m.bit_count() for m in masks]
    tri = _triangles(g)
    return [
        (deg[i], tri[i], tuple(sorted(deg[j] for j in iter_bits(masks[i]))))
        for i in range(len(g))
    ]


def verify_mapping(g1: Graph, g2: Graph, mapping: dict) -> bool:
    """True iff ``mapping`` is a bijection preserving adjacency and non-adjacency."""
    if len(g1) != len(g2) or set(mapping) != set(g1.vertices):
        return False
    if set(mapping.values()) != set(g2.vertices) or len(set(mapping.values())) != len(g2):
        return False
    verts = g1.vertices
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            u, v = verts[a], verts[b]
            if g1.has_edge(u, v) != g2.has_edge(mapping[u], mapping[v]):
                return False
    return True


def _search_connected(g1: Graph, g2: Graph) -> dict | None:
    """Isomorphism search between two graphs with equal fingerprints (index map)."""
    n = len(g1)
    if n == 0:
        return {}
    sig1, sig2 = _signatures(g1), _signatures(g2)
    if Counter(sig1) != Counter(sig2):
        return None
    by_sig: dict[tuple, list[int]] = {}
    for j, s in enumerate(sig2):
        by_sig.setdefault(s, []).append(j)
    freq = Counter(sig1)

    # matching order: rarest class first, then grow along edges, preferring
    # vertices with many already-ordered neighbours
    m1 = g1.masks
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        frontier = [i for i in remaining if m1[i] & placed]
        pool = frontier or list(remaining)
        best = min(pool, key=lambda i: (-(m1[i] & placed).bit_count(), freq[sig1[i]], -sig1[i][0], i))
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)

    m2 = g2.masks
    image = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        i = order[k]
        for j in by_sig[sig1[i]]:
            if used >> j & 1:
                continue
            ok = True
            for p in order[:k]:
                if (m1[i] >> p & 1) != (m2[j] >> image[p] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = j
            used |= 1 << j
            if extend(k + 1):
                return True
            used &= ~(1 << j)
            image[i] = -1
        return False

    return {i: image[i] for i in range(n)} if extend(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> IsoResult:
    """Exact isomorphism test; on success the returned mapping is re-verified."""
    if fingerprint(g1) != fingerprint(g2):
        return IsoResult(False)
    comps1 = [induced_by_mask(g1, m) for m in component_masks(g1)]
    comps2 = [induced_by_mask(g2, m) for m in component_masks(g2)]
    fp1 = [fingerprint(c) for c in comps1]
    fp2 = [fingerprint(c) for c in comps2]
    if Counter(fp1) != Counter(fp2):
        return IsoResult(False)

    mapping: dict = {}
    taken = [False] * len(comps2)
    # components with equal fingerprints may still be non-isomorphic, so the
    # pairing itself is searched
    order = sorted(range(len(comps1)), key=lambda a: fp1[a])

    def pair(k: int) -> bool:
        if k == len(order):
            return True
        a = order[k]
        for b in range(len(comps2)):
            if taken[b] or fp2[b] != fp1[a]:
                continue
            sub = _search_connected(comps1[a], comps2[b])
            if sub is None:
                continue
            taken[b] = True
            for i, j in sub.items():
                mapping[comps1[a].vertices[i]] = comps2[b].vertices[j]
            if pair(k + 1):
                return True
            taken[b] = False
            for v in comps1[a].vertices:
                mapping.pop(v, None)
        return False

    if not pair(0):
        return IsoResult(False)
    if not verify_mapping(g1, g2, mapping):  # pragma: no cover - search invariant
        raise AssertionError("isomorphism search produced an invalid mapping")
    return IsoResult(True, mapping)
