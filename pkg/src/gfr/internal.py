"""Internal sets, internal vertices, the internal graph and H-rigidity.

A non-empty vertex set ``S`` is *internal* when its common neighbourhood
``link(S)`` is not complete.  A graph is *H-rigid* when

1. it is locally finite (automatic for finite graphs),
2. every internal set is a single vertex, and
3. every non-empty ``S`` with non-empty link induces a disjoint union of
   cliques.

Each condition has an exponential brute-force oracle (enumerate subsets) and
a polynomial fast path:

* condition 2 fails exactly when two non-adjacent vertices ``x, y`` share at
  least two neighbours; ``N(x) & N(y)`` is then an internal set of size >= 2,
  and every internal set sits inside such a common neighbourhood;
* condition 3 holds exactly when every neighbourhood ``N(w)`` induces a
  cluster graph, i.e. contains no induced path ``a - b - c``.

The test-suite checks both equivalences exhaustively against the oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    ExtNat,
    Graph,
    Vertex,
    component_masks,
    format_extnat,
    induced_by_mask,
    is_complete_mask,
    is_connected,
    iter_bits,
    label_key,
    link_mask,
    radius,
)

BRUTE_FORCE_LIMIT = 20

# The published list of H-rigid families includes every cycle Z_n with n >= 3;
# read literally, the internal-set definition rejects n = 4.
Z4_DISCREPANCY = (
    "cycle Z_4 is listed among the H-rigid cycle graphs (Z_n, n >= 3), but "
    "{2,4} has link {1,3}, which is not complete, so it is an internal set of "
    "size 2 and condition (2) fails; reported as not H-rigid"
)


class TooLarge(ValueError):
    """Brute-force enumeration refused; pass ``force=True`` to override."""


class PreconditionViolated(ValueError):
    def __init__(self, hypothesis: str) -> None:
        super().__init__(f"precondition violated: {hypothesis}")
        self.hypothesis = hypothesis


@dataclass(frozen=True)
class InternalSetReport:
    """Outcome of an internal-set search.

    ``sets`` is the enumerated family (brute force only; the fast path leaves
    it empty apart from the singleton sets).  ``witness`` is an internal set
    of size >= 2 whenever ``all_singletons`` is false.
    """

    sets: tuple[frozenset, ...]
    all_singletons: bool
    witness: frozenset | None = None
    truncated: bool = False


@dataclass(frozen=True)
class LinkConditionWitness:
    vertex: Vertex
    path: tuple[Vertex, Vertex, Vertex]  # a - b - c with a, c non-adjacent

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "path": list(self.path)}


@dataclass(frozen=True)
class HRigidityReport:
    locally_finite: bool
    internal_sets_are_vertices: bool
    internal_set_witness: frozenset | None
    link_condition: bool
    link_condition_witness: LinkConditionWitness | None
    connected: bool
    int_vertices: tuple
    radius: ExtNat
    notes: tuple[str, ...] = ()
    oracle_agrees: bool | None = None

    @property
    def h_rigid(self) -> bool:
        return self.locally_finite and self.internal_sets_are_vertices and self.link_condition

    @property
    def int_graph_well_defined(self) -> bool:
        return self.internal_sets_are_vertices

    def to_json(self) -> dict:
        w2 = self.internal_set_witness
        w3 = self.link_condition_witness
        out = {
            "h_rigid": self.h_rigid,
            "conditions": {
                "locally_finite": self.locally_finite,
                "internal_sets_are_vertices": self.internal_sets_are_vertices,
                "link_condition": self.link_condition,
            },
            "witnesses": {
                "internal_set": None if w2 is None else _sorted_list(w2),
                "link_condition": None if w3 is None else w3.to_json(),
            },
            "int_vertices": list(self.int_vertices),
            "int_graph_well_defined": self.int_graph_well_defined,
            "connected": self.connected,
            "radius": format_extnat(self.radius),
            "notes": list(self.notes),
        }
        if self.oracle_agrees is not None:
            out["oracle_agrees"] = self.oracle_agrees
        return out


def _sorted_list(vs) -> list:
    return sorted(vs, key=label_key)


# -- internal sets -----------------------------------------------------------


def is_internal_mask(g: Graph, mask: int) -> bool:
    return mask != 0 and not is_complete_mask(g, link_mask(g, mask))


def _guard(g: Graph, force: bool) -> None:
    if len(g) > BRUTE_FORCE_LIMIT and not force:
        raise TooLarge(
            f"{len(g)} vertices exceeds the brute-force limit of {BRUTE_FORCE_LIMIT}"
        )


def internal_sets_bruteforce(
    g: Graph, max_size: int | None = None, *, force: bool = False
) -> InternalSetReport:
    """Enumerate every non-empty vertex set whose link is not complete.

    Exponential; refuses graphs above ``BRUTE_FORCE_LIMIT`` vertices unless
    ``force`` is set.  Sets come out in shortlex order (size, then vertex
    order), and the witness is the shortlex-least internal set of size >= 2.
    """
    _guard(g, force)
    n = len(g)
    top = n if max_size is None else min(max_size, n)
    found: list[int] = []
    for size in range(1, top + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if is_internal_mask(g, mask):
                found.append(mask)
    big = [m for m in found if m.bit_count() >= 2]
    return InternalSetReport(
        sets=tuple(frozenset(g.labels(m)) for m in found),
        all_singletons=not big,
        witness=frozenset(g.labels(big[0])) if big else None,
        truncated=top < n,
    )


def common_neighbourhood_witness(g: Graph) -> int:
    """Mask of ``N(x) & N(y)`` for the least non-adjacent pair sharing >= 2 neighbours, or 0."""
    masks = g.masks
    for x in range(len(g)):
        for y in range(x + 1, len(g)):
            if masks[x] >> y & 1:
                continue
            common = masks[x] & masks[y]
            if common.bit_count() >= 2:
                return common
    return 0


def internal_sets_fast(g: Graph) -> InternalSetReport:
    """Decide whether all internal sets are singletons in polynomial time.

    ``sets`` holds only the internal vertices (as singletons); the exponential
    family is never materialised.
    """
    witness = common_neighbourhood_witness(g)
    singles = tuple(frozenset([v]) for v in internal_vertices(g))
    return InternalSetReport(
        sets=singles,
        all_singletons=witness == 0,
        witness=frozenset(g.labels(witness)) if witness else None,
        truncated=True,
    )


def internal_vertex_mask(g: Graph) -> int:
    out = 0
    for i, m in enumerate(g.masks):
        if not is_complete_mask(g, m):
            out |= 1 << i
    return out


def internal_vertices(g: Graph) -> tuple:
    """Vertices whose neighbourhood is not a complete graph, in vertex order."""
    return tuple(g.labels(internal_vertex_mask(g)))


def internal_graph(g: Graph) -> Graph:
    """Subgraph induced on the internal vertices.

    Always computable; it is only the canonical invariant when every internal
    set is a singleton (see ``HRigidityReport.int_graph_well_defined``).
    """
    return induced_by_mask(g, internal_vertex_mask(g))


# -- link condition ----------------------------------------------------------


def _induced_p3s(g: Graph, within: int):
    """Yield ``(a, b, c)`` index triples inside ``within`` with a-b-c an induced path."""
    masks = g.masks
    for b in iter_bits(within):
        nb = masks[b] & within
        for a in iter_bits(nb):
            for c in iter_bits(nb >> (a + 1) << (a + 1)):
                if not masks[a] >> c & 1:
                    yield a, b, c


def link_condition(g: Graph) -> tuple[bool, LinkConditionWitness | None]:
    """Check that every neighbourhood induces a disjoint union of cliques.

    On failure the witness is the shortlex-least vertex triple that induces a
    path inside some neighbourhood, together with the least vertex ``w``
    adjacent to all three.
    """
    best: tuple | None = None
    for w in range(len(g)):
        for a, b, c in _induced_p3s(g, g.masks[w]):
            key = tuple(sorted((a, b, c)))
            if best is None or key < best[0]:
                best = (key, (a, b, c))
    if best is None:
        return True, None
    key, (a, b, c) = best
    tri = (1 << a) | (1 << b) | (1 << c)
    w = next(iter_bits(link_mask(g, tri)))
    v = g.vertices
    return False, LinkConditionWitness(v[w], (v[a], v[b], v[c]))


def link_condition_bruteforce(
    g: Graph, *, force: bool = False
) -> tuple[bool, frozenset | None]:
    """Subset oracle for condition (3): every ``S`` with non-empty link splits into cliques.

    Returns the shortlex-least failing set on failure.
    """
    _guard(g, force)
    n = len(g)
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if link_mask(g, mask) == 0:
                continue
            for comp in component_masks(g, mask):
                if not is_complete_mask(g, comp):
                    return False, frozenset(g.labels(mask))
    return True, None


# -- H-rigidity ----------------------------------------------------------------


def _is_z4(g: Graph) -> bool:
    if len(g) != 4 or g.num_edges() != 4:
        return False
    return all(m.bit_count() == 2 for m in g.masks) and is_connected(g)


def is_h_rigid(g: Graph, *, oracle: bool = False, force: bool = False) -> HRigidityReport:
    """Evaluate the three H-rigidity conditions with witnesses.

    With ``oracle=True`` the brute-force enumerations are run as well and
    ``oracle_agrees`` records whether both routes gave the same booleans.
    """
    fast2 = internal_sets_fast(g)
    ok3, w3 = link_condition(g)
    notes: list[str] = []
    if _is_z4(g):
        notes.append(Z4_DISCREPANCY)
    agrees = None
    if oracle:
        brute2 = internal_sets_bruteforce(g, force=force)
        brute3, _ = link_condition_bruteforce(g, force=force)
        singles = {next(iter(s)) for s in brute2.sets if len(s) == 1}
        agrees = (
            brute2.all_singletons == fast2.all_singletons
            and brute3 == ok3
            and singles == set(internal_vertices(g))
        )
    return HRigidityReport(
        locally_finite=True,
        internal_sets_are_vertices=fast2.all_singletons,
        internal_set_witness=fast2.witness,
        link_condition=ok3,
        link_condition_witness=w3,
        connected=is_connected(g),
        int_vertices=internal_vertices(g),
        radius=radius(g),
        notes=tuple(notes),
        oracle_agrees=agrees,
    )


# -- statements that hold for every all-singletons graph ------------------------


def _require_singletons_connected(g: Graph) -> None:
    if not is_connected(g):
        raise PreconditionViolated("graph is not connected")
    if common_neighbourhood_witness(g):
        raise PreconditionViolated("some internal set has more than one vertex")


def check_external_adjacency(g: Graph) -> bool:
    """Every external vertex has an internal neighbour."""
    _require_singletons_connected(g)
    inner = internal_vertex_mask(g)
    if inner == 0:
        raise PreconditionViolated("graph has no internal vertices")
    outer = g.full_mask & ~inner
    return all(g.masks[i] & inner for i in iter_bits(outer))


def check_radius_bound(g: Graph) -> bool:
    """``radius(g) <= radius(internal_graph(g)) + 1`` in extended arithmetic."""
    _require_singletons_connected(g)
    return radius(g) <= radius(internal_graph(g)) + 1


__all__ = [
    "BRUTE_FORCE_LIMIT",
    "HRigidityReport",
    "InternalSetReport",
    "LinkConditionWitness",
    "PreconditionViolated",
    "TooLarge",
    "Z4_DISCREPANCY",
    "check_external_adjacency",
    "check_radius_bound",
    "internal_graph",
    "internal_sets_bruteforce",
    "internal_sets_fast",
    "internal_vertices",
    "is_h_rigid",
    "link_condition",
    "link_condition_bruteforce",
]
