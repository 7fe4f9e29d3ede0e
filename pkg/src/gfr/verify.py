"""Property sweeps: the universally quantified statements, checked on samples.

=========  ===================================================================
prop42     external vertices always touch an internal vertex
lemma43    radius(G) <= radius(Int G) + 1
cor411     H-rigid graphs with isomorphic internal graphs: radii differ by <= 1
oracle     fast paths agree with subset enumeration (exhaustive catalog + random)
prop45     lines, cycles, random and regular trees are H-rigid (Z_4 whitelisted)
=========  ===================================================================

Every sample is generated from ``(seed, suite, index)`` only, so results do
not depend on the worker pool.  A failure on a statement that is proved for
all graphs in the hypothesis class points at an implementation bug.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .distinguish import InconsistencyError, Kind, distinguish
from .families import cycle, graph_catalog, line, random_tree, truncated_regular_tree
from .graph import Graph, radius
from .internal import (
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
from .io import to_edge_list
from .isomorphism import are_isomorphic
from .sampling import erdos_renyi, random_all_singletons_graph, random_h_rigid_pair, sample_rng

SUITES = ("prop42", "lemma43", "cor411", "oracle", "prop45")

DEFAULT_SAMPLES = {"prop42": 300, "lemma43": 300, "cor411": 200, "oracle": 200, "prop45": 500}


@dataclass(frozen=True)
class Failure:
    index: int
    label: str
    message: str
    graphs: tuple[Graph, ...]

    def render(self) -> str:
        parts = [f"[{self.index}] {self.label}: {self.message}"]
        for k, g in enumerate(self.graphs, 1):
            body = to_edge_list(g).rstrip("\n").replace("\n", "\n    ")
            parts.append(f"  graph {k}:\n    {body}")
        return "\n".join(parts)


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    whitelist_mismatch: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.whitelist_mismatch

    @property
    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.whitelist_mismatch:
            return 4
        return 0

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [
                {"index": f.index, "label": f.label, "message": f.message, "graphs": [to_edge_list(g) for g in f.graphs]}
                for f in self.failures
            ],
            "notes": self.notes,
            "whitelist_mismatch": self.whitelist_mismatch,
        }


# An outcome is (label, message-or-None, graphs, note-or-None).


def _prop42(seed: int, i: int, _payload=None):
    g = random_all_singletons_graph(sample_rng(seed, "prop42", i), need_internal=True)
    ok = check_external_adjacency(g)
    return f"sample {i}", None if ok else "external vertex without internal neighbour", (g,), None


def _lemma43(seed: int, i: int, _payload=None):
    g = random_all_singletons_graph(sample_rng(seed, "lemma43", i))
    ok = check_radius_bound(g)
    msg = None if ok else f"radius {radius(g)} > radius(Int) + 1 = {radius(internal_graph(g)) + 1}"
    return f"sample {i}", msg, (g,), None


def _cor411(seed: int, i: int, _payload=None):
    g1, g2 = random_h_rigid_pair(sample_rng(seed, "cor411", i))
    if not are_isomorphic(internal_graph(g1), internal_graph(g2)):
        return f"pair {i}", "sampler produced non-isomorphic internal graphs", (g1, g2), None
    r1, r2 = radius(g1), radius(g2)
    if abs(r1 - r2) > 1:
        return f"pair {i}", f"radii {r1} and {r2} differ by more than 1", (g1, g2), None
    try:
        v = distinguish(g1, g2)
    except InconsistencyError as exc:
        return f"pair {i}", str(exc), (g1, g2), None
    if v.kind is Kind.NOT_ISOMORPHIC:
        return f"pair {i}", f"separated via {v.basis.value} despite isomorphic internal graphs", (g1, g2), None
    return f"pair {i}", None, (g1, g2), None


def check_oracle(g: Graph) -> str | None:
    """Compare every fast path against its brute-force oracle on ``g``."""
    fast = internal_sets_fast(g)
    brute = internal_sets_bruteforce(g)
    if fast.all_singletons != brute.all_singletons:
        return f"all_singletons: fast={fast.all_singletons} brute={brute.all_singletons}"
    if fast.witness is not None and fast.witness not in set(brute.sets):
        return f"fast witness {sorted(fast.witness)} is not an internal set"
    singles = {next(iter(s)) for s in brute.sets if len(s) == 1}
    if singles != set(internal_vertices(g)):
        return "internal vertices differ from singleton internal sets"
    ok3, w3 = link_condition(g)
    b3, bw3 = link_condition_bruteforce(g)
    if ok3 != b3:
        return f"link condition: fast={ok3} brute={b3}"
    if w3 is not None and frozenset(w3.path) != bw3:
        return f"link witness {w3.path} differs from least failing set {sorted(bw3)}"
    return None


def _oracle(seed: int, i: int, payload=None):
    if payload is not None:
        g = payload
        label = f"catalog {i}"
    else:
        rng = sample_rng(seed, "oracle", i)
        g = erdos_renyi(rng.randint(8, 14), rng.uniform(0.1, 0.7), rng)
        label = f"random {i}"
    return label, check_oracle(g), (g,), None


def _prop45_items(samples: int, seed: int) -> list:
    items: list = [("line", n) for n in range(2, 11)]
    items += [("cycle", n) for n in range(3, 11)]
    items += [("regtree", d, depth) for d in range(2, 5) for depth in range(1, 5)]
    items += [("tree", k) for k in range(samples)]
    return items


def _prop45(seed: int, i: int, item):
    kind = item[0]
    if kind == "line":
        g, label = line(item[1]), f"line({item[1]})"
    elif kind == "cycle":
        g, label = cycle(item[1]), f"cycle({item[1]})"
    elif kind == "regtree":
        g, label = truncated_regular_tree(item[1], item[2]), f"regtree({item[1]},{item[2]})"
    else:
        rng = sample_rng(seed, "prop45", item[1])
        n = rng.randint(1, 14)
        g, label = random_tree(n, rng.randrange(2**32)), f"tree #{item[1]} (n={n})"
    rep = is_h_rigid(g)
    if kind == "cycle" and item[1] == 4:
        expected = frozenset({2, 4})
        if rep.h_rigid or rep.internal_set_witness != expected or not rep.notes:
            return label, "WHITELIST", (g,), None
        return label, None, (g,), f"{label}: not H-rigid, witness {{2,4}} (whitelisted): {rep.notes[0]}"
    return label, None if rep.h_rigid else "not H-rigid", (g,), None


_RUNNERS = {"prop42": _prop42, "lemma43": _lemma43, "cor411": _cor411, "oracle": _oracle, "prop45": _prop45}


def _dispatch(task):
    suite, seed, i, payload = task
    return i, _RUNNERS[suite](seed, i, payload)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("GFR_JOBS", "1")))
    except ValueError:
        return 1


def run_suite(
    suite: str,
    samples: int | None = None,
    seed: int = 0,
    max_n: int = 7,
    jobs: int | None = None,
) -> SuiteResult:
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    samples = DEFAULT_SAMPLES[suite] if samples is None else samples
    jobs = default_jobs() if jobs is None else jobs
    if suite == "oracle":
        catalog = graph_catalog(max_n)
        tasks = [(suite, seed, i, g) for i, g in enumerate(catalog)]
        tasks += [(suite, seed, len(catalog) + k, None) for k in range(samples)]
    elif suite == "prop45":
        tasks = [(suite, seed, i, item) for i, item in enumerate(_prop45_items(samples, seed))]
    else:
        tasks = [(suite, seed, i, None) for i in range(samples)]

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_dispatch, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        outcomes = [_dispatch(t) for t in tasks]

    result = SuiteResult(suite)
    for i, (label, message, graphs, note) in sorted(outcomes, key=lambda o: o[0]):
        result.checked += 1
        if note:
            result.notes.append(note)
        if message == "WHITELIST":
            result.whitelist_mismatch.append(f"{label}: expected the documented not-H-rigid result")
        elif message is not None:
            result.failures.append(Failure(i, label, message, graphs))
    return result
