"""Decide whether two graphs give isomorphic graph products of hyperfinite factors.

The ladder, first hit wins:

a. the graphs are isomorphic                      -> ISOMORPHIC_FACTORS
b. the factor calculus certifies equality           -> ISOMORPHIC_FACTORS
c. both connected + H-rigid, internal graphs differ -> NOT_ISOMORPHIC
d. both connected + H-rigid, radii differ by >= 2   -> NOT_ISOMORPHIC
e. otherwise UNKNOWN, or INAPPLICABLE when neither graph is H-rigid.

Step (d) can only fire when (c) does (the radius bound goes through the
internal graph), so reaching it with isomorphic internal graphs raises
:class:`InconsistencyError` instead of returning a verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .factors import RewriteTrace, graph_to_expression, provably_equal, to_text
from .graph import Graph, format_extnat, label_key
from .internal import HRigidityReport, internal_graph, is_h_rigid
from .io import graph_to_json
from .isomorphism import are_isomorphic, fingerprint, verify_mapping

SCHEMA_VERSION = 1


class Kind(str, enum.Enum):
    NOT_ISOMORPHIC = "NOT_ISOMORPHIC"
    ISOMORPHIC_FACTORS = "ISOMORPHIC_FACTORS"
    UNKNOWN = "UNKNOWN"
    INAPPLICABLE = "INAPPLICABLE"


class Basis(str, enum.Enum):
    GRAPH_ISOMORPHIC = "GRAPH_ISOMORPHIC"
    THEOREM_4_7 = "THEOREM_4_7"  # internal graphs are an invariant of H-rigid graphs
    COROLLARY_4_11 = "COROLLARY_4_11"  # radii of H-rigid graphs differ by at most 1
    FACTOR_CALCULUS = "FACTOR_CALCULUS"
    NONE = "NONE"


class InconsistencyError(AssertionError):
    """The radius separation fired although the internal graphs are isomorphic."""


@dataclass(frozen=True)
class Verdict:
    kind: Kind
    basis: Basis
    evidence: dict = field(default_factory=dict)
    reports: tuple[HRigidityReport, HRigidityReport] | None = None
    certificate: RewriteTrace | None = None
    mapping: dict | None = None

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": self.kind.value,
            "basis": self.basis.value,
            "evidence": self.evidence,
            "reports": None
            if self.reports is None
            else {"g1": self.reports[0].to_json(), "g2": self.reports[1].to_json()},
        }


def _mapping_json(mapping: dict) -> list:
    return [[k, mapping[k]] for k in sorted(mapping, key=label_key)]


def _fingerprint_json(fp: tuple) -> dict:
    names = ("vertices", "edges", "degrees", "triangles", "eccentricities")
    return {k: list(v) if isinstance(v, tuple) else v for k, v in zip(names, fp)}


def _fingerprint_gap(g1: Graph, g2: Graph) -> dict:
    f1, f2 = _fingerprint_json(fingerprint(g1)), _fingerprint_json(fingerprint(g2))
    differing = [k for k in f1 if f1[k] != f2[k]]
    if differing:
        return {"method": "fingerprint", "differing": differing, "g1": f1, "g2": f2}
    return {"method": "exhausted_search", "g1": f1, "g2": f2}


def distinguish(
    g1: Graph,
    g2: Graph,
    *,
    strict: bool = False,
    reports: tuple[HRigidityReport, HRigidityReport] | None = None,
) -> Verdict:
    """Compare the graph products over ``g1`` and ``g2``; see the module docstring."""
    if reports is None:
        reports = (is_h_rigid(g1), is_h_rigid(g2))
    r1, r2 = reports

    iso = are_isomorphic(g1, g2)
    if iso:
        return Verdict(
            Kind.ISOMORPHIC_FACTORS,
            Basis.GRAPH_ISOMORPHIC,
            {"mapping": _mapping_json(iso.mapping)},
            reports,
            mapping=iso.mapping,
        )

    e1, e2 = graph_to_expression(g1, strict), graph_to_expression(g2, strict)
    cert = provably_equal(e1, e2)
    if cert is not None:
        return Verdict(
            Kind.ISOMORPHIC_FACTORS,
            Basis.FACTOR_CALCULUS,
            {
                "expr1": to_text(e1),
                "expr2": to_text(e2),
                "certificate": cert.to_json(),
                "uses_extension": cert.uses_extension,
            },
            reports,
            certificate=cert,
        )

    notes = sorted(set(r1.notes) | set(r2.notes))
    both = r1.h_rigid and r2.h_rigid and r1.connected and r2.connected
    if both:
        int1, int2 = internal_graph(g1), internal_graph(g2)
        int_iso = are_isomorphic(int1, int2)
        gap = abs(r1.radius - r2.radius)
        radius_fires = gap >= 2
        if not int_iso:
            return Verdict(
                Kind.NOT_ISOMORPHIC,
                Basis.THEOREM_4_7,
                {
                    "int1": graph_to_json(int1),
                    "int2": graph_to_json(int2),
                    "non_isomorphism": _fingerprint_gap(int1, int2),
                    "radii": [format_extnat(r1.radius), format_extnat(r2.radius)],
                    "radius_separates": radius_fires,
                },
                reports,
            )
        if radius_fires:
            raise InconsistencyError(
                f"radii {r1.radius} and {r2.radius} differ by {gap} although the internal graphs are isomorphic"
            )
        return Verdict(
            Kind.UNKNOWN,
            Basis.NONE,
            {
                "reason": "both graphs H-rigid with isomorphic internal graphs and no factor certificate",
                "int_mapping": _mapping_json(int_iso.mapping),
                "radii": [format_extnat(r1.radius), format_extnat(r2.radius)],
                "expr1": to_text(e1),
                "expr2": to_text(e2),
                "notes": notes,
            },
            reports,
        )

    failed = []
    for name, r in (("g1", r1), ("g2", r2)):
        if not r.h_rigid:
            failed.append(f"{name} is not H-rigid")
        elif not r.connected:
            failed.append(f"{name} is not connected")
    kind = Kind.INAPPLICABLE if not (r1.h_rigid or r2.h_rigid) else Kind.UNKNOWN
    return Verdict(
        kind,
        Basis.NONE,
        {"failed_hypotheses": failed, "expr1": to_text(e1), "expr2": to_text(e2), "notes": notes},
        reports,
    )


def audit(verdict: Verdict, g1: Graph, g2: Graph) -> list[str]:
    """Soundness gates a verdict must pass; returns the list of violations."""
    problems = []
    if verdict.kind is Kind.NOT_ISOMORPHIC:
        if verdict.basis not in (Basis.THEOREM_4_7, Basis.COROLLARY_4_11):
            problems.append(f"NOT_ISOMORPHIC with basis {verdict.basis.value}")
        if verdict.reports is None or not all(r.h_rigid for r in verdict.reports):
            problems.append("NOT_ISOMORPHIC without two H-rigid reports")
        if verdict.basis is Basis.THEOREM_4_7 and are_isomorphic(internal_graph(g1), internal_graph(g2)):
            problems.append("internal graphs are in fact isomorphic")
    if verdict.kind is Kind.ISOMORPHIC_FACTORS:
        if verdict.basis is Basis.GRAPH_ISOMORPHIC:
            if verdict.mapping is None or not verify_mapping(g1, g2, verdict.mapping):
                problems.append("graph isomorphism mapping does not verify")
        elif verdict.basis is Basis.FACTOR_CALCULUS:
            cert = verdict.certificate
            if cert is None or not cert.validates():
                problems.append("factor certificate does not replay")
            elif cert.source != graph_to_expression(g1, False) and cert.source != graph_to_expression(g1, True):
                problems.append("certificate source is not the expression of g1")
        else:
            problems.append(f"ISOMORPHIC_FACTORS with basis {verdict.basis.value}")
    return problems


@dataclass(frozen=True)
class CatalogReport:
    graphs: tuple[Graph, ...]
    verdicts: dict  # (i, j) with i < j -> Verdict
    classes: tuple[tuple[int, ...], ...]

    def separations(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.verdicts.items() if v.kind is Kind.NOT_ISOMORPHIC)

    def to_json(self) -> dict:
        n = len(self.graphs)
        matrix = [[None] * n for _ in range(n)]
        for (i, j), v in self.verdicts.items():
            matrix[i][j] = matrix[j][i] = {"kind": v.kind.value, "basis": v.basis.value}
        return {
            "schema": SCHEMA_VERSION,
            "graphs": [graph_to_json(g) for g in self.graphs],
            "matrix": matrix,
            "classes": [list(c) for c in self.classes],
            "separations": [list(p) for p in self.separations()],
        }


def classify_catalog(graphs, *, strict: bool = False) -> CatalogReport:
    """Pairwise verdicts and the classes generated by ISOMORPHIC_FACTORS."""
    graphs = tuple(graphs)
    reports = [is_h_rigid(g) for g in graphs]
    parent = list(range(len(graphs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    verdicts = {}
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            v = distinguish(graphs[i], graphs[j], strict=strict, reports=(reports[i], reports[j]))
            verdicts[i, j] = v
            if v.kind is Kind.ISOMORPHIC_FACTORS:
                a, b = find(i), find(j)
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(len(graphs)):
        groups.setdefault(find(i), []).append(i)
    classes = tuple(tuple(g) for g in sorted(groups.values()))
    return CatalogReport(graphs, verdicts, classes)


__all__ = [
    "Basis",
    "CatalogReport",
    "InconsistencyError",
    "Kind",
    "Verdict",
    "audit",
    "classify_catalog",
    "distinguish",
]
