"""Graph-side toolkit for graph products of hyperfinite II_1 factors.

Internal vertices and H-rigidity, exact isomorphism, a rewrite calculus for
factor expressions, and a distinguisher that only claims what it can certify.
"""

__version__ = "0.1.0"

from .distinguish import Basis, Kind, Verdict, audit, classify_catalog, distinguish
from .factors import (
    amplify_fgf,
    graph_to_expression,
    is_quasi_strongly_solid,
    parse_expr,
    provably_equal,
    simplify,
    to_text,
)
from .graph import INF, Graph, complement, from_edge_list, link, radius
from .internal import (
    HRigidityReport,
    internal_graph,
    internal_sets_bruteforce,
    internal_sets_fast,
    internal_vertices,
    is_h_rigid,
)
from .isomorphism import are_isomorphic

__all__ = [
    "INF", "Graph", "from_edge_list", "link", "radius", "complement",
    "internal_vertices", "internal_graph", "internal_sets_fast", "internal_sets_bruteforce",
    "is_h_rigid", "HRigidityReport", "are_isomorphic",
    "simplify", "graph_to_expression", "is_quasi_strongly_solid", "amplify_fgf",
    "provably_equal", "parse_expr", "to_text",
    "distinguish", "audit", "classify_catalog", "Verdict", "Kind", "Basis",
]
