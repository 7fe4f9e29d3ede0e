"""Command-line front end: ``gfr analyze | distinguish | simplify | generate | verify``.

Graph sources are ``family:<tag>:<params>`` (e.g. ``family:line:5``,
``family:kbipartite:3:3``, ``family:tree:12:7``), ``file:<path>`` (edge list
or DOT, sniffed) or ``-`` for stdin.

Exit codes: 0 success (whatever the verdict), 1 property counterexample,
2 unreadable input or bad arguments, 3 internal consistency failure (fast
path vs oracle, or the radius cross-check), 4 whitelist mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .distinguish import InconsistencyError, distinguish
from .factors import (
    DomainError,
    ExprParseError,
    graph_to_expression,
    is_quasi_strongly_solid,
    parse_expr,
    simplify,
    to_text,
    decompose,
    expr_to_json,
)
from .families import BadParam, FamilySpec
from .graph import Graph, GraphError, format_extnat, label_key
from .internal import TooLarge, internal_graph, is_h_rigid
from .io import ParseError, graph_to_json, parse_graph_text, to_dot, to_edge_list
from .verify import SUITES, default_jobs, run_suite

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_INCONSISTENT, EXIT_WHITELIST = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def load_graph(source: str, stdin=None) -> Graph:
    try:
        if source.startswith("family:"):
            return FamilySpec.parse(source[len("family:"):]).build()
        if source == "-":
            return parse_graph_text((stdin or sys.stdin).read())
        if source.startswith("file:"):
            path = source[len("file:"):]
            try:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"{path}: {exc.strerror}") from None
            try:
                return parse_graph_text(text)
            except ParseError as exc:
                raise InputError(f"{path}: {exc}") from None
        raise InputError(f"unrecognised graph source {source!r} (use family:..., file:... or -)")
    except (ParseError, BadParam, GraphError) as exc:
        raise InputError(str(exc)) from None


def _is_graph_source(arg: str) -> bool:
    return arg == "-" or arg.startswith(("family:", "file:"))


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _fmt_set(vs) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vs, key=label_key)) + "}"


# -- analyze ------------------------------------------------------------------------


def cmd_analyze(args, out) -> int:
    g = load_graph(args.graph)
    try:
        rep = is_h_rigid(g, oracle=args.oracle, force=args.force)
    except TooLarge as exc:
        raise InputError(f"{exc} (use --force)") from None
    int_g = internal_graph(g)
    expr = graph_to_expression(g)
    qss = is_quasi_strongly_solid(g)
    if args.json:
        data = rep.to_json()
        data.update(
            schema=1,
            graph=graph_to_json(g),
            link=[[v, sorted(g.neighbors(v), key=label_key)] for v in g.vertices],
            int_edges=[list(e) for e in int_g.edges()],
            quasi_strongly_solid=qss,
            expression=to_text(expr),
        )
        print(_dump(data), file=out)
    else:
        print(f"graph: {len(g)} vertices, {g.num_edges()} edges, connected: {_yn(rep.connected)}", file=out)
        print("link table:", file=out)
        for v in g.vertices:
            print(f"  {v}: {' '.join(str(w) for w in g.neighbors(v))}", file=out)
        print(f"internal vertices: {' '.join(str(v) for v in rep.int_vertices) or '(none)'}", file=out)
        print(f"internal graph edges: {' '.join(f'{u}-{v}' for u, v in int_g.edges()) or '(none)'}", file=out)
        print(f"internal graph well defined: {_yn(rep.int_graph_well_defined)}", file=out)
        print(f"H-rigid: {_yn(rep.h_rigid)}", file=out)
        print(f"  (1) locally finite: {_yn(rep.locally_finite)}", file=out)
        w2 = "" if rep.internal_set_witness is None else f"  witness {_fmt_set(rep.internal_set_witness)}"
        print(f"  (2) internal sets are vertices: {_yn(rep.internal_sets_are_vertices)}{w2}", file=out)
        w3 = rep.link_condition_witness
        w3s = "" if w3 is None else f"  witness {w3.vertex} with path {'-'.join(map(str, w3.path))}"
        print(f"  (3) link condition: {_yn(rep.link_condition)}{w3s}", file=out)
        print(f"radius: {format_extnat(rep.radius)}", file=out)
        print(f"quasi-strongly solid: {_yn(qss)}", file=out)
        print(f"factor: {to_text(expr)}", file=out)
        for note in rep.notes:
            print(f"note: {note}", file=out)
        if args.oracle:
            print(f"oracle agreement: {_yn(bool(rep.oracle_agrees))}", file=out)
    if args.oracle and not rep.oracle_agrees:
        print("error: fast path disagrees with brute-force oracle", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


# -- distinguish ----------------------------------------------------------------------


def cmd_distinguish(args, out) -> int:
    g1, g2 = load_graph(args.graph1), load_graph(args.graph2)
    try:
        v = distinguish(g1, g2, strict=args.strict)
    except InconsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.json:
        print(_dump(v.to_json()), file=out)
        return EXIT_OK
    print(f"verdict: {v.kind.value}", file=out)
    print(f"basis: {v.basis.value}", file=out)
    ev = v.evidence
    if "mapping" in ev:
        print("mapping: " + ", ".join(f"{a}->{b}" for a, b in ev["mapping"]), file=out)
    if "certificate" in ev:
        print(f"expressions: {ev['expr1']}  vs  {ev['expr2']}", file=out)
        for step in ev["certificate"]["steps"]:
            params = ", ".join(f"{k}={x}" for k, x in step["params"].items())
            print(f"  {step['rule']}({params}): {step['before']} -> {step['after']}", file=out)
    if "int1" in ev:
        for k in ("int1", "int2"):
            edges = " ".join(f"{a}-{b}" for a, b in ev[k]["edges"]) or "(no edges)"
            print(f"{k}: vertices {ev[k]['vertices']} edges {edges}", file=out)
        print(f"non-isomorphism: {ev['non_isomorphism']['method']}", file=out)
    if "radii" in ev:
        print(f"radii: {ev['radii'][0]} {ev['radii'][1]}", file=out)
    for key in ("reason", "failed_hypotheses"):
        if key in ev:
            print(f"{key.replace('_', ' ')}: {ev[key]}", file=out)
    for note in ev.get("notes", []):
        print(f"note: {note}", file=out)
    return EXIT_OK


# -- simplify --------------------------------------------------------------------------


def cmd_simplify(args, out) -> int:
    if _is_graph_source(args.source):
        source = decompose(load_graph(args.source))
    else:
        try:
            source = parse_expr(args.source)
        except (ExprParseError, DomainError, GraphError) as exc:
            raise InputError(f"cannot parse expression: {exc}") from None
    result = simplify(source, strict=args.strict)
    if args.json:
        data = {"schema": 1, "source": to_text(source), "result": to_text(result.expr), "expr": expr_to_json(result.expr)}
        if args.trace:
            data["trace"] = result.trace.to_json()
        print(_dump(data), file=out)
        return EXIT_OK
    if args.trace:
        for step in result.trace:
            ext = "  [extension]" if step.extension else ""
            print(f"{step.rule} at {list(step.path)}: {to_text(step.before)} -> {to_text(step.after)}{ext}", file=out)
    print(to_text(result.expr), file=out)
    return EXIT_OK


# -- generate ----------------------------------------------------------------------------


def cmd_generate(args, out) -> int:
    g = load_graph(args.graph)
    if args.format == "dot":
        out.write(to_dot(g))
    elif args.format == "json":
        print(_dump({"schema": 1, **graph_to_json(g)}), file=out)
    else:
        out.write(to_edge_list(g))
    return EXIT_OK


# -- verify -------------------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    result = run_suite(args.suite, samples=args.samples, seed=args.seed, max_n=args.max_n, jobs=args.jobs)
    if args.json:
        print(_dump(result.to_json()), file=out)
    else:
        status = "pass" if result.passed else "FAIL"
        print(f"suite {result.suite}: {status} ({result.checked} checked, {len(result.failures)} counterexamples)", file=out)
        for note in result.notes:
            print(f"note: {note}", file=out)
        for msg in result.whitelist_mismatch:
            print(f"whitelist mismatch: {msg}", file=out)
        for f in result.failures:
            print(f.render(), file=out)
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gfr", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"gfr {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="internal vertices, H-rigidity, radius")
    a.add_argument("graph")
    a.add_argument("--oracle", action="store_true", help="cross-check fast paths by brute force")
    a.add_argument("--force", action="store_true", help="allow brute force above 20 vertices")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("distinguish", help="compare the factors of two graphs")
    d.add_argument("graph1")
    d.add_argument("graph2")
    d.add_argument("--strict", action="store_true", help="disable the additivity extension rules")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_distinguish)

    s = sub.add_parser("simplify", help="normal form of a graph's factor or of an expression")
    s.add_argument("source", help="graph source or expression such as 'F[R,R,R]'")
    s.add_argument("--strict", action="store_true", help="disable the additivity extension rules")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_simplify)

    g = sub.add_parser("generate", help="write a graph in edge-list, DOT or JSON form")
    g.add_argument("graph")
    g.add_argument("--format", choices=("edges", "dot", "json"), default="edges")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="run a property sweep")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: $GFR_JOBS or 1)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", None) is None and args.command == "verify":
        args.jobs = default_jobs()
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
