"""Symbolic graph-product factors and their rewrite calculus.

Expressions are immutable trees over

* ``R`` -- the hyperfinite II_1 factor (one per vertex),
* ``LF(s)`` -- the interpolated free group factor, ``s`` an exact rational > 1,
* ``T[...]`` / ``F[...]`` -- tensor and free products (children form a multiset,
  kept sorted in a canonical order),
* ``GP{...}`` -- an opaque graph product over a graph that neither splits as a
  disjoint union nor as a join,
* ``1`` -- the trivial factor, the graph product over the empty graph.

Rewrite rules used by :func:`simplify`:

=========  ===================================================================
UNIT       drop ``1`` children; an empty product becomes ``1``
FLATTEN    splice a child of the same product type into its parent
COLLAPSE   a product with a single child is that child
T1         ``T[R, R, ...]`` -> ``T[R, ...]``
F1         ``F[R x n, ...]`` -> ``F[LF(n), ...]`` for n >= 2
F2         ``F[LF(n), R, ...]`` -> ``F[LF(n + 1), ...]`` (integer n)
F3         ``F[LF(s), LF(t), ...]`` -> ``F[LF(s + t), ...]``
=========  ===================================================================

F3, and F2 with a non-integer parameter, rest on free-product additivity of
interpolated free group factors.  They are marked ``extension`` in traces and
are switched off by ``strict=True``.

:func:`provably_equal` adds the amplification move ``AMPLIFY``: inside a
tensor product, ``LF(s) (x) LF(t)`` becomes ``LF(1 + (s-1)/r) (x) LF(1 + (t-1) r)``
for any rational ``r > 0``.  It preserves the number of free-group tensor
factors and the product of ``s_i - 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, complement, component_masks, induced_by_mask, is_complete_mask, label_key


class DomainError(ValueError):
    pass


class ExprParseError(ValueError):
    def __init__(self, pos: int, message: str) -> None:
        super().__init__(f"at offset {pos}: {message}")
        self.pos = pos


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise DomainError("parameters must be exact rationals, not floats")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {x!r}") from exc


def amplify_fgf(s, r) -> Fraction:
    """Parameter of ``L(F_s)^t`` with ``r = t**2``: ``1 + (s - 1) / r``."""
    s, r = _rational(s), _rational(r)
    if s <= 1:
        raise DomainError(f"free group factor parameter must exceed 1, got {s}")
    if r <= 0:
        raise DomainError(f"amplification r = t^2 must be positive, got {r}")
    return 1 + (s - 1) / r


# -- expression nodes ----------------------------------------------------------


class Expr:
    """Base class of factor expressions."""

    __slots__ = ()

    def sort_key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other: Expr) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, eq=True)
class Unit(Expr):
    def sort_key(self) -> tuple:
        return (-1,)


@dataclass(frozen=True, eq=True)
class HyperfiniteR(Expr):
    def sort_key(self) -> tuple:
        return (0,)


@dataclass(frozen=True, eq=True)
class FGF(Expr):
    s: Fraction

    def __post_init__(self) -> None:
        s = _rational(self.s)
        if s <= 1:
            raise DomainError(f"LF(s) needs s > 1, got {s}")
        object.__setattr__(self, "s", s)

    def sort_key(self) -> tuple:
        return (1, self.s)


def _canonical(children) -> tuple:
    return tuple(sorted(children, key=lambda e: e.sort_key()))


@dataclass(frozen=True, eq=True)
class Tensor(Expr):
    children: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", _canonical(self.children))

    def sort_key(self) -> tuple:
        return (2, tuple(c.sort_key() for c in self.children))


@dataclass(frozen=True, eq=True)
class Free(Expr):
    children: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", _canonical(self.children))

    def sort_key(self) -> tuple:
        return (3, tuple(c.sort_key() for c in self.children))


def _graph_key(g: Graph) -> tuple:
    from .isomorphism import fingerprint

    fp = fingerprint(g)
    ecc = tuple((1, 0) if e == "inf" else (0, e) for e in fp[4])
    edges = tuple((label_key(u), label_key(v)) for u, v in g.edges())
    return (fp[:4], ecc, tuple(label_key(v) for v in g.vertices), edges)


@dataclass(frozen=True, eq=True)
class OpaqueGP(Expr):
    graph: Graph

    def sort_key(self) -> tuple:
        return (4, _graph_key(self.graph))


R = HyperfiniteR()
ONE = Unit()

PRODUCTS = (Tensor, Free)


def contains(e: Expr, kind: type) -> bool:
    if isinstance(e, kind):
        return True
    return isinstance(e, PRODUCTS) and any(contains(c, kind) for c in e.children)


# -- paths -----------------------------------------------------------------------


def subterm(e: Expr, path) -> Expr:
    for i in path:
        e = e.children[i]
    return e


def replace_at(e: Expr, path, new: Expr) -> Expr:
    if not path:
        return new
    i, rest = path[0], path[1:]
    kids = list(e.children)
    kids[i] = replace_at(kids[i], rest, new)
    return type(e)(tuple(kids))


# -- rules ---------------------------------------------------------------------------

EXTENSION_RULES = {"F3"}


def _is_int(s: Fraction) -> bool:
    return s.denominator == 1


def apply_rule(rule: str, node: Expr, params: dict) -> Expr:
    """Apply ``rule`` to ``node``; raise ``ValueError`` when it does not apply."""
    if rule == "AMPLIFY":
        if not isinstance(node, Tensor):
            raise ValueError("AMPLIFY needs a tensor product")
        s, t, r = (_rational(params[k]) for k in ("s", "t", "r"))
        kids = list(node.children)
        try:
            kids.remove(FGF(s))
            kids.remove(FGF(t))
        except ValueError:
            raise ValueError("AMPLIFY operands not present") from None
        kids += [FGF(amplify_fgf(s, r)), FGF(amplify_fgf(t, 1 / r))]
        return Tensor(tuple(kids))

    if not isinstance(node, PRODUCTS):
        raise ValueError(f"{rule} needs a product node")
    kids = list(node.children)
    kind = type(node)

    if rule == "UNIT":
        rest = [c for c in kids if c != ONE]
        if kids and len(rest) == len(kids):
            raise ValueError("no unit child and not empty")
        return kind(tuple(rest)) if rest else ONE
    if rule == "COLLAPSE":
        if len(kids) != 1:
            raise ValueError("COLLAPSE needs exactly one child")
        return kids[0]
    if rule == "FLATTEN":
        inner = [c for c in kids if isinstance(c, kind)]
        if not inner:
            raise ValueError("nothing to flatten")
        first = inner[0]
        kids.remove(first)
        return kind(tuple(kids) + first.children)
    if rule == "T1":
        n_r = kids.count(R)
        if kind is not Tensor or n_r < 2:
            raise ValueError("T1 needs a tensor with two R factors")
        return Tensor(tuple(c for c in kids if c != R) + (R,))
    if rule == "F1":
        n_r = kids.count(R)
        if kind is not Free or n_r < 2:
            raise ValueError("F1 needs a free product with two R factors")
        return Free(tuple(c for c in kids if c != R) + (FGF(n_r),))
    if rule == "F2":
        s = _rational(params["s"])
        if kind is not Free or kids.count(R) != 1 or FGF(s) not in kids:
            raise ValueError("F2 needs F[LF(s), R, ...] with a single R")
        kids.remove(R)
        kids.remove(FGF(s))
        return Free(tuple(kids) + (FGF(s + 1),))
    if rule == "F3":
        if kind is not Free:
            raise ValueError("F3 needs a free product")
        fgfs = [c for c in kids if isinstance(c, FGF)]
        if len(fgfs) < 2:
            raise ValueError("F3 needs two free group factors")
        return Free(tuple(c for c in kids if not isinstance(c, FGF)) + (FGF(sum(c.s for c in fgfs)),))
    raise ValueError(f"unknown rule {rule!r}")


def _is_extension(rule: str, params: dict) -> bool:
    if rule in EXTENSION_RULES:
        return True
    return rule == "F2" and not _is_int(_rational(params["s"]))


def _redex(node: Expr, strict: bool) -> tuple[str, dict] | None:
    """First rule applicable at the root of ``node`` (children not inspected)."""
    if not isinstance(node, PRODUCTS):
        return None
    kids = node.children
    kind = type(node)
    if not kids or ONE in kids:
        return "UNIT", {}
    if any(isinstance(c, kind) for c in kids):
        return "FLATTEN", {}
    if len(kids) == 1:
        return "COLLAPSE", {}
    n_r = kids.count(R)
    if kind is Tensor:
        return ("T1", {}) if n_r >= 2 else None
    if n_r >= 2:
        return "F1", {}
    fgfs = sorted(c.s for c in kids if isinstance(c, FGF))
    if n_r == 1:
        usable = [s for s in fgfs if _is_int(s) or not strict]
        if usable:
            return "F2", {"s": usable[0]}
    if len(fgfs) >= 2 and not strict:
        return "F3", {}
    return None


def _find(e: Expr, strict: bool, path: tuple = ()) -> tuple | None:
    if isinstance(e, PRODUCTS):
        for i, c in enumerate(e.children):
            hit = _find(c, strict, path + (i,))
            if hit is not None:
                return hit
    hit = _redex(e, strict)
    if hit is None:
        return None
    return path, hit[0], hit[1]


# -- traces ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    rule: str
    path: tuple
    before: Expr
    after: Expr
    params: dict = field(default_factory=dict, compare=False)

    @property
    def extension(self) -> bool:
        return self.rule != "AMPLIFY" and _is_extension(self.rule, self.params)

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "path": list(self.path),
            "before": to_text(self.before),
            "after": to_text(self.after),
            "params": {k: str(v) for k, v in self.params.items()},
            "extension": self.extension,
        }

    @classmethod
    def from_json(cls, data: dict) -> Step:
        return cls(
            data["rule"],
            tuple(data["path"]),
            parse_expr(data["before"]),
            parse_expr(data["after"]),
            {k: Fraction(v) for k, v in data.get("params", {}).items()},
        )


class ReplayError(ValueError):
    pass


@dataclass(frozen=True)
class RewriteTrace:
    """Ordered rewrite steps turning ``source`` into ``target``."""

    source: Expr
    target: Expr
    steps: tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def uses_extension(self) -> bool:
        return any(s.extension for s in self.steps)

    def replay(self) -> Expr:
        """Re-apply every step, re-checking each rule; raise ReplayError on mismatch."""
        cur = self.source
        for k, step in enumerate(self.steps):
            try:
                here = subterm(cur, step.path)
            except (AttributeError, IndexError):
                raise ReplayError(f"step {k}: bad path {step.path}") from None
            if here != step.before:
                raise ReplayError(f"step {k}: expected {step.before} at {step.path}, found {here}")
            try:
                redone = apply_rule(step.rule, here, step.params)
            except (ValueError, KeyError) as exc:
                raise ReplayError(f"step {k}: {step.rule} does not apply: {exc}") from None
            if redone != step.after:
                raise ReplayError(f"step {k}: {step.rule} gives {redone}, trace says {step.after}")
            cur = replace_at(cur, step.path, redone)
        if cur != self.target:
            raise ReplayError(f"replay ends at {cur}, expected {self.target}")
        return cur

    def validates(self) -> bool:
        try:
            self.replay()
        except ReplayError:
            return False
        return True

    def to_json(self) -> dict:
        return {
            "source": to_text(self.source),
            "target": to_text(self.target),
            "steps": [s.to_json() for s in self.steps],
        }

    @classmethod
    def from_json(cls, data: dict) -> RewriteTrace:
        return cls(
            parse_expr(data["source"]),
            parse_expr(data["target"]),
            tuple(Step.from_json(s) for s in data["steps"]),
        )


@dataclass(frozen=True)
class Simplified:
    expr: Expr
    trace: RewriteTrace

    def __iter__(self):
        return iter((self.expr, self.trace))


def simplify(e: Expr, strict: bool = False) -> Simplified:
    """Rewrite ``e`` to normal form, innermost redex first.

    Every rule removes at least one node, so this terminates; the result has
    no redex left, which makes ``simplify`` idempotent.
    """
    cur = e
    steps = []
    while True:
        hit = _find(cur, strict)
        if hit is None:
            break
        path, rule, params = hit
        before = subterm(cur, path)
        after = apply_rule(rule, before, params)
        steps.append(Step(rule, path, before, after, params))
        cur = replace_at(cur, path, after)
    return Simplified(cur, RewriteTrace(e, cur, tuple(steps)))


def is_normal(e: Expr, strict: bool = False) -> bool:
    return _find(e, strict) is None


# -- graphs to expressions ----------------------------------------------------------------


def decompose(g: Graph) -> Expr:
    """Split ``g`` along disjoint unions and joins, without simplifying."""
    n = len(g)
    if n == 0:
        return ONE
    if n == 1:
        return R
    comps = component_masks(g)
    if len(comps) > 1:
        return Free(tuple(decompose(induced_by_mask(g, m)) for m in comps))
    cocomps = component_masks(complement(g))
    if len(cocomps) > 1:
        return Tensor(tuple(decompose(induced_by_mask(g, m)) for m in cocomps))
    return OpaqueGP(g)


def graph_to_expression(g: Graph, strict: bool = False) -> Expr:
    """Normal-form expression for the graph product of hyperfinite factors over ``g``."""
    return simplify(decompose(g), strict).expr


def is_quasi_strongly_solid(g: Graph) -> bool:
    """True iff every connected component of ``g`` is a complete graph."""
    return all(is_complete_mask(g, m) for m in component_masks(g))


# -- certificates ------------------------------------------------------------------


def _lift(parent: Expr, child: Expr, steps: list[Step], out: list[Step]) -> Expr:
    """Replay child-relative ``steps`` inside ``parent``, appending absolute steps to ``out``."""
    for st in steps:
        # identical siblings are interchangeable, so the first match is as good as any
        idx = parent.children.index(child)
        path = (idx,) + st.path
        out.append(Step(st.rule, path, st.before, st.after, st.params))
        parent = replace_at(parent, path, st.after)
        child = replace_at(child, st.path, st.after)
    return parent


def _match(src: list, tgt: list, memo: dict) -> list[tuple[Expr, Expr, list]] | None:
    """Pair every ``src`` child with a distinct ``tgt`` child it certifiably equals."""
    if len(src) != len(tgt):
        return None
    used = [False] * len(tgt)
    chosen: list = []

    def go(k: int) -> bool:
        if k == len(src):
            return True
        for j, t in enumerate(tgt):
            if used[j]:
                continue
            sub = _certify(src[k], t, memo)
            if sub is None:
                continue
            used[j] = True
            chosen.append((src[k], t, sub))
            if go(k + 1):
                return True
            chosen.pop()
            used[j] = False
        return False

    return chosen if go(0) else None


def _amplification_chain(node: Tensor, target: list[Fraction]) -> list[Step] | None:
    cur = sorted(c.s for c in node.children if isinstance(c, FGF))
    target = sorted(target)
    if len(cur) != len(target):
        return None
    prod_src = prod_tgt = Fraction(1)
    for a, b in zip(cur, target):
        prod_src *= a - 1
        prod_tgt *= b - 1
    if prod_src != prod_tgt:
        return None
    steps = []
    for i in range(len(cur) - 1):
        if cur[i] == target[i]:
            continue
        s, t = cur[i], cur[i + 1]
        r = (s - 1) / (target[i] - 1)
        params = {"s": s, "t": t, "r": r}
        after = apply_rule("AMPLIFY", node, params)
        steps.append(Step("AMPLIFY", (), node, after, params))
        node = after
        cur[i], cur[i + 1] = amplify_fgf(s, r), amplify_fgf(t, 1 / r)
    return steps


def _certify(src: Expr, tgt: Expr, memo: dict) -> list[Step] | None:
    key = (src, tgt)
    if key in memo:
        return memo[key]
    result: list[Step] | None = None
    if src == tgt:
        result = []
    elif type(src) is type(tgt) and isinstance(src, PRODUCTS):
        if isinstance(src, Free):
            pairs = _match(list(src.children), list(tgt.children), memo)
            fgf_target: list[Fraction] | None = None
        else:
            rest_s = [c for c in src.children if not isinstance(c, FGF)]
            rest_t = [c for c in tgt.children if not isinstance(c, FGF)]
            pairs = _match(rest_s, rest_t, memo)
            fgf_target = [c.s for c in tgt.children if isinstance(c, FGF)]
        if pairs is not None:
            steps: list[Step] = []
            node = src
            for child, _, sub in pairs:
                node = _lift(node, child, sub, steps)
            if fgf_target is not None:
                chain = _amplification_chain(node, fgf_target)
                if chain is not None:
                    steps.extend(chain)
                    result = steps
            else:
                result = steps
    memo[key] = result
    return result


def provably_equal(e1: Expr, e2: Expr) -> RewriteTrace | None:
    """Certificate that ``e1`` and ``e2`` denote isomorphic factors, or None.

    None means "no certificate found", never "distinct".  Both arguments are
    expected in normal form.  Inside tensor products the free-group factors
    are compared by their count and the product of ``s_i - 1``; everything else
    must match structurally.
    """
    steps = _certify(e1, e2, {})
    if steps is None:
        return None
    trace = RewriteTrace(e1, e2, tuple(steps))
    trace.replay()
    return trace


# -- text form -----------------------------------------------------------------------

_PLAIN = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z|\d+\Z")


def _fmt_fraction(s: Fraction) -> str:
    return str(s.numerator) if s.denominator == 1 else f"{s.numerator}/{s.denominator}"


def _fmt_vertex(v) -> str:
    s = str(v)
    if isinstance(v, int) and not isinstance(v, bool) and v >= 0:
        return s
    if isinstance(v, str) and _PLAIN.match(s) and not s.isdigit():
        return s
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_text(e: Expr) -> str:
    if isinstance(e, Unit):
        return "1"
    if isinstance(e, HyperfiniteR):
        return "R"
    if isinstance(e, FGF):
        return f"LF({_fmt_fraction(e.s)})"
    if isinstance(e, Tensor):
        return "T[" + ", ".join(to_text(c) for c in e.children) + "]"
    if isinstance(e, Free):
        return "F[" + ", ".join(to_text(c) for c in e.children) + "]"
    if isinstance(e, OpaqueGP):
        g = e.graph
        touched = {v for edge in g.edges() for v in edge}
        items = [f"{_fmt_vertex(u)}-{_fmt_vertex(v)}" for u, v in g.edges()]
        items += [_fmt_vertex(v) for v in g.vertices if v not in touched]
        return "GP{" + ", ".join(items) + "}"
    raise TypeError(f"not an expression: {e!r}")


_EXPR_TOKEN = re.compile(
    r'\s*(?:(?P<str>"(?:[^"\\]|\\.)*")|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<p>[\[\]{}(),\-]))'
)


class _ExprParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _EXPR_TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                raise ExprParseError(pos, f"unexpected character {text[pos]!r}")
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", len(self.text))

    def take(self, value: str | None = None):
        tok = self.peek()
        if tok[0] == "eof" or (value is not None and tok[1] != value):
            raise ExprParseError(tok[2], f"expected {value or 'token'!r}, got {tok[1] or 'end of input'!r}")
        self.i += 1
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise ExprParseError(tok[2], f"trailing input {tok[1]!r}")
        return e

    def expr(self) -> Expr:
        kind, value, pos = self.take()
        if value == "R":
            return R
        if value == "1":
            return ONE
        if value == "LF":
            self.take("(")
            k, num, p = self.take()
            if k != "num":
                raise ExprParseError(p, "expected a rational parameter")
            self.take(")")
            try:
                return FGF(Fraction(num))
            except (DomainError, ZeroDivisionError) as exc:
                raise ExprParseError(p, str(exc)) from None
        if value in ("T", "F"):
            self.take("[")
            kids = []
            if self.peek()[1] != "]":
                kids.append(self.expr())
                while self.peek()[1] == ",":
                    self.take(",")
                    kids.append(self.expr())
            self.take("]")
            return (Tensor if value == "T" else Free)(tuple(kids))
        if value == "GP":
            return OpaqueGP(self.graph())
        raise ExprParseError(pos, f"unknown expression {value!r}")

    def vertex(self):
        kind, value, pos = self.take()
        if kind == "str":
            return bytes(value[1:-1], "utf-8").decode("unicode_escape")
        if kind == "num" and "/" not in value:
            return int(value)
        if kind == "name":
            return value
        raise ExprParseError(pos, f"expected a vertex label, got {value!r}")

    def graph(self) -> Graph:
        self.take("{")
        verts, edges = [], []
        if self.peek()[1] != "}":
            while True:
                pos = self.peek()[2]
                u = self.vertex()
                verts.append(u)
                if self.peek()[1] == "-":
                    self.take("-")
                    v = self.vertex()
                    if u == v:
                        raise ExprParseError(pos, f"self-loop at vertex {u!r}")
                    verts.append(v)
                    edges.append((u, v))
                if self.peek()[1] != ",":
                    break
                self.take(",")
        self.take("}")
        return Graph.from_edge_list(verts, edges)


def parse_expr(text: str) -> Expr:
    """Inverse of :func:`to_text`."""
    return _ExprParser(text).parse()


def expr_to_json(e: Expr) -> dict:
    if isinstance(e, Unit):
        return {"type": "1"}
    if isinstance(e, HyperfiniteR):
        return {"type": "R"}
    if isinstance(e, FGF):
        return {"type": "LF", "s": _fmt_fraction(e.s)}
    if isinstance(e, PRODUCTS):
        return {"type": "T" if isinstance(e, Tensor) else "F", "children": [expr_to_json(c) for c in e.children]}
    if isinstance(e, OpaqueGP):
        return {
            "type": "GP",
            "vertices": list(e.graph.vertices),
            "edges": [list(x) for x in e.graph.edges()],
        }
    raise TypeError(f"not an expression: {e!r}")


def expr_from_json(data: dict) -> Expr:
    t = data["type"]
    if t == "1":
        return ONE
    if t == "R":
        return R
    if t == "LF":
        return FGF(Fraction(data["s"]))
    if t in ("T", "F"):
        kids = tuple(expr_from_json(c) for c in data["children"])
        return Tensor(kids) if t == "T" else Free(kids)
    if t == "GP":
        return OpaqueGP(Graph.from_edge_list(data["vertices"], [tuple(x) for x in data["edges"]]))
    raise ValueError(f"unknown expression type {t!r}")
