"""Text formats for graphs: a plain edge list and a small undirected DOT subset.

Edge-list format::

    # comment
    vertices: 1 2 3 4
    1 2
    2 3

The ``vertices:`` line is optional and declares isolated vertices.  Tokens that
look like integers become ``int`` labels, everything else stays a string.

DOT subset: ``[strict] graph [NAME] { ... }`` with ``a -- b -- c;`` edge
chains, bare identifiers for isolated vertices, and attribute lists,
``node``/``edge``/``graph`` defaults and ``key=value`` statements ignored.
"""

from __future__ import annotations

import re

from .graph import Graph, GraphError, Vertex


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str) -> None:
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


_INT_RE = re.compile(r"[+-]?\d+\Z")
_PLAIN_ID = re.compile(r"[A-Za-z_0-9.]+\Z")


def parse_label(token: str) -> Vertex:
    return int(token) if _INT_RE.match(token) else token


def _build(verts: list, edges: list) -> Graph:
    # self-loops are caught with positions while scanning
    try:
        return Graph.from_edge_list(verts, edges)
    except GraphError as exc:  # pragma: no cover
        raise ParseError(1, 1, str(exc)) from None


# -- edge list ---------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    verts: list = []
    edges: list = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        seen_data = True
        stripped = line.lstrip()
        col0 = len(line) - len(stripped) + 1
        if stripped.startswith("vertices:"):
            if verts or edges:
                raise ParseError(lineno, col0, "'vertices:' must be the first data line")
            verts.extend(parse_label(t) for t in stripped[len("vertices:"):].split())
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if len(tokens) != 2:
            col = tokens[2][1] if len(tokens) > 2 else col0
            raise ParseError(lineno, col, f"expected 'u v', got {len(tokens)} token(s)")
        (a, ca), (b, _) = tokens
        u, v = parse_label(a), parse_label(b)
        if u == v:
            raise ParseError(lineno, ca, f"self-loop at vertex {u!r}")
        verts.extend((u, v))
        edges.append((u, v))
    if not seen_data:
        raise ParseError(1, 1, "no graph data")
    return _build(verts, edges)


def _fmt_label(v: Vertex) -> str:
    s = str(v)
    if not s or any(c.isspace() for c in s) or "#" in s:
        raise ValueError(f"label {v!r} cannot be written in edge-list format")
    return s


def to_edge_list(g: Graph) -> str:
    lines = ["vertices: " + " ".join(_fmt_label(v) for v in g.vertices)]
    lines.extend(f"{_fmt_label(u)} {_fmt_label(v)}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- DOT subset --------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*|\#[^\n]*|/\*.*?\*/)
  | (?P<edgeop>--|->)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<id>[A-Za-z_\x80-￿][A-Za-z_0-9\x80-￿]*|-?(?:\.\d+|\d+(?:\.\d*)?))
  | (?P<punct>[{}\[\];,=:])
    """,
    re.VERBOSE | re.DOTALL,
)


def _tokenize(text: str) -> list[tuple[str, str, int, int]]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(line, col, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            tokens.append((kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + value.rfind("\n") + 1
        pos = m.end()
    return tokens


class _DotParser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0
        self.verts: list = []
        self.edges: list = []

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else ("", "", 1, 0)
            return ParseError(last[2], last[3] + len(last[1]), message)
        return ParseError(tok[2], tok[3], message)

    def next(self):
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value:
            self.i -= 1
            raise self.error(f"expected {value!r}, got {tok[1]!r}")
        return tok

    def accept(self, value: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[1] == value:
            self.i += 1
            return True
        return False

    def ident(self) -> Vertex:
        kind, value, _, _ = tok = self.next()
        if kind == "string":
            return bytes(value[1:-1], "utf-8").decode("unicode_escape")
        if kind == "id":
            return parse_label(value)
        self.i -= 1
        raise self.error(f"expected identifier, got {tok[1]!r}")

    def skip_attrs(self) -> None:
        while self.accept("["):
            depth = 1
            while depth:
                tok = self.next()
                depth += {"[": 1, "]": -1}.get(tok[1], 0)

    def parse(self) -> Graph:
        if not self.tokens:
            raise ParseError(1, 1, "no graph data")
        self.accept("strict")
        tok = self.peek()
        if tok is not None and tok[1] == "digraph":
            raise self.error("directed graphs are not supported")
        self.expect("graph")
        if self.peek() is not None and self.peek()[1] != "{":
            self.ident()
        self.expect("{")
        while not self.accept("}"):
            self.statement()
        if self.peek() is not None:
            raise self.error("trailing input after graph body")
        return _build(self.verts, self.edges)

    def statement(self) -> None:
        if self.accept(";") or self.accept(","):
            return
        tok = self.peek()
        if tok is not None and tok[1] in ("node", "edge", "graph"):
            self.i += 1
            self.skip_attrs()
            return
        if tok is not None and tok[1] == "subgraph":
            raise self.error("subgraphs are not supported")
        _, _, line, col = self.peek() or ("", "", 1, 1)
        first = self.ident()
        self.port()
        if self.accept("="):
            self.ident()  # graph attribute assignment
            return
        chain = [(first, line, col)]
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "edgeop":
                break
            if tok[1] == "->":
                raise self.error("directed edge '->' in undirected graph")
            self.i += 1
            _, _, line, col = self.peek() or ("", "", tok[2], tok[3])
            chain.append((self.ident(), line, col))
            self.port()
        self.skip_attrs()
        self.verts.extend(v for v, _, _ in chain)
        for (u, _, _), (v, line, col) in zip(chain, chain[1:]):
            if u == v:
                raise ParseError(line, col, f"self-loop at vertex {u!r}")
            self.edges.append((u, v))

    def port(self) -> None:
        if self.accept(":"):
            self.ident()
            if self.accept(":"):
                self.ident()


def parse_dot(text: str) -> Graph:
    return _DotParser(text).parse()


def _dot_id(v: Vertex) -> str:
    s = str(v)
    if isinstance(v, int) or (_PLAIN_ID.match(s) and not s[0].isdigit() and s not in _DOT_KEYWORDS):
        return s
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


_DOT_KEYWORDS = {"graph", "digraph", "node", "edge", "strict", "subgraph"}


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {_dot_id(v)};" for v in g.vertices)
    lines.extend(f"  {_dot_id(u)} -- {_dot_id(v)};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def looks_like_dot(text: str) -> bool:
    body = re.sub(r"//[^\n]*|/\*.*?\*/", "", text, flags=re.DOTALL).lstrip()
    return bool(re.match(r"(strict\s+)?(di)?graph\b", body, flags=re.IGNORECASE))


def parse_graph_text(text: str) -> Graph:
    """Parse either supported format, sniffing DOT by its ``graph`` header."""
    return parse_dot(text) if looks_like_dot(text) else parse_edge_list(text)


# -- JSON ----------------------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges()]}


def graph_from_json(data: dict) -> Graph:
    return Graph.from_edge_list(data["vertices"], [tuple(e) for e in data["edges"]])
