import json

import pytest
from hypothesis import given

from gfr.families import cycle, line
from gfr.graph import Graph
from gfr.io import (
    ParseError,
    graph_from_json,
    graph_to_json,
    parse_dot,
    parse_edge_list,
    parse_graph_text,
    to_dot,
    to_edge_list,
)

from conftest import graphs


def test_edge_list_with_comments_and_isolated_vertices():
    g = parse_edge_list("# a path plus an isolated vertex\nvertices: 1 2 3 9\n1 2\n2 3  # trailing\n\n")
    assert g.vertices == (1, 2, 3, 9)
    assert g.edges() == [(1, 2), (2, 3)]


def test_edge_list_string_labels():
    g = parse_edge_list("hub a\nhub b\n")
    assert g.vertices == ("a", "b", "hub")
    assert g.degree("hub") == 2


@pytest.mark.parametrize("text", ["", "   \n", "# only a comment\n"])
def test_empty_input_is_an_error(text):
    with pytest.raises(ParseError) as err:
        parse_edge_list(text)
    assert "no graph data" in str(err.value)


def test_self_loop_reports_position():
    with pytest.raises(ParseError) as err:
        parse_edge_list("1 2\n  3 3\n")
    assert (err.value.line, err.value.col) == (2, 3)


def test_wrong_arity_reports_position():
    with pytest.raises(ParseError) as err:
        parse_edge_list("1 2 3\n")
    assert (err.value.line, err.value.col) == (1, 5)


def test_dot_subset():
    text = """
    strict graph "G" {
      // defaults and attributes are ignored
      node [shape=circle]; rankdir=LR;
      a -- b -- c [color=red];
      c:n -- "d e";
      x;
      /* block
         comment */
    }
    """
    g = parse_dot(text)
    assert g.vertices == ("a", "b", "c", "d e", "x")
    assert g.edges() == [("a", "b"), ("b", "c"), ("c", "d e")]


def test_dot_numeric_ids_become_ints():
    assert parse_dot("graph { 1 -- 2; 2 -- 3 }") == line(3)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("digraph { a -> b }", "directed"),
        ("graph { a -> b }", "'->'"),
        ("graph { subgraph s { a } }", "subgraph"),
        ("graph { a -- a }", "self-loop"),
        ("graph { a -- b ", "end of input"),
    ],
)
def test_dot_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_dot(text)
    assert fragment in str(err.value)
    assert err.value.line >= 1 and err.value.col >= 1


def test_dot_error_position_on_later_line():
    with pytest.raises(ParseError) as err:
        parse_dot("graph {\n  a -- b;\n  b -> c;\n}")
    assert err.value.line == 3


def test_sniffing():
    assert parse_graph_text("graph { 1 -- 2 }") == parse_graph_text("1 2\n")


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


@given(graphs())
def test_dot_round_trip(g):
    assert parse_dot(to_dot(g)) == g


def test_dot_round_trip_awkward_labels():
    g = Graph.from_edge_list(["node", 'say "hi"', "a b", "x1"], [("node", "a b"), ('say "hi"', "x1")])
    assert parse_dot(to_dot(g)) == g


@given(graphs())
def test_json_round_trip(g):
    assert graph_from_json(json.loads(json.dumps(graph_to_json(g)))) == g


def test_json_shape():
    assert graph_to_json(cycle(3)) == {"vertices": [1, 2, 3], "edges": [[1, 2], [1, 3], [2, 3]]}
