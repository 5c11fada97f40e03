import json

import pytest
from hypothesis import given, strategies as st

from packpaint import families as fam
from packpaint.errors import ParseError
from packpaint.formats import (
    format_coloring,
    format_edge_list,
    format_graph_json,
    format_lists,
    format_spec,
    parse_coloring,
    parse_edge_list,
    parse_graph,
    parse_graph_json,
    parse_lists,
    parse_partial_coloring,
    parse_spec,
)
from packpaint.listcolor import ColorClass, ListAssignment, random_lists
from packpaint.solver import PackingSpec, solve

from conftest import graphs


def test_petersen_round_trip():
    p = fam.petersen().graph
    assert parse_edge_list(format_edge_list(p)) == p
    assert parse_graph_json(format_graph_json(p)).graph == p


def test_labels_survive_json():
    lg = fam.family_F1(1)
    back = parse_graph_json(format_graph_json(lg))
    assert back.graph == lg.graph and back.labels == lg.labels


@given(graphs(max_n=12))
def test_graph_round_trips(g):
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_graph(format_graph_json(g)).graph == g
    assert parse_graph(format_edge_list(g)).graph == g


@pytest.mark.parametrize("text,line", [
    ("3 2\n0 1\n1 1\n", 3),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 1\n0 5\n", 2),
    ("3 2\n0 1\n", 2),
    ("3\n", 1),
    ("3 1\n0 x\n", 2),
    ("", 1),
])
def test_edge_list_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_edge_list_comments_and_blanks():
    assert parse_edge_list("# triangle\n3 3\n\n0 1\n1 2 # chord\n0 2\n").m == 3


def test_json_errors():
    text = '{"n": 3,\n "edges": [[0, 1],\n [1, 1]]}'
    with pytest.raises(ParseError) as info:
        parse_graph_json(text)
    assert info.value.line == 3
    with pytest.raises(ParseError) as info:
        parse_graph_json('{"n": 3,\n "edges": [[0, 1],\n [1, 0]]}')
    assert info.value.line == 3
    with pytest.raises(ParseError):
        parse_graph_json('{"n": 3, "edges": [[0, 1]')
    with pytest.raises(ParseError):
        parse_graph_json('{"n": -1, "edges": []}')


def test_spec_round_trip():
    spec = parse_spec("1,1,2,2")
    assert spec == PackingSpec.ones_twos(2, 2)
    assert parse_spec(format_spec(spec)) == spec
    with pytest.raises(ParseError):
        parse_spec("1,0,2")


@given(st.lists(st.integers(1, 4), max_size=8))
def test_spec_round_trip_property(radii):
    spec = PackingSpec(tuple(sorted(radii)))
    assert parse_spec(format_spec(spec)) == spec
    assert parse_spec(str(spec)) == spec


def test_coloring_round_trip():
    p = fam.petersen().graph
    c = solve(p, PackingSpec.ones_twos(2, 3))
    text = format_coloring(c, 5)
    assert "classes" in json.loads(text)
    assert parse_coloring(text, 10).assignment == c.assignment
    with pytest.raises(ParseError):
        parse_coloring('{"classes": [[0, 1], [1]]}', 2)
    with pytest.raises(ParseError):
        parse_coloring('{"classes": [[0]]}', 2)
    assert parse_partial_coloring('{"classes": [[0], [2]]}', 3) == [0, None, 1]


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_lists_round_trip(g, rnd):
    lists = random_lists(g, 2, 3, rnd)
    assert parse_lists(format_lists(lists), g.n) == lists


def test_lists_with_string_colors():
    lists = ListAssignment((ColorClass(1, {"i", 9}), ColorClass(2, {101})), ({"i", 101}, {9}))
    assert parse_lists(format_lists(lists)) == lists


def test_list_errors():
    with pytest.raises(ParseError):
        parse_lists('{"classes": [{"radius": 1, "colors": [0]}], "lists": {"0": [5]}}')
    with pytest.raises(ParseError):
        parse_lists('{"classes": [{"radius": 0, "colors": [0]}], "lists": {}}')
    with pytest.raises(ParseError):
        parse_lists('{"classes": [], "lists": {"x": []}}')
