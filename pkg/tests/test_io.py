import pytest

from lambda_brooks import Graph, ParseError, complete_graph
from lambda_brooks.io import (
    canonical_json,
    detect_format,
    parse_dimacs,
    parse_json_graph,
    write_dimacs,
    write_dot,
    write_json_graph,
)


def test_dimacs_round_trip():
    g = complete_graph(4)
    text = write_dimacs(g)
    assert text.splitlines()[0] == "p edge 4 6"
    assert parse_dimacs(text) == g


def test_dimacs_tolerates_duplicates():
    g = parse_dimacs("c comment\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n")
    assert g.m == 2


def test_dimacs_rejects_loops_with_line_number():
    with pytest.raises(ParseError) as exc:
        parse_dimacs("p edge 3 1\ne 2 2\n")
    assert exc.value.line == 2


def test_dimacs_errors():
    with pytest.raises(ParseError):
        parse_dimacs("e 1 2\n")  # edge before problem line
    with pytest.raises(ParseError):
        parse_dimacs("p edge 2 1\ne 1 3\n")  # id out of range
    with pytest.raises(ParseError):
        parse_dimacs("p edge 2 0\nq nonsense\n")
    with pytest.raises(ParseError):
        parse_dimacs("")


def test_json_round_trip_and_canonical_bytes():
    g = Graph(4, [(3, 2), (0, 1)])
    text = write_json_graph(g)
    assert text == '{"edges":[[0,1],[2,3]],"n":4}\n'
    assert parse_json_graph(text) == g


def test_json_errors():
    with pytest.raises(ParseError):
        parse_json_graph("{not json")
    with pytest.raises(ParseError):
        parse_json_graph('{"n": 2}')
    with pytest.raises(ParseError):
        parse_json_graph('{"n": 2, "edges": [[0, 0]]}')  # loop
    with pytest.raises(ParseError):
        parse_json_graph('{"n": 2, "edges": [[0, 5]]}')


def test_detect_format():
    assert detect_format("x.col") == "dimacs"
    assert detect_format("x.json") == "json"
    with pytest.raises(Exception):
        detect_format("x.txt")


def test_canonical_json_sorts_keys():
    assert canonical_json({"b": 1, "a": 2}) == '{"a":2,"b":1}\n'


def test_dot_export():
    g = Graph(3, [(0, 1)])
    dot = write_dot(g)
    assert "0 -- 1;" in dot and "2;" in dot
