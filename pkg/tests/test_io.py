import pytest
from hypothesis import given, settings, strategies as st

from indturan.graph import Graph
from indturan.io import (
    ParseError,
    emit_edge_list,
    emit_graph,
    emit_graph6,
    parse_edge_list,
    parse_graph,
    parse_graph6,
)
from indturan.generators import are_isomorphic, cycle, prism
from conftest import CORPUS, random_graph


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=0, max_value=40))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_graph6_round_trip(g):
    data = emit_graph6(g)
    assert parse_graph6(data) == g
    # canonical-length inputs are a fixed point of parse-then-emit
    assert emit_graph6(parse_graph6(data)) == data


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_edge_list_round_trip_preserves_edges(g):
    back = parse_edge_list(emit_edge_list(g))
    assert sorted(back.edges()) == sorted(g.edges())


def test_graph6_round_trip_on_corpus():
    for name, g in CORPUS:
        assert parse_graph6(emit_graph6(g)) == g, name


def test_graph6_header_variant():
    g = random_graph(5, 0.5, 1)
    data = b">>graph6<<" + emit_graph6(g)
    assert parse_graph6(data) == g


def test_graph6_single_vertex():
    assert emit_graph6(Graph(1)) == b"@"
    assert parse_graph6(b"@").n == 1


def test_graph6_large_n_header():
    g = Graph(70)
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_malformed_inputs():
    with pytest.raises(ParseError):
        parse_graph6(b"")
    with pytest.raises(ParseError):
        parse_graph6(b"\x1f")  # header byte below range
    with pytest.raises(ParseError):
        parse_graph6(b"D")  # n=5 but no adjacency bytes
    data = bytearray(emit_graph6(cycle(5)))  # 10 adjacency bits, 2 padding
    data[-1] ^= 1  # flip the last padding bit
    with pytest.raises(ParseError):
        parse_graph6(bytes(data))


def test_parse_error_carries_offset():
    try:
        parse_graph6(b"D")
    except ParseError as exc:
        assert exc.offset == 1
    else:
        pytest.fail("expected ParseError")


def test_edge_list_spec_example():
    g = parse_edge_list(b"0 1\n1 2\n2 3\n3 0")
    assert are_isomorphic(g, cycle(4))


def test_edge_list_rejections():
    with pytest.raises(ParseError):
        parse_edge_list(b"0 0")  # self-loop
    with pytest.raises(ParseError):
        parse_edge_list(b"0 1 2")  # odd token count
    with pytest.raises(ParseError):
        parse_edge_list(b"0 1 1 0")  # duplicate
    with pytest.raises(ParseError):
        parse_edge_list(b"0 x")
    with pytest.raises(ParseError):
        parse_edge_list(b"-1 2")


def test_dispatch_and_unknown_format():
    g = prism(4)
    for fmt in ("graph6", "edge-list"):
        assert sorted(parse_graph(emit_graph(g, fmt), fmt).edges()) == sorted(
            g.edges()
        )
    with pytest.raises(ParseError):
        parse_graph(b"", "dot")
    with pytest.raises(ParseError):
        emit_graph(g, "dot")
