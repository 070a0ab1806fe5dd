import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snarkflow.graphs import Graph
from snarkflow.graph6 import (Graph6Error, emit_graph6, parse_graph6,
                              graph_from_json, graph_to_json, load_graph)
from snarkflow.families import petersen, complete_graph


def nx_graph6(g: Graph) -> str:
    """Reference encoder (independent oracle)."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_reject_other_formats():
    for bad in (":Fa@x^", ";xxx", ""):
        with pytest.raises(Graph6Error):
            parse_graph6(bad)


def test_truncated_bit_field():
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # n=4 needs one body byte


def test_k4_reference():
    assert emit_graph6(complete_graph(4)) == "C~"
    g = parse_graph6("C~")
    assert g.n == 4 and g.m == 6


def test_single_vertex():
    assert emit_graph6(Graph(1, [])) == "@"


def test_header_stripped():
    g = parse_graph6(">>graph6<<C~")
    assert g.n == 4 and g.m == 6


def test_petersen_matches_reference():
    g = petersen().graph
    assert emit_graph6(g) == nx_graph6(g)
    back = parse_graph6(emit_graph6(g))
    assert sorted(map(tuple, map(sorted, back.edges))) == sorted(map(tuple, map(sorted, g.edges)))


def test_parallel_edges_rejected():
    g = Graph(2, [(0, 1), (0, 1)])
    with pytest.raises(Graph6Error):
        emit_graph6(g)


def test_large_n_multibyte():
    g = Graph(70, [(0, 69), (1, 2)])
    line = emit_graph6(g)
    back = parse_graph6(line)
    assert back.n == 70
    assert sorted(back.edges) == [(0, 69), (1, 2)]
    assert line == nx_graph6(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 13), st.data())
def test_roundtrip_random(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = Graph(n, chosen)
    line = emit_graph6(g)
    assert line == nx_graph6(g)
    back = parse_graph6(line)
    assert back.n == n
    assert sorted(map(tuple, map(sorted, back.edges))) == sorted(map(tuple, map(sorted, chosen)))
    assert emit_graph6(back) == line


def test_json_roundtrip_multigraph():
    g = Graph(3, [(0, 1), (0, 1), (1, 2)])
    text = graph_to_json(g)
    back = graph_from_json(text)
    assert back.n == 3 and back.edges == g.edges


def test_load_graph_dispatch():
    assert load_graph("C~").n == 4
    assert load_graph('{"n": 2, "edges": [[0, 1]]}').m == 1
