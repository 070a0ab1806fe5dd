import pytest

from snarkflow.graphs import Graph, VertexSet
from snarkflow.families import petersen, goldberg, reduced_goldberg

from util import prism


def test_loops_rejected():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_boundary_single_vertex_cubic():
    g = petersen().graph
    size, edges = g.boundary(g.vertex_set([0]))
    assert size == 3
    assert len(edges) == 3


def test_boundary_full_set_empty():
    g = petersen().graph
    size, edges = g.boundary(VertexSet.full(g.n))
    assert size == 0 and edges == []


def test_boundary_complement_symmetry():
    g = prism()
    s = g.vertex_set([0, 1, 4])
    assert g.boundary(s)[0] == g.boundary(s.complement())[0]


def test_boundary_goldberg_block_zero():
    lg = goldberg(1)
    block0 = [lg[f"{c}_0"] for c in "abcdefg"]
    size, edges = lg.graph.boundary(lg.graph.vertex_set(block0))
    assert size == 5
    names = set()
    for k in edges:
        u, v = lg.graph.edges[k]
        names.add(frozenset((lg.labels[u], lg.labels[v])))
    assert names == {
        frozenset(("b_2", "a_0")), frozenset(("b_0", "a_1")),
        frozenset(("g_2", "f_0")), frozenset(("g_0", "f_1")),
        frozenset(("d_0", "h_0")),
    }


def test_boundary_parity_matches_degree_sum():
    g = petersen().graph
    for mask in (0b1, 0b1010101, 0b1111100000):
        s = VertexSet(g.n, mask)
        size, _ = g.boundary(s)
        assert size % 2 == sum(g.degrees[v] for v in s) % 2


def test_components_within():
    g = petersen().graph
    assert g.components_within(g.vertex_set([])) == []
    assert len(g.components_within(g.vertex_set([0, 1]))) == 1  # adjacent
    assert len(g.components_within(g.vertex_set([0, 2]))) == 2  # not adjacent


def test_contract_single_vertex_is_identity_up_to_relabel():
    g = prism()
    h, vmap = g.contract(g.vertex_set([5]))
    assert h.n == g.n and h.m == g.m
    assert sorted(vmap) == list(range(6))


def test_contract_goldberg_hub():
    lg = goldberg(1)
    hs = lg.graph.vertex_set([lg[f"h_{i}"] for i in range(3)])
    h, vmap = lg.graph.contract(hs)
    assert h.n == 22
    assert h.m == 33  # 36 edges minus the 3 h_i h_{i+1} loops
    merged = vmap[lg["h_0"]]
    assert h.degrees[merged] == 3


def test_contract_triangle_edge_keeps_parallel():
    g = Graph(3, [(0, 1), (1, 2), (2, 0)])
    h, _ = g.contract(g.vertex_set([0, 1]))
    assert h.n == 2 and h.m == 2  # two parallel edges, loop dropped


def test_contract_map_total_and_surjective():
    g = petersen().graph
    h, vmap = g.contract(g.vertex_set([0, 1, 2]))
    assert len(vmap) == g.n
    assert set(vmap) == set(range(h.n))


def test_bridgeless():
    assert not Graph(2, [(0, 1)]).is_bridgeless()
    assert petersen().graph.is_bridgeless()
    assert goldberg(2).graph.is_bridgeless()
    # explicit bridge: two triangles joined by one edge
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
    assert not g.is_bridgeless()


def test_bipartite():
    from snarkflow.families import complete_bipartite, complete_graph
    assert complete_bipartite(3, 3).is_bipartite()
    assert not complete_graph(4).is_bipartite()
    assert not petersen().graph.is_bipartite()


def test_vertex_set_operations():
    a = VertexSet.of(5, [0, 2])
    b = VertexSet.of(5, [2, 3])
    assert list(a.union(b)) == [0, 2, 3]
    assert list(a.difference(b)) == [0]
    assert list(a.complement()) == [1, 3, 4]
    assert 2 in a and 1 not in a
    with pytest.raises(ValueError):
        a.union(VertexSet.of(6, [0]))


def test_reduced_goldberg_degree_profile():
    for k in (1, 2):
        lg = reduced_goldberg(k)
        degs = sorted(lg.graph.degrees)
        assert degs[-1] == 2 * k + 1
        assert all(d == 3 for d in degs[:-1])
