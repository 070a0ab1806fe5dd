import pytest

from snarkflow.families import (FamilyError, block_automorphism, block_indexing,
                                build_family, flower_snark, goldberg, petersen,
                                reduced_goldberg)
from snarkflow.flows import three_edge_color

from util import girth


@pytest.mark.parametrize("k,n,m", [(1, 24, 36), (2, 40, 60)])
def test_goldberg_counts(k, n, m):
    lg = goldberg(k)
    assert lg.graph.n == n and lg.graph.m == m
    assert lg.graph.is_cubic()
    assert lg.graph.is_bridgeless()
    assert not lg.graph.is_bipartite()


@pytest.mark.parametrize("k,n,m,hub", [(1, 22, 33, 3), (2, 36, 55, 5)])
def test_reduced_goldberg_counts(k, n, m, hub):
    lg = reduced_goldberg(k)
    assert lg.graph.n == n and lg.graph.m == m
    assert lg.graph.degrees[lg["h"]] == hub


def test_reduced_equals_contracted():
    lg = goldberg(1)
    hs = lg.graph.vertex_set([lg[f"h_{i}"] for i in range(3)])
    contracted, vmap = lg.graph.contract(hs)
    red = reduced_goldberg(1)
    # same counts and same degree profile; adjacency agrees under the label map
    assert (contracted.n, contracted.m) == (red.graph.n, red.graph.m)
    pairs_c = sorted(tuple(sorted((vmap[u], vmap[v]))) for u, v in lg.graph.edges
                     if vmap[u] != vmap[v])
    relabel = {}
    for v in range(lg.graph.n):
        name = lg.labels[v]
        relabel[vmap[v]] = red["h"] if name.startswith("h") else red[name]
    pairs_r = sorted(tuple(sorted((red.graph.edges[k]))) for k in range(red.graph.m))
    mapped = sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in pairs_c)
    assert mapped == pairs_r


@pytest.mark.parametrize("k,n,m", [(1, 12, 18), (2, 20, 30)])
def test_flower_counts(k, n, m):
    lg = flower_snark(k)
    assert lg.graph.n == n and lg.graph.m == m
    assert lg.graph.is_cubic()
    assert lg.graph.is_bridgeless()


def test_petersen_basics():
    lg = petersen()
    assert lg.graph.n == 10 and lg.graph.m == 15
    assert girth(lg.graph) == 5
    assert lg.graph.is_cubic() and lg.graph.is_bridgeless()
    assert three_edge_color(lg.graph) is None


def test_k_zero_rejected():
    for fam in (goldberg, reduced_goldberg, flower_snark):
        with pytest.raises(FamilyError):
            fam(0)


def test_block_indexing():
    lg = reduced_goldberg(1)
    bi = block_indexing(lg)
    assert len(bi.block(0)) == 7
    assert len(bi.extended(0)) == 11
    # blocks partition everything except the hub
    seen = set()
    for i in range(3):
        seen.update(bi.block(i))
    assert seen == set(range(lg.graph.n)) - {lg["h"]}
    # each block induces 8 edges
    for i in range(3):
        verts = set(bi.block(i))
        induced = [e for e in lg.graph.edges if e[0] in verts and e[1] in verts]
        assert len(induced) == 8


def test_block_automorphisms():
    lg = reduced_goldberg(1)
    rev = block_automorphism(lg, 0, "reverse")
    twi = block_automorphism(lg, 0, "twist")
    assert rev[lg["a_0"]] == lg["b_0"]
    assert twi[lg["a_0"]] == lg["g_0"]
    # involutions
    for perm in (rev, twi):
        assert all(perm[perm[v]] == v for v in perm)
    # automorphism property: block edge set preserved
    verts = set(rev)
    induced = {frozenset(e) for e in lg.graph.edges if e[0] in verts and e[1] in verts}
    for perm in (rev, twi):
        assert {frozenset((perm[u], perm[v])) for u, v in map(tuple, induced)} == induced
    # twist maps the 5-cycle a,b,c,d,e onto g,f,c,d,e setwise
    five1 = {lg[f"{c}_0"] for c in "abcde"}
    five2 = {lg[f"{c}_0"] for c in "gfcde"}
    assert {twi[v] for v in five1} == five2


def test_block_five_cycles_share_cde():
    lg = reduced_goldberg(2)
    five1 = [f"{c}_1" for c in "abcde"]
    five2 = [f"{c}_1" for c in "cdegf"]
    assert set(five1) & set(five2) == {"c_1", "d_1", "e_1"}
    # both are actual cycles in the graph
    for cyc in (five1, five2):
        idx = [lg[x] for x in cyc]
        edges = {frozenset(e) for e in lg.graph.edges}
        assert all(frozenset((idx[i], idx[(i + 1) % 5])) in edges for i in range(5))


def test_build_family_dispatch():
    assert build_family("petersen").graph.n == 10
    assert build_family("goldberg", 1).graph.n == 24
    with pytest.raises(FamilyError):
        build_family("nope", 1)
    with pytest.raises(FamilyError):
        build_family("goldberg")
