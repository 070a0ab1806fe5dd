"""Labelled generators for the graph families under study.

Vertex names follow the usual per-block schema ("a_0" ... "g_0", hub "h"),
and the name map is part of the public contract: the proof-checking layer
addresses block vertices by name.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .graphs import Graph, VertexSet

BLOCK_LETTERS = "abcdefg"

# Edges of one block, within the 7 letters a..g.
BLOCK_EDGES = [("a", "b"), ("a", "e"), ("b", "c"), ("c", "d"),
               ("d", "e"), ("c", "f"), ("e", "g"), ("f", "g")]


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]
    family: str
    k: int | None = None
    index: dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise FamilyError("label count must match vertex count")
        if len(set(self.labels)) != len(self.labels):
            raise FamilyError("labels must be unique")
        object.__setattr__(self, "index", {name: v for v, name in enumerate(self.labels)})

    def __getitem__(self, name: str) -> int:
        return self.index[name]

    @property
    def blocks(self) -> int:
        if self.k is None:
            raise FamilyError(f"family {self.family!r} has no block structure")
        return 2 * self.k + 1


@dataclass(frozen=True)
class BlockIndexing:
    """Block and extended-block vertex lists of a (reduced) Goldberg graph."""

    lg: LabeledGraph

    def block(self, i: int) -> list[int]:
        i %= self.lg.blocks
        return [self.lg[f"{c}_{i}"] for c in BLOCK_LETTERS]

    def extended(self, i: int) -> list[int]:
        """Block i plus b_{i-1}, g_{i-1}, a_{i+1}, f_{i+1}, in that order."""
        r = self.lg.blocks
        i %= r
        left, right = (i - 1) % r, (i + 1) % r
        return self.block(i) + [
            self.lg[f"b_{left}"], self.lg[f"g_{left}"],
            self.lg[f"a_{right}"], self.lg[f"f_{right}"],
        ]

    def block_set(self, i: int) -> VertexSet:
        return self.lg.graph.vertex_set(self.block(i))


def goldberg(k: int) -> LabeledGraph:
    """Goldberg snark G_{2k+1}: 8(2k+1) vertices, 12(2k+1) edges, cubic."""
    if k < 1:
        raise FamilyError("k must be >= 1")
    r = 2 * k + 1
    labels = [f"{c}_{i}" for i in range(r) for c in "abcdefgh"]
    idx = {name: v for v, name in enumerate(labels)}
    edges = []
    for i in range(r):
        j = (i + 1) % r
        for x, y in [(f"a_{i}", f"b_{i}"), (f"b_{i}", f"a_{j}"), (f"a_{i}", f"e_{i}"),
                     (f"b_{i}", f"c_{i}"), (f"c_{i}", f"d_{i}"), (f"d_{i}", f"e_{i}"),
                     (f"c_{i}", f"f_{i}"), (f"e_{i}", f"g_{i}"), (f"f_{i}", f"g_{i}"),
                     (f"g_{i}", f"f_{j}"), (f"d_{i}", f"h_{i}"), (f"h_{i}", f"h_{j}")]:
            edges.append((idx[x], idx[y]))
    return LabeledGraph(Graph(8 * r, edges), tuple(labels), "goldberg", k)


def reduced_goldberg(k: int) -> LabeledGraph:
    """Reduced Goldberg graph H_{2k+1}: all h_i merged into one hub h."""
    if k < 1:
        raise FamilyError("k must be >= 1")
    r = 2 * k + 1
    labels = [f"{c}_{i}" for i in range(r) for c in BLOCK_LETTERS] + ["h"]
    idx = {name: v for v, name in enumerate(labels)}
    edges = []
    for i in range(r):
        j = (i + 1) % r
        for x, y in [(f"a_{i}", f"b_{i}"), (f"b_{i}", f"a_{j}"), (f"a_{i}", f"e_{i}"),
                     (f"b_{i}", f"c_{i}"), (f"c_{i}", f"d_{i}"), (f"d_{i}", f"e_{i}"),
                     (f"c_{i}", f"f_{i}"), (f"e_{i}", f"g_{i}"), (f"f_{i}", f"g_{i}"),
                     (f"g_{i}", f"f_{j}"), (f"d_{i}", "h")]:
            edges.append((idx[x], idx[y]))
    return LabeledGraph(Graph(7 * r + 1, edges), tuple(labels), "reduced-goldberg", k)


def flower_snark(k: int) -> LabeledGraph:
    """Flower snark I_{2k+1}: star w_i(x_i,y_i,z_i), x-cycle, crossed y/z cycle."""
    if k < 1:
        raise FamilyError("k must be >= 1")
    r = 2 * k + 1
    labels = [f"{c}_{i}" for i in range(r) for c in "wxyz"]
    idx = {name: v for v, name in enumerate(labels)}
    edges = []
    for i in range(r):
        j = (i + 1) % r
        for x, y in [(f"w_{i}", f"x_{i}"), (f"w_{i}", f"y_{i}"), (f"w_{i}", f"z_{i}"),
                     (f"x_{i}", f"x_{j}"), (f"y_{i}", f"z_{j}"), (f"z_{i}", f"y_{j}")]:
            edges.append((idx[x], idx[y]))
    return LabeledGraph(Graph(4 * r, edges), tuple(labels), "flower", k)


def petersen() -> LabeledGraph:
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    spokes = [(i, i + 5) for i in range(5)]
    labels = tuple(f"u_{i}" for i in range(5)) + tuple(f"v_{i}" for i in range(5))
    return LabeledGraph(Graph(10, outer + inner + spokes), labels, "petersen")


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def block_indexing(lg: LabeledGraph) -> BlockIndexing:
    if lg.family not in ("goldberg", "reduced-goldberg"):
        raise FamilyError(f"no block structure for family {lg.family!r}")
    return BlockIndexing(lg)


def block_automorphism(lg: LabeledGraph, i: int, kind: str) -> dict[int, int]:
    """Automorphism of block i sending a_i to b_i ("reverse") or g_i ("twist").

    Found by brute force over the 7 block vertices and verified to preserve
    the induced edge set; a missing automorphism signals a construction bug.
    """
    if kind not in ("reverse", "twist"):
        raise FamilyError(f"unknown automorphism kind {kind!r}")
    bi = block_indexing(lg)
    verts = bi.block(i)
    pos = {v: p for p, v in enumerate(verts)}
    vset = set(verts)
    edges = {frozenset((pos[u], pos[v])) for u, v in lg.graph.edges
             if u in vset and v in vset}
    target = 1 if kind == "reverse" else 6  # position of b / g among a..g
    for perm in permutations(range(7)):
        if perm[0] != target:
            continue
        if all(frozenset((perm[u], perm[v])) in edges for u, v in map(tuple, edges)):
            return {verts[p]: verts[perm[p]] for p in range(7)}
    raise FamilyError(f"no {kind} automorphism found for block {i}")


FAMILY_BUILDERS = {
    "goldberg": goldberg,
    "reduced-goldberg": reduced_goldberg,
    "flower": flower_snark,
}


def build_family(family: str, k: int | None = None) -> LabeledGraph:
    if family == "petersen":
        return petersen()
    try:
        builder = FAMILY_BUILDERS[family]
    except KeyError:
        raise FamilyError(f"unknown family {family!r}") from None
    if k is None:
        raise FamilyError(f"family {family!r} needs a k parameter")
    return builder(k)
