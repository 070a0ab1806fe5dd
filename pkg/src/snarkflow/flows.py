"""Circular flow certificates and the integer flow existence search.

A circular p/q-flow is found (or exhaustively refuted) through its integer
reformulation: edge values x_e with q <= |x_e| <= p-q, conserved at every
vertex.  The search branches on cotree edges of a BFS spanning forest; tree
edges are forced through fundamental-cut conservation, and a pool of small
connected-set cuts provides additional unit propagation and interval pruning.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .families import LabeledGraph, block_indexing
from .graphs import Graph
from .rational import format_ratio, parse_ratio


class BridgeError(ValueError):
    """The graph has a cut edge, so no nowhere-zero flow exists at all."""


class FlowError(ValueError):
    pass


@dataclass(frozen=True)
class IntegerFlow:
    p: int
    q: int
    orientation: tuple[tuple[int, int], ...]  # (tail, head) per edge
    values: tuple[int, ...]                   # in [q, p-q]


@dataclass(frozen=True)
class FlowCertificate:
    r: Fraction
    orientation: tuple[tuple[int, int], ...]
    values: tuple[Fraction, ...]

    def to_json(self) -> str:
        return json.dumps({
            "r": format_ratio(self.r),
            "orientation": [[t, h] for t, h in self.orientation],
            "values": [format_ratio(v) for v in self.values],
        })

    @classmethod
    def from_json(cls, text: str) -> "FlowCertificate":
        doc = json.loads(text)
        return cls(
            r=parse_ratio(doc["r"]),
            orientation=tuple((int(t), int(h)) for t, h in doc["orientation"]),
            values=tuple(parse_ratio(v) for v in doc["values"]),
        )


@dataclass(frozen=True)
class Violation:
    kind: str          # "range" | "conservation" | "orientation" | "size"
    index: int         # edge index for range/orientation, vertex for conservation
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} violation at {self.detail}"


def verify_circular_flow(g: Graph, cert: FlowCertificate,
                         r: Fraction | None = None) -> Violation | None:
    """None when the certificate is a valid circular r-flow, else the first
    violation (edge out of [1, r-1], broken conservation, bad orientation)."""
    if r is None:
        r = cert.r
    if len(cert.orientation) != g.m or len(cert.values) != g.m:
        return Violation("size", -1, f"certificate covers {len(cert.values)} edges, graph has {g.m}")
    for k, (t, h) in enumerate(cert.orientation):
        u, v = g.edges[k]
        if {t, h} != {u, v}:
            return Violation("orientation", k, f"edge {k}: ({t},{h}) does not orient ({u},{v})")
    for k, val in enumerate(cert.values):
        if not (1 <= val <= r - 1):
            return Violation("range", k, f"edge {k}: value {format_ratio(val)} outside [1, {format_ratio(r - 1)}]")
    net = [Fraction(0)] * g.n
    for (t, h), val in zip(cert.orientation, cert.values):
        net[t] -= val
        net[h] += val
    for v in range(g.n):
        if net[v] != 0:
            return Violation("conservation", v, f"vertex {v}: net flow {format_ratio(net[v])}")
    return None


def _spanning_forest(g: Graph) -> tuple[list[int], list[int], list[int]]:
    """BFS forest from vertex 0 upward; returns (tree_edges, cotree_edges, parent_edge)."""
    parent_edge = [-1] * g.n
    seen = [False] * g.n
    tree = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w, k in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    parent_edge[w] = k
                    tree.append(k)
                    queue.append(w)
    tree_set = set(tree)
    cotree = [k for k in range(g.m) if k not in tree_set]
    return tree, cotree, parent_edge


def _cut_constraint(g: Graph, members: int) -> tuple[tuple[int, int], ...]:
    """(edge, sign) over the cut of the vertex-bitmask; sign +1 when the
    reference orientation u->v leaves the set."""
    cons = []
    for k, (u, v) in enumerate(g.edges):
        inu, inv = (members >> u) & 1, (members >> v) & 1
        if inu != inv:
            cons.append((k, 1 if inu else -1))
    return tuple(cons)


def _fundamental_cuts(g: Graph, tree: list[int]) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """For each tree edge, the cut of the component hanging below it."""
    tree_set = set(tree)
    cuts = []
    for t in tree:
        u0, _ = g.edges[t]
        # component of u0 in the forest minus edge t
        mask = 1 << u0
        stack = [u0]
        while stack:
            v = stack.pop()
            for w, k in g.adjacency[v]:
                if k != t and k in tree_set and not (mask >> w) & 1:
                    mask |= 1 << w
                    stack.append(w)
        cuts.append((t, _cut_constraint(g, mask)))
    return cuts


def _connected_subsets(g: Graph, max_size: int) -> list[int]:
    """Bitmasks of connected vertex sets with 2..max_size vertices.

    Rooted extension-set enumeration (only vertices above the root may join),
    so every set is produced exactly once.
    """
    nbr = g.neighbor_masks()
    out: list[int] = []

    def rec(sub: int, ext: int, seen: int, size: int):
        if size >= 2:
            out.append(sub)
        if size == max_size:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            new = nbr[w] & gt & ~seen
            rec(sub | low, ext | new, seen | new, size + 1)

    for root in range(g.n):
        gt = ~((1 << (root + 1)) - 1)
        start = nbr[root] & gt
        rec(1 << root, start, (1 << root) | start, 1)
    return out


def _flow_constraints(g: Graph, tree: list[int], pool_max: int) -> list[tuple[tuple[int, int], ...]]:
    cons: list[tuple[tuple[int, int], ...]] = []
    seen: set[frozenset[tuple[int, int]]] = set()

    def add(c: tuple[tuple[int, int], ...]):
        if not c:
            return
        key = frozenset(c)
        if key not in seen and frozenset((e, -s) for e, s in c) not in seen:
            seen.add(key)
            cons.append(c)

    for _, cut in _fundamental_cuts(g, tree):
        add(cut)
    for v in range(g.n):
        add(_cut_constraint(g, 1 << v))
    if pool_max >= 2:
        for mask in _connected_subsets(g, pool_max):
            cut = _cut_constraint(g, mask)
            if len(cut) <= 9:  # wide cuts prune nothing useful
                add(cut)
    return cons


def _branch_order(cotree: list[int],
                  fundamental: list[tuple[int, tuple[tuple[int, int], ...]]]) -> list[int]:
    """Cotree edges ordered so that small fundamental cuts complete first."""
    cotree_set = set(cotree)
    per_cut = []
    for t, cut in fundamental:
        c_edges = sorted(e for e, _ in cut if e in cotree_set)
        per_cut.append((len(c_edges), t, c_edges))
    order: list[int] = []
    placed = set()
    for _, _, c_edges in sorted(per_cut, key=lambda x: (x[0], x[1])):
        for e in c_edges:
            if e not in placed:
                placed.add(e)
                order.append(e)
    for e in cotree:
        if e not in placed:
            placed.add(e)
            order.append(e)
    return order


def find_integer_flow(g: Graph, p: int, q: int,
                      pool_max: int = 2, node_limit: int = 0) -> IntegerFlow | None:
    """An integer flow with values in [q, p-q], or None (exhaustive certainty).

    Deterministic: the first assignment in the fixed search order is returned,
    which is the least one in the documented candidate/edge ordering.
    """
    if q < 1 or math.gcd(p, q) != 1 or p <= 2 * q:
        raise FlowError(f"need gcd(p,q)=1 and p > 2q >= 2, got p={p} q={q}")
    if not g.is_bridgeless():
        raise BridgeError("graph has a bridge; no nowhere-zero flow exists")
    if g.m == 0:
        return IntegerFlow(p, q, (), ())
    tree, cotree, _ = _spanning_forest(g)
    fundamental = _fundamental_cuts(g, tree)
    constraints = _flow_constraints(g, tree, pool_max)
    order = _branch_order(cotree, fundamental)
    values, _nodes = _kernels.flow_search(g.m, q, p - q, order, constraints, node_limit)
    if values is None:
        return None
    orientation = []
    mags = []
    for k, (u, v) in enumerate(g.edges):
        x = values[k]
        orientation.append((u, v) if x > 0 else (v, u))
        mags.append(abs(x))
    flow = IntegerFlow(p, q, tuple(orientation), tuple(mags))
    cert = integer_to_circular(flow)
    bad = verify_circular_flow(g, cert)
    if bad is not None:
        raise FlowError(f"internal error: search produced an invalid flow ({bad})")
    return flow


def integer_to_circular(f: IntegerFlow) -> FlowCertificate:
    return FlowCertificate(
        r=Fraction(f.p, f.q),
        orientation=f.orientation,
        values=tuple(Fraction(v, f.q) for v in f.values),
    )


def flow_candidate_ladder(cap: int) -> list[Fraction]:
    """All reduced fractions in (2, 6] with denominator <= cap, ascending."""
    vals = {Fraction(p, q) for q in range(1, cap + 1)
            for p in range(2 * q + 1, 6 * q + 1)}
    return sorted(vals)


def phi_via_flows(g: Graph, denominator_cap: int | None = None,
                  pool_max: int = 2) -> tuple[Fraction, FlowCertificate]:
    """Least r = p/q (q <= cap) admitting a circular r-flow, with certificate.

    Binary search over the candidate ladder; flow existence is monotone in r.
    """
    if not g.is_bridgeless():
        raise BridgeError("graph has a bridge; circular flow number undefined")
    cap = denominator_cap if denominator_cap is not None else max(g.n, 1)
    ladder = flow_candidate_ladder(cap)
    found: dict[Fraction, IntegerFlow | None] = {}

    def test(r: Fraction) -> bool:
        if r not in found:
            found[r] = find_integer_flow(g, r.numerator, r.denominator, pool_max)
        return found[r] is not None

    lo, hi = 0, len(ladder) - 1
    if not test(ladder[hi]):
        raise FlowError("no flow at r = 6; input is not bridgeless or solver is broken")
    while lo < hi:
        mid = (lo + hi) // 2
        if test(ladder[mid]):
            hi = mid
        else:
            lo = mid + 1
    r = ladder[hi]
    flow = found[r]
    assert flow is not None
    return r, integer_to_circular(flow)


def three_edge_color(g: Graph) -> list[int] | None:
    """A proper 3-edge-colouring (colours 1..3 per edge) or exhaustive None."""
    if not g.is_cubic():
        raise FlowError("3-edge-colouring check expects a cubic graph")
    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    return _kernels.color3_search(g.n, g.m, eu, ev)


def is_snark_like(g: Graph) -> bool:
    """Bridgeless cubic and not 3-edge-colourable."""
    return g.is_cubic() and g.is_bridgeless() and three_edge_color(g) is None


def _enumerate_proper_colorings(n: int, edges: list[tuple[int, int]]):
    """Yield every proper 3-edge-colouring of the given (small) graph."""
    m = len(edges)
    incident: list[list[int]] = [[] for _ in range(n)]
    for k, (u, v) in enumerate(edges):
        incident[u].append(k)
        incident[v].append(k)
    colors = [0] * m

    def ok(k: int, c: int) -> bool:
        u, v = edges[k]
        for e in incident[u]:
            if e != k and colors[e] == c:
                return False
        for e in incident[v]:
            if e != k and colors[e] == c:
                return False
        return True

    def rec(k: int):
        if k == m:
            yield tuple(colors)
            return
        for c in (1, 2, 3):
            if ok(k, c):
                colors[k] = c
                yield from rec(k + 1)
                colors[k] = 0

    yield from rec(0)


def edge_pair_parity(g: Graph, vertices: list[int],
                     left_pair: tuple[tuple[int, int], tuple[int, int]],
                     right_pair: tuple[tuple[int, int], tuple[int, int]]) -> bool:
    """Over every proper 3-edge-colouring of the subgraph induced by
    ``vertices``: colours agree on the left pair iff they differ on the right
    pair.  Vertices of degree < 3 in the subgraph are simply unconstrained."""
    vset = set(vertices)
    sub_edges = []
    pos = {}
    for k, (u, v) in enumerate(g.edges):
        if u in vset and v in vset:
            pos[frozenset((u, v))] = len(sub_edges)
            sub_edges.append((u, v))
    relabel = {v: i for i, v in enumerate(sorted(vset))}
    sub = [(relabel[u], relabel[v]) for u, v in sub_edges]
    try:
        l1, l2 = pos[frozenset(left_pair[0])], pos[frozenset(left_pair[1])]
        r1, r2 = pos[frozenset(right_pair[0])], pos[frozenset(right_pair[1])]
    except KeyError as exc:
        raise FlowError(f"interface edge missing from the induced subgraph: {exc}") from exc
    saw_any = False
    for coloring in _enumerate_proper_colorings(len(vset), sub):
        saw_any = True
        left_eq = coloring[l1] == coloring[l2]
        right_eq = coloring[r1] == coloring[r2]
        if left_eq == right_eq:
            return False
    if not saw_any:
        raise FlowError("induced subgraph admits no proper 3-edge-colouring")
    return True


def extended_block_parity(lg: LabeledGraph, i: int) -> bool:
    """The interface-colour parity property of extended block i, checked by
    exhaustive enumeration of its proper 3-edge-colourings."""
    bi = block_indexing(lg)
    r = lg.blocks
    left, right = (i - 1) % r, (i + 1) % r
    verts = bi.extended(i)
    lp = ((lg[f"b_{left}"], lg[f"a_{i % r}"]), (lg[f"g_{left}"], lg[f"f_{i % r}"]))
    rp = ((lg[f"b_{i % r}"], lg[f"a_{right}"]), (lg[f"g_{i % r}"], lg[f"f_{right}"]))
    return edge_pair_parity(lg.graph, verts, lp, rp)
