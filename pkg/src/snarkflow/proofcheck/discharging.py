"""Charge redistribution over block types and its audits.

Cut edges carry unit charge to the block of their S-endpoint (the hub
absorbs charges on its own edges), selected types shed fixed amounts to a
neighbour, and pass-through types forward whatever a neighbour sends.  The
audits check the published receive-bound tables, the exclusion claims, and
the final per-block bounds over all compatible short rings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from ..graphs import VertexSet
from .blocktypes import (FREE, IN, OUT, BlockType, CatalogError, block_type_of,
                         load_catalog)
from .configurations import BLOCK_EDGES

HALF = Fraction(1, 2)
AMOUNTS = {"2": Fraction(2), "5/2": Fraction(5, 2)}

# indices in the 14-vertex pair union: X's block 0..6, Y's block 7..13
_PAIR_EDGES = (
    [(u, v) for u, v in BLOCK_EDGES]
    + [(u + 7, v + 7) for u, v in BLOCK_EDGES]
    + [(1, 7), (6, 12)]            # b_X - a_Y and g_X - f_Y
)
# outer attachment points: vertex -> (owner side constraint index)
_X_BL, _X_GL, _Y_AR, _Y_FR = 14, 15, 16, 17
_OUTER_EDGES = [(0, _X_BL), (5, _X_GL), (8, _Y_AR), (13, _Y_FR)]


def _pair_neighbors():
    nbr = [[] for _ in range(18)]
    for u, v in _PAIR_EDGES + _OUTER_EDGES:
        nbr[u].append(v)
        nbr[v].append(u)
    return nbr


_PAIR_NBR = _pair_neighbors()


def _connected_subsets_pair(max_size: int) -> list[tuple[int, ...]]:
    """Connected subsets of the 14 core vertices of the pair union."""
    adj = [0] * 14
    for u, v in _PAIR_EDGES:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    out = []

    def rec(sub, ext, seen, size):
        if size >= 2:
            out.append(sub)
        if size == max_size:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            new = adj[w] & gt & ~seen
            rec(sub | low, ext | new, seen | new, size + 1)

    for root in range(14):
        gt = ~((1 << (root + 1)) - 1)
        start = adj[root] & gt
        rec(1 << root, start, (1 << root) | start, 1)
    return out


_PAIR_SUBSETS = None


def _pair_subsets():
    global _PAIR_SUBSETS
    if _PAIR_SUBSETS is None:
        _PAIR_SUBSETS = _connected_subsets_pair(7)
    return _PAIR_SUBSETS


def _tri(c: str) -> bool | None:
    return True if c == IN else False if c == OUT else None


class PairChecker:
    """Compatibility of (left, right) ordered type pairs, via the local rules
    evaluated on the merged two-block pattern."""

    def __init__(self, catalog: list[BlockType] | None = None):
        self.catalog = catalog if catalog is not None else load_catalog()
        self.by_id = {t.id: t for t in self.catalog}
        self._cache: dict[tuple[str, str], bool] = {}

    def compatible(self, left: BlockType, right: BlockType) -> bool:
        key = (left.id, right.id)
        if key not in self._cache:
            self._cache[key] = self._check(left, right)
        return self._cache[key]

    def _check(self, x: BlockType, y: BlockType) -> bool:
        # shared-vertex membership constraints must agree
        for cons, mem in ((x.outside[2], y.membership[0]),   # a+ of X is a of Y
                          (x.outside[3], y.membership[5]),   # f+ of X is f of Y
                          (y.outside[0], x.membership[1]),   # b- of Y is b of X
                          (y.outside[1], x.membership[6])):  # g- of Y is g of X
            t = _tri(cons)
            if t is not None and t != mem:
                return False
        col = list(x.coloring) + list(y.coloring)
        mem = list(x.membership) + list(y.membership)
        ext = [_tri(x.outside[0]), _tri(x.outside[1]),
               _tri(y.outside[2]), _tri(y.outside[3])]
        return _union_ok(col, mem, ext)

    def edge_charge_right(self, x: BlockType, y: BlockType) -> int:
        """Step-1 charge crossing the X|Y interface into Y."""
        c = 0
        if y.membership[0] and not x.membership[1]:
            c += 1
        if y.membership[5] and not x.membership[6]:
            c += 1
        return c

    def edge_charge_left(self, x: BlockType, y: BlockType) -> int:
        """Step-1 charge crossing the X|Y interface into X."""
        c = 0
        if x.membership[1] and not y.membership[0]:
            c += 1
        if x.membership[6] and not y.membership[5]:
            c += 1
        return c

    def right_boundary(self, x: BlockType, y: BlockType) -> bool:
        """Right-boundary test for Y with left neighbour X; the path clause
        is evaluated inside Y's block (the ring audits use the global
        version instead)."""
        bm, gm = x.membership[1], x.membership[6]
        am, fm = y.membership[0], y.membership[5]
        if not bm and am and gm:
            return True
        if not gm and bm and fm:
            return True
        if not bm and not gm and am and fm:
            return True
        if not am or not fm:
            starts = [i for i, good in ((0, not am), (5, not fm)) if good]
            targets = {i for i, good in ((1, not y.membership[1]),
                                         (6, not y.membership[6])) if good}
            if not _block_vs_path(y.membership, starts, targets):
                return True
        return False

    def left_boundary(self, x: BlockType, y: BlockType) -> bool:
        """Left-boundary test for X with right neighbour Y (mirror image)."""
        rx = self.by_id[y.reversed_id]
        ry = self.by_id[x.reversed_id]
        return self.right_boundary(rx, ry)


def _block_vs_path(mem, starts, targets) -> bool:
    """Is some start connected to some target through non-members of the
    block's own seven vertices?"""
    out = {i for i in range(7) if not mem[i]}
    starts = [s for s in starts if s in out]
    targets = {t for t in targets if t in out}
    if not starts or not targets:
        return False
    seen = set(starts)
    stack = list(starts)
    adj = {i: [] for i in range(7)}
    for u, v in BLOCK_EDGES:
        adj[u].append(v)
        adj[v].append(u)
    while stack:
        v = stack.pop()
        if v in targets:
            return True
        for w in adj[v]:
            if w in out and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def _union_ok(col: list[int], mem: list[bool], ext: list[bool | None]) -> bool:
    """Colour and structure rules on a merged two-block pattern.

    col/mem cover the 14 core vertices; ext holds the memberships of the four
    outer vertices (None = unknown).  The hub is in S and adjacent to both d's.
    """
    inside: list[bool | None] = list(mem) + ext
    # crossing edges: white end in S, black end outside (known colours only)
    for u, v in _PAIR_EDGES + _OUTER_EDGES:
        iu = inside[u]
        iv = inside[v]
        if iu is None or iv is None or iu == iv:
            continue
        s_end, o_end = (u, v) if iu else (v, u)
        if s_end < 14 and col[s_end] < 0:
            return False
        if o_end < 14 and col[o_end] > 0:
            return False
    for d in (3, 10):
        if not inside[d] and col[d] > 0:
            return False  # crossing hub edge with a white outside end
    # small-set ratio scans: any connected core set certifying ratio >= 9/2
    # on either sign contradicts the ambient assumption
    for sub in _pair_subsets():
        size = sub.bit_count()
        bsum = 0
        edges_in = 0
        msk = sub
        while msk:
            low = msk & -msk
            bsum += col[low.bit_length() - 1]
            msk ^= low
        for u, v in _PAIR_EDGES:
            if (sub >> u) & 1 and (sub >> v) & 1:
                edges_in += 1
        cut = 3 * size - 2 * edges_in
        for signed in (bsum, -bsum):
            if cut - signed <= 0 or Fraction(cut + signed, cut - signed) + 1 >= Fraction(9, 2):
                return False
    if not _union_confinement_ok(inside):
        return False
    if not _union_swaps_ok(col, inside):
        return False
    return True


def _union_components(inside, want: bool):
    verts = {v for v in range(18) if inside[v] == want}
    comps = []
    left = set(verts)
    while left:
        start = left.pop()
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in _PAIR_NBR[v]:
                if w in left:
                    left.remove(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _union_confinement_ok(inside) -> bool:
    free_adjacent = set()
    for v in range(14, 18):
        if inside[v] is None:
            for w in _PAIR_NBR[v]:
                free_adjacent.add(w)
    # S side: must reach a hub edge, an in-S outer vertex, or a free outer
    for comp in _union_components(inside, True):
        if 3 in comp or 10 in comp:
            continue
        if any(v >= 14 for v in comp):
            continue
        if comp & free_adjacent:
            continue
        return False
    # complement side: must reach an outer vertex or a free attachment
    for comp in _union_components(inside, False):
        if any(v >= 14 for v in comp):
            continue
        if comp & free_adjacent:
            continue
        return False
    return True


def _r1_union_ok(col, inside) -> bool:
    for u, v in _PAIR_EDGES + _OUTER_EDGES:
        iu, iv = inside[u], inside[v]
        if iu is None or iv is None or iu == iv:
            continue
        s_end, o_end = (u, v) if iu else (v, u)
        if s_end < 14 and col[s_end] < 0:
            return False
        if o_end < 14 and col[o_end] > 0:
            return False
    for d in (3, 10):  # hub edges: the hub is in S
        if not inside[d] and col[d] > 0:
            return False
    return True


def _side_subsets(inside, side: bool, cap: int = 12):
    """Connected subsets of core vertices whose membership equals side."""
    allowed = 0
    for v in range(14):
        if inside[v] == side:
            allowed |= 1 << v
    adj = [0] * 14
    for u, v in _PAIR_EDGES:
        if (allowed >> u) & 1 and (allowed >> v) & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    out = []

    def rec(sub, ext, seen, size):
        out.append(sub)
        if size == cap:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            new = adj[w] & gt & ~seen
            rec(sub | low, ext | new, seen | new, size + 1)

    for root in range(14):
        if not (allowed >> root) & 1:
            continue
        gt = ~((1 << (root + 1)) - 1)
        start = adj[root] & gt
        rec(1 << root, start, (1 << root) | start, 1)
    return out


def _union_swaps_ok(col, inside) -> bool:
    """Swap sets inside the merged pattern: one-sided connected sets with
    balanced colours whose boundary splits evenly must not contradict the
    choice of S.  Sets may span both blocks (the exclusion claims need up to
    ten vertices)."""
    for side in (False, True):
        for sub in _side_subsets(inside, side):
            bsum = 0
            msk = sub
            while msk:
                low = msk & -msk
                bsum += col[low.bit_length() - 1]
                msk ^= low
            if bsum != 0:
                continue
            crossing = 0
            to_s = 0
            unknown = False
            msk = sub
            while msk and not unknown:
                low = msk & -msk
                v = low.bit_length() - 1
                msk ^= low
                for w in _PAIR_NBR[v]:
                    if w < 14 and (sub >> w) & 1:
                        continue
                    iw = inside[w]
                    if iw is None:
                        unknown = True
                        break
                    crossing += 1
                    if iw:
                        to_s += 1
                if v in (3, 10):  # hub edge leaves T and lands in S
                    crossing += 1
                    to_s += 1
            if unknown or crossing == 0 or 2 * to_s != crossing:
                continue
            if not side:
                return False  # S u T keeps the ratio and is larger
            shrunk = list(inside)
            msk = sub
            while msk:
                low = msk & -msk
                shrunk[low.bit_length() - 1] = False
                msk ^= low
            if not _r1_union_ok(col, shrunk) or not _union_confinement_ok(shrunk):
                return False
    return True


# ---------------------------------------------------------------------------
# charge bookkeeping

@dataclass
class ChargeLedger:
    blocks: list[Fraction]
    h_bucket: Fraction
    boundary_size: int
    steps: list[dict] = field(default_factory=list)
    cycling: list[dict] = field(default_factory=list)

    def conservation_ok(self) -> bool:
        total = sum(self.blocks, Fraction(0)) + self.h_bucket
        total += sum(Fraction(p["amount"]) for p in self.cycling)
        return total == self.boundary_size

    def log(self, name: str):
        self.steps.append({
            "step": name,
            "blocks": [str(c) for c in self.blocks],
            "h_bucket": str(self.h_bucket),
        })


def _run_steps(ledger: ChargeLedger, types: list[BlockType], incoming=None):
    """Steps 2 and 3 on a cyclic arrangement of classified blocks.

    incoming, when given, is a per-block dict tracking what arrived from
    which side in which step ("step2_left" means: arrived in step 2 moving
    rightward, i.e. from the left side).
    """
    ledger.log("step1")
    parcels: list[tuple[int, int, Fraction]] = []  # (position, direction, amount)
    for i, t in enumerate(types):
        for direction, amount in t.step2:
            amt = AMOUNTS[amount]
            ledger.blocks[i] -= amt
            parcels.append((i, 1 if direction == "right" else -1, amt))
    _settle(ledger, types, parcels, incoming, "step2")
    ledger.log("step2")
    parcels = []
    for i, t in enumerate(types):
        if t.step3 == "sender":
            ledger.blocks[i] -= 1
            parcels.append((i, 1, HALF))
            parcels.append((i, -1, HALF))
    _settle(ledger, types, parcels, incoming, "step3")
    ledger.log("step3")


def _settle(ledger: ChargeLedger, types: list[BlockType], parcels, incoming=None, step=""):
    n = len(types)
    for start, direction, amount in parcels:
        pos = (start + direction) % n
        hops = 1
        while types[pos].step3 == "forwarder":
            pos = (pos + direction) % n
            hops += 1
            if hops > n:
                ledger.cycling.append({
                    "from": start, "direction": direction, "amount": str(amount)})
                break
        else:
            ledger.blocks[pos] += amount
            if incoming is not None:
                side = "left" if direction == 1 else "right"
                incoming[pos][f"{step}_{side}"] += amount


# ---------------------------------------------------------------------------
# boundaries on a concrete reduced Goldberg graph

def detect_boundaries(lg, s: VertexSet) -> tuple[list[int], list[int]]:
    """Blocks that are left (resp. right) boundaries for the given set."""
    from ..families import block_indexing
    g = lg.graph
    if lg["h"] not in s:
        raise CatalogError("boundary detection expects the hub inside S")
    bi = block_indexing(lg)
    r = lg.blocks
    comp_id = _vs_components(g, s)

    def connected_out(x: int, y: int) -> bool:
        return comp_id[x] is not None and comp_id[x] == comp_id[y]

    lefts, rights = [], []
    for i in range(r):
        nxt = (i + 1) % r
        prv = (i - 1) % r
        a_i, b_i, f_i, g_i = (lg[f"a_{i}"], lg[f"b_{i}"], lg[f"f_{i}"], lg[f"g_{i}"])
        a_n, f_n = lg[f"a_{nxt}"], lg[f"f_{nxt}"]
        b_p, g_p = lg[f"b_{prv}"], lg[f"g_{prv}"]
        in_s = lambda v: v in s
        # left boundary: the complement region ends here on its left
        left = (
            (not in_s(a_n) and in_s(b_i) and in_s(f_n))
            or (not in_s(f_n) and in_s(a_n) and in_s(g_i))
            or (not in_s(a_n) and not in_s(f_n) and in_s(b_i) and in_s(g_i))
        )
        if not left and (not in_s(b_i) or not in_s(g_i)):
            starts = [v for v in (b_i, g_i) if not in_s(v)]
            targets = [v for v in (a_i, f_i) if not in_s(v)]
            if not any(connected_out(x, y) for x in starts for y in targets):
                left = True
        if left:
            lefts.append(i)
        right = (
            (not in_s(b_p) and in_s(a_i) and in_s(g_p))
            or (not in_s(g_p) and in_s(b_p) and in_s(f_i))
            or (not in_s(b_p) and not in_s(g_p) and in_s(a_i) and in_s(f_i))
        )
        if not right and (not in_s(a_i) or not in_s(f_i)):
            starts = [v for v in (a_i, f_i) if not in_s(v)]
            targets = [v for v in (b_i, g_i) if not in_s(v)]
            if not any(connected_out(x, y) for x in starts for y in targets):
                right = True
        if right:
            rights.append(i)
    return lefts, rights


def _vs_components(g, s: VertexSet):
    comp_id: list[int | None] = [None] * g.n
    cid = 0
    for comp in g.components_within(s.complement()):
        for v in comp:
            comp_id[v] = cid
        cid += 1
    return comp_id


# ---------------------------------------------------------------------------
# concrete and abstract discharging

def discharge(lg, b, s: VertexSet, catalog: list[BlockType] | None = None) -> tuple[ChargeLedger, list[BlockType]]:
    """Classify every block of the labelled graph and run the three steps."""
    from ..families import block_indexing
    g = lg.graph
    if catalog is None:
        catalog = load_catalog()
    bi = block_indexing(lg)
    r = lg.blocks
    types = [block_type_of(lg, b, s, i, catalog)[0] for i in range(r)]
    block_of = [None] * g.n
    for i in range(r):
        for v in bi.block(i):
            block_of[v] = i
    hub = lg["h"]
    ledger = ChargeLedger([Fraction(0)] * r, Fraction(0), 0)
    size, crossing = g.boundary(s)
    ledger.boundary_size = size
    for k in crossing:
        u, v = g.edges[k]
        inside = u if u in s else v
        if inside == hub:
            ledger.h_bucket += 1
        else:
            ledger.blocks[block_of[inside]] += 1
    _run_steps(ledger, types)
    return ledger, types


def discharge_abstract(type_ids: list[str] | list[BlockType],
                       checker: PairChecker | None = None,
                       with_incoming: bool = False):
    """Synthesize the boundary charges of a cyclic type sequence and run the
    discharging steps; incompatible neighbours raise CatalogError."""
    if checker is None:
        checker = PairChecker()
    types = [t if isinstance(t, BlockType) else checker.by_id[t] for t in type_ids]
    n = len(types)
    if n < 3 or n % 2 == 0:
        raise CatalogError("cyclic sequences must have odd length >= 3")
    for i in range(n):
        x, y = types[i], types[(i + 1) % n]
        if not checker.compatible(x, y):
            raise CatalogError(f"incompatible neighbours at {i}: {x.id} then {y.id}")
    ledger = ChargeLedger([Fraction(0)] * n, Fraction(0), 0)
    incoming = [{k: Fraction(0) for k in
                 ("step1_left", "step1_right", "step2_left", "step2_right",
                  "step3_left", "step3_right")} for _ in range(n)]
    total = 0
    for i, t in enumerate(types):
        nxt = types[(i + 1) % n]
        for u, v in BLOCK_EDGES:
            if t.membership[u] != t.membership[v]:
                ledger.blocks[i] += 1
                total += 1
        if not t.membership[3]:  # d outside S: hub edge crosses
            ledger.h_bucket += 1
            total += 1
        # interface edges to the right neighbour
        if t.membership[1] != nxt.membership[0]:
            if t.membership[1]:
                ledger.blocks[i] += 1
                incoming[i]["step1_right"] += 1
            else:
                ledger.blocks[(i + 1) % n] += 1
                incoming[(i + 1) % n]["step1_left"] += 1
            total += 1
        if t.membership[6] != nxt.membership[5]:
            if t.membership[6]:
                ledger.blocks[i] += 1
                incoming[i]["step1_right"] += 1
            else:
                ledger.blocks[(i + 1) % n] += 1
                incoming[(i + 1) % n]["step1_left"] += 1
            total += 1
    ledger.boundary_size = total
    _run_steps(ledger, types, incoming)
    if with_incoming:
        return ledger, types, incoming
    return ledger


def ring_boundaries(types: list[BlockType]) -> tuple[list[int], list[int]]:
    """Exact left/right boundary blocks of a compatible cyclic sequence,
    with the path clause evaluated over the whole ring."""
    n = len(types)
    verts = [(i, v) for i in range(n) for v in range(7)]
    index = {x: k for k, x in enumerate(verts)}
    adj: dict[int, list[int]] = {k: [] for k in range(len(verts))}

    def link(x, y):
        adj[index[x]].append(index[y])
        adj[index[y]].append(index[x])

    for i in range(n):
        for u, v in BLOCK_EDGES:
            link((i, u), (i, v))
        link((i, 1), ((i + 1) % n, 0))
        link((i, 6), ((i + 1) % n, 5))
    outside = {index[(i, v)] for i in range(n) for v in range(7)
               if not types[i].membership[v]}
    comp_id: dict[int, int] = {}
    cid = 0
    for k in sorted(outside):
        if k in comp_id:
            continue
        stack = [k]
        comp_id[k] = cid
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in outside and y not in comp_id:
                    comp_id[y] = cid
                    stack.append(y)
        cid += 1

    def connected_out(x, y):
        return index[x] in comp_id and index[y] in comp_id and comp_id[index[x]] == comp_id[index[y]]

    lefts, rights = [], []
    for i in range(n):
        t = types[i]
        nxt = types[(i + 1) % n]
        prv = types[(i - 1) % n]
        left = (
            (not nxt.membership[0] and t.membership[1] and nxt.membership[5])
            or (not nxt.membership[5] and nxt.membership[0] and t.membership[6])
            or (not nxt.membership[0] and not nxt.membership[5]
                and t.membership[1] and t.membership[6])
        )
        if not left and (not t.membership[1] or not t.membership[6]):
            starts = [(i, v) for v in (1, 6) if not t.membership[v]]
            targets = [(i, v) for v in (0, 5) if not t.membership[v]]
            if not any(connected_out(x, y) for x in starts for y in targets):
                left = True
        if left:
            lefts.append(i)
        right = (
            (not prv.membership[1] and t.membership[0] and prv.membership[6])
            or (not prv.membership[6] and prv.membership[1] and t.membership[5])
            or (not prv.membership[1] and not prv.membership[6]
                and t.membership[0] and t.membership[5])
        )
        if not right and (not t.membership[0] or not t.membership[5]):
            starts = [(i, v) for v in (0, 5) if not t.membership[v]]
            targets = [(i, v) for v in (1, 6) if not t.membership[v]]
            if not any(connected_out(x, y) for x in starts for y in targets):
                right = True
        if right:
            rights.append(i)
    return lefts, rights


# ---------------------------------------------------------------------------
# receive-bound audit (the pairwise claim tables)

_CL02 = {2: Fraction(7, 2), 1: Fraction(5, 2), 0: HALF}
_CL02B = {2: Fraction(3), 1: Fraction(2), 0: HALF}
_CL03 = {2: Fraction(0), 1: Fraction(3, 2), 0: HALF}


def _left_key(t: BlockType) -> int:
    return int(t.membership[0]) + int(t.membership[5])   # |{a, f} in S|


def _right_key(t: BlockType) -> int:
    return int(t.membership[1]) + int(t.membership[6])   # |{b, g} in S|


def _step2_amount(t: BlockType, direction: str) -> Fraction:
    return sum((AMOUNTS[a] for d, a in t.step2 if d == direction), Fraction(0))


def _flow_maxima(checker: PairChecker):
    """Fixpoint of the maximal charge a type can emit / receive per side.

    out_right(X) = step2 right + 1/2 (step-3 sender) + forwarded in_left(X);
    in_left(Y) = max over compatible left partners X of interface edge charge
    plus out_right(X); mirrored for the other side.
    """
    cat = checker.catalog
    in_left = {t.id: Fraction(0) for t in cat}
    in_right = {t.id: Fraction(0) for t in cat}

    def out_right(x: BlockType) -> Fraction:
        amt = _step2_amount(x, "right")
        if x.step3 == "sender":
            amt += HALF
        elif x.step3 == "forwarder":
            amt += in_left[x.id]
        return amt

    def out_left(x: BlockType) -> Fraction:
        amt = _step2_amount(x, "left")
        if x.step3 == "sender":
            amt += HALF
        elif x.step3 == "forwarder":
            amt += in_right[x.id]
        return amt

    for _ in range(2 * len(cat)):
        changed = False
        for y in cat:
            best_l = Fraction(0)
            best_r = Fraction(0)
            for x in cat:
                if checker.compatible(x, y):
                    got = checker.edge_charge_right(x, y) + out_right(x)
                    if got > best_l:
                        best_l = got
                if checker.compatible(y, x):
                    got = checker.edge_charge_left(y, x) + out_left(x)
                    if got > best_r:
                        best_r = got
            if best_l != in_left[y.id] or best_r != in_right[y.id]:
                in_left[y.id], in_right[y.id] = best_l, best_r
                changed = True
        if not changed:
            break
    else:
        raise CatalogError("charge fixpoint failed to converge (forwarding cycle with gain)")
    return in_left, in_right, out_right, out_left


def ring_audit(lengths=(3, 5), checker: PairChecker | None = None) -> dict:
    """Exhaustive audit over all compatible cyclic type sequences of the
    given lengths: final charge bounds, conservation, forwarding cycles and
    the receive-bound claims evaluated with exact ring-level boundaries."""
    if checker is None:
        checker = PairChecker()
    failures: list[dict] = []
    ring_counts: dict[int, int] = {}
    for n in lengths:
        rings = enumerate_rings(n, checker)
        ring_counts[n] = len(rings)
        for seq in rings:
            ledger, types, incoming = discharge_abstract(seq, checker, with_incoming=True)
            if ledger.cycling:
                failures.append({"claim": "forwarding-cycle", "ring": seq,
                                 "detail": ledger.cycling})
                continue
            if not ledger.conservation_ok():
                failures.append({"claim": "conservation", "ring": seq})
            lefts, rights = ring_boundaries(types)
            for i, t in enumerate(types):
                is_l, is_r = i in lefts, i in rights
                allowed = Fraction(8 if (is_l and is_r) else 5 if (is_l or is_r) else 2)
                if ledger.blocks[i] > allowed:
                    failures.append({"claim": "final-charge", "ring": seq, "block": i,
                                     "type": t.id, "got": str(ledger.blocks[i]),
                                     "allowed": str(allowed)})
                inc = incoming[i]
                from_left = inc["step1_left"] + inc["step2_left"] + inc["step3_left"]
                from_right = inc["step1_right"] + inc["step2_right"] + inc["step3_right"]
                kl, kr = _left_key(t), _right_key(t)
                if from_left > _CL02[kl]:
                    failures.append({"claim": "cl02", "ring": seq, "block": i,
                                     "type": t.id, "side": "left", "got": str(from_left)})
                if from_right > _CL02[kr]:
                    failures.append({"claim": "cl02", "ring": seq, "block": i,
                                     "type": t.id, "side": "right", "got": str(from_right)})
                left_nbr = types[(i - 1) % n]
                right_nbr = types[(i + 1) % n]
                if left_nbr.id not in ("G_2^T", "G_4") and from_left > _CL02B[kl]:
                    failures.append({"claim": "cl02b", "ring": seq, "block": i,
                                     "type": t.id, "side": "left", "got": str(from_left)})
                if right_nbr.id not in ("G_2", "G_4^T") and from_right > _CL02B[kr]:
                    failures.append({"claim": "cl02b", "ring": seq, "block": i,
                                     "type": t.id, "side": "right", "got": str(from_right)})
                if not is_r and from_left > _CL03[kl]:
                    failures.append({"claim": "cl03", "ring": seq, "block": i,
                                     "type": t.id, "side": "left", "got": str(from_left)})
                if not is_l and from_right > _CL03[kr]:
                    failures.append({"claim": "cl03", "ring": seq, "block": i,
                                     "type": t.id, "side": "right", "got": str(from_right)})
                if inc["step2_left"] > 0 and not is_r:
                    failures.append({"claim": "cl01", "ring": seq, "block": i,
                                     "type": t.id, "detail": "step-2 from left but not right boundary"})
                if inc["step2_right"] > 0 and not is_l:
                    failures.append({"claim": "cl01", "ring": seq, "block": i,
                                     "type": t.id, "detail": "step-2 from right but not left boundary"})
                if (inc["step2_left"] > 0 or inc["step2_right"] > 0) and                         (inc["step3_left"] > 0 or inc["step3_right"] > 0):
                    failures.append({"claim": "cl01", "ring": seq, "block": i,
                                     "type": t.id, "detail": "step-2 and step-3 receipts together"})
            total_blocks = sum(ledger.blocks, Fraction(0))
            if total_blocks > 2 * n + 6:
                failures.append({"claim": "total-charge", "ring": seq,
                                 "got": str(total_blocks), "allowed": str(2 * n + 6)})
    return {"ok": not failures, "rings": ring_counts, "failures": failures}


def receive_bound_audit(checker: PairChecker | None = None,
                        lengths=(3, 5)) -> dict:
    """Audit of the receive-bound and exclusion claims.

    cl02/cl02b are checked over all compatible ordered pairs through the
    forwarding fixpoint; cl04 and the no-D_3 exclusion are pairwise; cl01
    and cl03 need more context than two blocks, so they are verified exactly
    over every compatible ring of the given lengths.
    """
    if checker is None:
        checker = PairChecker()
    cat = checker.catalog
    ids = checker.by_id
    failures: list[dict] = []

    in_left, in_right, out_right, out_left = _flow_maxima(checker)
    for y in cat:
        kl, kr = _left_key(y), _right_key(y)
        for x in cat:
            if checker.compatible(x, y):
                got = checker.edge_charge_right(x, y) + out_right(x)
                if got > _CL02[kl]:
                    failures.append({"claim": "cl02", "pair": [x.id, y.id], "side": "left",
                                     "got": str(got), "allowed": str(_CL02[kl])})
                if x.id not in ("G_2^T", "G_4") and got > _CL02B[kl]:
                    failures.append({"claim": "cl02b", "pair": [x.id, y.id], "side": "left",
                                     "got": str(got), "allowed": str(_CL02B[kl])})
            if checker.compatible(y, x):
                got = checker.edge_charge_left(y, x) + out_left(x)
                if got > _CL02[kr]:
                    failures.append({"claim": "cl02", "pair": [y.id, x.id], "side": "right",
                                     "got": str(got), "allowed": str(_CL02[kr])})
                if x.id not in ("G_2", "G_4^T") and got > _CL02B[kr]:
                    failures.append({"claim": "cl02b", "pair": [y.id, x.id], "side": "right",
                                     "got": str(got), "allowed": str(_CL02B[kr])})

    family = ["E_1", "E_1^T", "C_2", "C_2^T", "C_4", "C_4^T"]
    for a in family:
        for b in family:
            if checker.compatible(ids[a], ids[b]):
                failures.append({"claim": "cl04", "pair": [a, b]})

    d3_left = [x.id for x in cat if checker.compatible(x, ids["D_3"])]
    d3t_right = [y.id for y in cat if checker.compatible(ids["D_3^T"], y)]
    if d3_left:
        failures.append({"claim": "no-D_3", "detail": f"left partners {d3_left}"})
    if d3t_right:
        failures.append({"claim": "no-D_3", "detail": f"right partners of reverse {d3t_right}"})

    rings = ring_audit(lengths, checker)
    failures.extend(f for f in rings["failures"]
                    if f["claim"] in ("cl01", "cl03", "forwarding-cycle"))

    return {
        "ok": not failures,
        "failures": failures,
        "rings": rings["rings"],
        "ring_failures_all": rings["failures"],
        "in_left": {k: str(v) for k, v in in_left.items()},
        "in_right": {k: str(v) for k, v in in_right.items()},
        "compatible_pairs": sum(1 for x in cat for y in cat if checker.compatible(x, y)),
    }


def enumerate_rings(length: int, checker: PairChecker | None = None):
    """All pairwise-compatible cyclic type sequences, one representative per
    rotation class, as lists of type ids."""
    if checker is None:
        checker = PairChecker()
    cat = sorted(checker.catalog, key=lambda t: t.id)
    order = {t.id: k for k, t in enumerate(cat)}
    succ = {t.id: [y.id for y in cat if checker.compatible(t, y)] for t in cat}

    out: list[list[str]] = []

    def rec(seq: list[str]):
        if len(seq) == length:
            if seq[0] not in succ[seq[-1]]:
                return
            rots = [tuple(seq[i:] + seq[:i]) for i in range(length)]
            if tuple(seq) == min(rots):
                out.append(list(seq))
            return
        for nxt in succ[seq[-1]]:
            if order[nxt] < order[seq[0]]:
                continue
            rec(seq + [nxt])

    for t in cat:
        rec([t.id])
    return out
