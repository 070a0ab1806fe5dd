"""Balanced valuations, the cut-ratio calculus and the valuation solver.

A balanced valuation b assigns each vertex an integer of the degree's parity
with b(S) <= cut(S) for every S; orientable means strict on proper cuts.
phi_set(S, b) = (cut + b(S)) / (cut - b(S)) + 1 bounds the circular flow
number from below, and minimising the maximal ratio over sign assignments is
an exact solver independent of the integer flow search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .flows import FlowCertificate, _connected_subsets, verify_circular_flow
from .graphs import Graph, VertexSet
from .mincut import MaxFlow


class ValuationError(ValueError):
    pass


class ParityError(ValuationError):
    """b(v) does not match the degree parity somewhere."""


EXHAUSTIVE_LIMIT = 24  # largest n for full subset sweeps


@dataclass(frozen=True)
class BalancedValuation:
    b: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.b[v]

    def total(self, s) -> int:
        return sum(self.b[v] for v in s)

    def negate(self) -> "BalancedValuation":
        return BalancedValuation(tuple(-x for x in self.b))

    def to_json(self) -> str:
        return json.dumps({"b": list(self.b)})

    @classmethod
    def from_json(cls, text: str) -> "BalancedValuation":
        return cls(tuple(int(x) for x in json.loads(text)["b"]))


@dataclass(frozen=True)
class CutOracleResult:
    value: Fraction
    witness: VertexSet | None  # a proper attaining set, when one exists


def _edge_arrays(g: Graph) -> tuple[list[int], list[int]]:
    return [u for u, _ in g.edges], [v for _, v in g.edges]


def _check_parity(g: Graph, b: BalancedValuation) -> None:
    if len(b.b) != g.n:
        raise ValuationError(f"valuation covers {len(b.b)} vertices, graph has {g.n}")
    for v in range(g.n):
        if (b.b[v] - g.degrees[v]) % 2 != 0:
            raise ParityError(f"b({v}) = {b.b[v]} has wrong parity for degree {g.degrees[v]}")


def _excess_network(g: Graph, b: BalancedValuation, u: int, w: int,
                    forced: int = -1) -> tuple[MaxFlow, int]:
    """Project-selection network for max of w*b(S) - u*cut(S); source n,
    sink n+1.  ``forced`` pins one vertex to the source side."""
    n = g.n
    net = MaxFlow(n + 2)
    pos_total = 0
    inf = u * 2 * g.m + w * sum(abs(x) for x in b.b) + 1
    for v in range(n):
        p = w * b.b[v]
        if p > 0:
            net.add_edge(n, v, p)
            pos_total += p
        elif p < 0:
            net.add_edge(v, n + 1, -p)
    if forced >= 0:
        net.add_edge(n, forced, inf)
    for eu, ev in g.edges:
        net.add_edge(eu, ev, u)
        net.add_edge(ev, eu, u)
    return net, pos_total


def max_excess(g: Graph, b: BalancedValuation, t: Fraction) -> CutOracleResult:
    """Max over all S (including the trivial sets) of b(S) - t*cut(S), exact;
    the witness is a proper attaining set when one exists, else None.

    Solved as a project-selection min cut with capacities scaled by t's
    denominator; when only the trivial sets attain the maximum in the
    residual network, per-vertex forcing decides proper attainment.
    """
    if not (0 < t <= 1):
        raise ValuationError(f"threshold t must be in (0, 1], got {t}")
    _check_parity(g, b)
    u, w = t.numerator, t.denominator
    n = g.n
    net, pos_total = _excess_network(g, b, u, w)
    cut = net.max_flow(n, n + 1)
    value = Fraction(pos_total - cut, w)

    minimal = net.reachable_from(n) - {n}
    if 0 < len(minimal) < n:
        return CutOracleResult(value, VertexSet.of(n, minimal))
    maximal = set(range(n)) - (net.reaching_to(n + 1) - {n + 1})
    if 0 < len(maximal) < n:
        return CutOracleResult(value, VertexSet.of(n, maximal))
    for v in range(n):
        fnet, _ = _excess_network(g, b, u, w, forced=v)
        got = pos_total - fnet.max_flow(n, n + 1)
        if Fraction(got, w) == value:
            cand = fnet.reachable_from(n) - {n}
            if 0 < len(cand) < n:
                return CutOracleResult(value, VertexSet.of(n, cand))
    return CutOracleResult(value, None)


def max_excess_exhaustive(g: Graph, b: BalancedValuation, t: Fraction) -> CutOracleResult:
    """Subset-sweep twin of max_excess, for n <= EXHAUSTIVE_LIMIT."""
    _check_parity(g, b)
    if g.n > EXHAUSTIVE_LIMIT:
        raise ValuationError(f"exhaustive sweep capped at n = {EXHAUSTIVE_LIMIT}")
    eu, ev = _edge_arrays(g)
    best, mask = _kernels.max_excess_exhaustive(g.n, eu, ev, list(b.b),
                                                t.numerator, t.denominator)
    proper = Fraction(int(best), t.denominator)
    value = max(proper, Fraction(0), Fraction(sum(b.b)))
    witness = VertexSet(g.n, int(mask)) if proper == value else None
    return CutOracleResult(value, witness)


def validate_valuation(g: Graph, b: BalancedValuation, mode: str = "balanced") -> VertexSet | None:
    """None when b is balanced (resp. orientable); otherwise a witness subset
    violating b(S) <= cut(S) (strict on proper cuts in orientable mode)."""
    if mode not in ("balanced", "orientable"):
        raise ValuationError(f"unknown mode {mode!r}")
    _check_parity(g, b)
    if sum(b.b) > 0:
        return VertexSet.full(g.n)
    if g.n <= EXHAUSTIVE_LIMIT:
        eu, ev = _edge_arrays(g)
        best, mask = _kernels.max_excess_exhaustive(g.n, eu, ev, list(b.b), 1, 1)
        if best > 0 or (mode == "orientable" and best == 0):
            return VertexSet(g.n, int(mask))
        return None
    res = max_excess(g, b, Fraction(1))
    if res.value > 0:
        return res.witness if res.witness is not None else VertexSet.full(g.n)
    if mode == "orientable" and res.value == 0 and res.witness is not None:
        return res.witness
    return None


def phi_set(g: Graph, b: BalancedValuation, s: VertexSet) -> Fraction:
    """(cut + b(S)) / (cut - b(S)) + 1 for the given set, exact."""
    _check_parity(g, b)
    cut, _ = g.boundary(s)
    if cut == 0:
        raise ValuationError("phi_set needs a set with nonzero boundary")
    bs = b.total(s)
    if cut - bs <= 0:
        raise ValuationError(f"cut - b(S) = {cut - bs} <= 0; valuation not orientable on this set")
    return Fraction(cut + bs, cut - bs) + 1


def violating_set(g: Graph, b: BalancedValuation, r: Fraction) -> VertexSet | None:
    """Some proper S with phi_set(S, b) > r, or None (then phi(b) <= r)."""
    if r <= 2:
        raise ValuationError("r must exceed 2")
    t = (r - 2) / r
    res = max_excess(g, b, t)
    if res.value > 0 and res.witness is not None:
        return res.witness
    return None


def _phi_candidates(g: Graph) -> list[Fraction]:
    """All values (p+q even split of 2*cut) the ratio can take, ascending."""
    out = set()
    for cut in range(1, g.m + 1):
        for bs in range(-cut, cut, 1):
            if (cut + bs) % 2 == 0 and cut + bs > 0:
                out.add(Fraction(cut + bs, cut - bs) + 1)
    return sorted(out)


def phi_valuation(g: Graph, b: BalancedValuation) -> tuple[Fraction, VertexSet]:
    """Exact max of phi_set over proper cuts, with an attaining set."""
    bad = validate_valuation(g, b, "orientable")
    if bad is not None:
        raise ValuationError(f"valuation not orientable; witness mask {bad.mask:#x}")
    if g.n <= EXHAUSTIVE_LIMIT:
        eu, ev = _edge_arrays(g)
        pn, pd, mask, bad_mask = _kernels.max_phi_exhaustive(g.n, eu, ev, list(b.b))
        if bad_mask != -1:
            raise ValuationError("valuation not orientable (exhaustive witness)")
        return Fraction(int(pn), int(pd)) + 1, VertexSet(g.n, int(mask))
    cands = _phi_candidates(g)
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if violating_set(g, b, cands[mid]) is None:
            hi = mid
        else:
            lo = mid + 1
    # any set above the predecessor value attains the maximum cands[lo]
    below = cands[lo - 1] if lo > 0 else 2 + (cands[0] - 2) / 2
    witness = violating_set(g, b, below)
    if witness is None or phi_set(g, b, witness) != cands[lo]:
        raise ValuationError("internal error: binary search witness mismatch")
    return cands[lo], witness


def flow_to_valuation(g: Graph, cert: FlowCertificate) -> BalancedValuation:
    """In-degree minus out-degree of a verified circular flow certificate."""
    bad = verify_circular_flow(g, cert)
    if bad is not None:
        raise ValuationError(f"certificate does not verify: {bad}")
    vals = [0] * g.n
    for t, h in cert.orientation:
        vals[t] -= 1
        vals[h] += 1
    return BalancedValuation(tuple(vals))


def _domains(g: Graph) -> list[list[int]]:
    """Per-vertex value candidates: unit signs on cubic vertices, otherwise
    all degree-parity values up to the degree."""
    doms = []
    for v in range(g.n):
        d = g.degrees[v]
        if d == 0:
            doms.append([0])
        elif d == 3:
            doms.append([-1, 1])
        else:
            doms.append(list(range(-d, d + 1, 2)))
    return doms


def _evaluate(g: Graph, vals: tuple[int, ...]) -> Fraction | None:
    """phi(b) for a complete assignment, or None when not orientable."""
    eu, ev = _edge_arrays(g)
    pn, pd, _mask, bad_mask = _kernels.max_phi_exhaustive(g.n, eu, ev, list(vals))
    if bad_mask != -1 or pd == 0:
        return None
    return Fraction(int(pn), int(pd)) + 1


def phi_via_valuations(g: Graph) -> tuple[Fraction, BalancedValuation]:
    """Least phi(b) over balanced valuations (unit values on cubic vertices,
    zero total), returning the lexicographically least minimiser."""
    from .flows import BridgeError
    if not g.is_bridgeless():
        raise BridgeError("graph has a bridge; no orientable valuation exists")
    if g.n > EXHAUSTIVE_LIMIT:
        raise ValuationError(f"valuation solver needs n <= {EXHAUSTIVE_LIMIT}")
    doms = _domains(g)
    nbr = g.neighbor_masks()
    noncubic_mask = 0
    for v in range(g.n):
        if g.degrees[v] != 3:
            noncubic_mask |= 1 << v
    all_mask = (1 << g.n) - 1

    def run(exempt: int) -> tuple[Fraction, tuple[int, ...]] | None:
        assignments, _pruned, _nodes = _kernels.enumerate_signings(
            g.n, nbr, doms, 0, exempt, 1 << 26)
        best: Fraction | None = None
        best_b: tuple[int, ...] | None = None
        for vals in assignments:
            tup = tuple(int(x) for x in vals)
            got = _evaluate(g, tup)
            if got is not None and (best is None or got < best):
                best, best_b = got, tup
        return None if best is None else (best, best_b)

    if g.n <= 12:
        found = run(all_mask)  # exhaustive: every vertex exempt from pruning
        if found is None:
            raise ValuationError("no orientable balanced valuation found")
        return found[0], BalancedValuation(found[1])
    # a single-colour 3-vertex path of unit values forces phi(b) >= 5, so the
    # path-free stage is exhaustive whenever its optimum is below 5
    found = run(noncubic_mask)
    if found is not None and found[0] < 5:
        return found[0], BalancedValuation(found[1])
    full = run(all_mask)
    if full is None:
        raise ValuationError("no orientable balanced valuation found")
    return full[0], BalancedValuation(full[1])


def scan_small_sets(g: Graph, b: BalancedValuation, rho: Fraction,
                    max_size: int) -> VertexSet | None:
    """A connected X with |X| <= max_size certifying phi(b) >= rho, either
    directly (phi(X, b) >= rho) or through the complement (phi(X, -b) >= rho,
    which equals phi(V-X, b)).  None when no small witness exists."""
    full = (1 << g.n) - 1
    masks = [1 << v for v in range(g.n)]
    if max_size >= 2:
        masks += _connected_subsets(g, max_size)
    for mask in masks:
        if mask == full:
            continue
        cut = 0
        bs = 0
        for u, v in g.edges:
            if ((mask >> u) & 1) != ((mask >> v) & 1):
                cut += 1
        if cut == 0:
            continue
        mm = mask
        while mm:
            low = mm & -mm
            bs += b.b[low.bit_length() - 1]
            mm ^= low
        for signed in (bs, -bs):
            if cut - signed <= 0:
                return VertexSet(g.n, mask)  # not orientable on this side
            if Fraction(cut + signed, cut - signed) + 1 >= rho:
                return VertexSet(g.n, mask)
    return None


def _small_subsets(n: int, max_size: int):
    from itertools import combinations
    for size in range(1, max_size + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield mask


def lemma_suite(g: Graph, b: BalancedValuation, s: VertexSet, k: int) -> list[dict]:
    """Instance checks of the complement / split / swap / boundary-size
    facts; entries are {"lemma", "status", "witness"} with status "pass",
    "fail" or "skip" (precondition unmet)."""
    report: list[dict] = []
    cut, _ = g.boundary(s)

    def add(lemma: str, status: str, witness=None):
        report.append({"lemma": lemma, "status": status, "witness": witness})

    if cut == 0 or not s.is_proper():
        return [{"lemma": "all", "status": "skip", "witness": "s is trivial or has empty boundary"}]

    comp = s.complement()
    lhs = phi_set(g, b, s)
    rhs = phi_set(g, b.negate(), comp)
    add("complement", "pass" if lhs == rhs else "fail",
        None if lhs == rhs else {"phi_s": str(lhs), "phi_comp": str(rhs)})

    phi_b, _ = phi_valuation(g, b)

    # split of s into components: each part must again attain phi(b)
    parts = g.components_within(s)
    if len(parts) >= 2 and lhs == phi_b:
        ok = all(phi_set(g, b, part) == phi_b for part in parts)
        add("split", "pass" if ok else "fail")
    else:
        add("split", "skip")

    # split of the complement: removing one component keeps phi(b)
    cparts = g.components_within(comp)
    if len(cparts) >= 2 and lhs == phi_b:
        ok = all(phi_set(g, b, part.complement()) == phi_b for part in cparts)
        add("split_complement", "pass" if ok else "fail")
    else:
        add("split_complement", "skip")

    # swap invariance: T on one side, b(T) = 0, boundary of T split half and
    # half between s and its complement => phi unchanged.  All T up to size 5
    # are tried (the proofs only ever swap such small sets).
    checked = 0
    bad_swap = None
    smask = s.mask
    for tmask in _small_subsets(g.n, 5):
        inside = tmask & smask == tmask
        if not inside and tmask & smask != 0:
            continue
        bt = 0
        mm = tmask
        while mm:
            low = mm & -mm
            bt += b.b[low.bit_length() - 1]
            mm ^= low
        if bt != 0:
            continue
        crossing = 0
        into_s = 0
        for eu, ev in g.edges:
            cu, cv = (tmask >> eu) & 1, (tmask >> ev) & 1
            if cu == cv:
                continue
            crossing += 1
            other = ev if cu else eu
            if (tmask >> other) & 1 == 0 and (smask >> other) & 1:
                into_s += 1
        if crossing == 0 or 2 * into_s != crossing:
            continue
        new_mask = (smask & ~tmask) if inside else (smask | tmask)
        if new_mask == 0 or new_mask == (1 << g.n) - 1:
            continue
        new_set = VertexSet(g.n, new_mask)
        if g.boundary(new_set)[0] == 0:
            continue
        checked += 1
        if phi_set(g, b, new_set) != lhs:
            bad_swap = tmask
            break
    if checked == 0 and bad_swap is None:
        add("swap", "skip")
    else:
        add("swap", "fail" if bad_swap is not None else "pass",
            None if bad_swap is None else {"T_mask": bad_swap})

    # boundary size: 4 < phi(s, b) < 4 + 1/k forces cut >= 4k + 5
    if k >= 1 and 4 < lhs < 4 + Fraction(1, k):
        ok = cut >= 4 * k + 5
        add("boundary_size", "pass" if ok else "fail",
            None if ok else {"cut": cut, "bound": 4 * k + 5})
    else:
        add("boundary_size", "skip")
    return report
