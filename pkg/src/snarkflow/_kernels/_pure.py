"""Pure-Python kernels: exhaustive subset sweeps, the integer-flow search,
edge-colouring backtracking and sign-vector enumeration.

Same contracts as the compiled twin in ``_fast.pyx``; used as the fallback
backend and as the reference in backend-parity tests.  All subset sweeps walk
masks in Gray-code order with O(deg) incremental updates.
"""

from __future__ import annotations

BACKEND = "pure"


def _adjacency(n: int, eu, ev) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in zip(eu, ev):
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _gray_sweep(n, eu, ev, b):
    """Yield (mask, cut, bsum) over all masks 1 .. 2^n - 2 in Gray order."""
    adj = _adjacency(n, eu, ev)
    deg = [len(a) for a in adj]
    in_s = [False] * n
    cnt = [0] * n  # neighbours (with multiplicity) inside S
    cut = 0
    bsum = 0
    mask = 0
    full = (1 << n) - 1
    for k in range(1, 1 << n):
        v = (k & -k).bit_length() - 1
        if in_s[v]:
            in_s[v] = False
            cut -= deg[v] - 2 * cnt[v]
            bsum -= b[v]
            mask ^= 1 << v
            for w in adj[v]:
                cnt[w] -= 1
        else:
            in_s[v] = True
            cut += deg[v] - 2 * cnt[v]
            bsum += b[v]
            mask ^= 1 << v
            for w in adj[v]:
                cnt[w] += 1
        if mask != full:
            yield mask, cut, bsum


def max_excess_exhaustive(n, eu, ev, b, num, den):
    """Max of den*b(S) - num*cut(S) over proper nonempty S; first argmax wins."""
    best = None
    best_mask = 0
    for mask, cut, bsum in _gray_sweep(n, eu, ev, b):
        val = den * bsum - num * cut
        if best is None or val > best:
            best = val
            best_mask = mask
    if best is None:
        raise ValueError("graph has no proper nonempty vertex subset")
    return best, best_mask


def enumerate_excess_target(n, eu, ev, b, num, den, equal, limit):
    """Proper masks with den*b(S) - num*cut(S) == 0 (equal) or >= 0."""
    out = []
    count = 0
    for mask, cut, bsum in _gray_sweep(n, eu, ev, b):
        val = den * bsum - num * cut
        if (val == 0) if equal else (val >= 0):
            count += 1
            if len(out) < limit:
                out.append(mask)
    return out, count


def max_phi_exhaustive(n, eu, ev, b):
    """Max of (cut+b)/(cut-b) over proper S with cut != 0.

    Returns (pnum, pden, mask, bad_mask); bad_mask is the first proper set
    with cut - b(S) <= 0 (witness that b is not orientable), else -1.
    """
    pnum, pden = -1, 0  # -infinity
    best_mask = 0
    bad_mask = -1
    for mask, cut, bsum in _gray_sweep(n, eu, ev, b):
        if cut == 0:
            continue
        q = cut - bsum
        if q <= 0:
            if bad_mask == -1:
                bad_mask = mask
            continue
        p = cut + bsum
        if p * pden > pnum * q:
            pnum, pden = p, q
            best_mask = mask
    return pnum, pden, best_mask, bad_mask


def flow_search(m, q, big, branch_order, constraints, node_limit=0):
    """Depth-first search for integer edge values with |x| in [q, big].

    constraints: list of [(edge, sign), ...], each required to sum to zero.
    Branch edges are assigned in the given order, smallest candidate first.
    Each edge carries a two-interval domain [-hi,-lo] u [lo,hi]; assignments
    trigger bounds-consistency propagation through every constraint, which
    forces tree edges, fixes signs and shrinks candidate ranges.
    Returns (values, nodes) with values None when no assignment exists.
    """
    if m == 0:
        return [], 0
    ncons = len(constraints)
    edge_cons = [[] for _ in range(m)]
    for ci, cons in enumerate(constraints):
        for e, _ in cons:
            edge_cons[e].append(ci)
    # domain per edge: negative interval [nlo, nhi], positive [plo, phi]
    nlo = [-big] * m
    nhi = [-q] * m
    plo = [q] * m
    phi = [big] * m
    trail = []
    in_queue = [False] * ncons
    nodes = 0

    def contrib(e, s):
        lo = nlo[e] if nlo[e] <= nhi[e] else plo[e]
        hi = phi[e] if plo[e] <= phi[e] else nhi[e]
        return (lo, hi) if s > 0 else (-hi, -lo)

    def tighten(e, lo_req, hi_req, queue):
        """Intersect e's domain with [lo_req, hi_req]; False on wipe-out."""
        n1, n2, p1, p2 = nlo[e], nhi[e], plo[e], phi[e]
        nn1, nn2 = max(n1, lo_req), min(n2, hi_req)
        np1, np2 = max(p1, lo_req), min(p2, hi_req)
        if nn1 > nn2 and np1 > np2:
            return False
        if (nn1, nn2, np1, np2) != (n1, n2, p1, p2):
            trail.append((e, n1, n2, p1, p2))
            nlo[e], nhi[e], plo[e], phi[e] = nn1, nn2, np1, np2
            for ci in edge_cons[e]:
                if not in_queue[ci]:
                    in_queue[ci] = True
                    queue.append(ci)
        return True

    def propagate(queue):
        qi = 0
        failed = False
        while qi < len(queue):
            ci = queue[qi]
            qi += 1
            in_queue[ci] = False
            cons = constraints[ci]
            smin = 0
            smax = 0
            for e, s in cons:
                lo, hi = contrib(e, s)
                smin += lo
                smax += hi
            if smin > 0 or smax < 0:
                failed = True
                break
            for e, s in cons:
                lo, hi = contrib(e, s)
                rest_lo = smin - lo
                rest_hi = smax - hi
                # s*x must lie in [-rest_hi, -rest_lo]
                if s > 0:
                    ok = tighten(e, -rest_hi, -rest_lo, queue)
                else:
                    ok = tighten(e, rest_lo, rest_hi, queue)
                if not ok:
                    failed = True
                    break
            if failed:
                break
        if failed:
            while qi < len(queue):
                in_queue[queue[qi]] = False
                qi += 1
            return False
        return True

    def assign(e, x):
        queue = []
        if not tighten(e, x, x, queue):
            return False
        return propagate(queue)

    def rollback(mark):
        while len(trail) > mark:
            e, a, bb, c, d = trail.pop()
            nlo[e], nhi[e], plo[e], phi[e] = a, bb, c, d

    def fixed(e):
        if nlo[e] > nhi[e]:
            return plo[e] == phi[e]
        if plo[e] > phi[e]:
            return nlo[e] == nhi[e]
        return False

    order = list(branch_order)

    def branch(e, lo_req, hi_req, depth):
        mark = len(trail)
        queue = []
        if tighten(e, lo_req, hi_req, queue) and propagate(queue):
            res = rec(depth)
            if res is not None:
                return res
        rollback(mark)
        return None

    def rec(depth):
        nonlocal nodes
        nodes += 1
        if node_limit and nodes > node_limit:
            raise RuntimeError("flow search node limit exceeded")
        while depth < len(order) and fixed(order[depth]):
            depth += 1
        if depth == len(order):
            out = []
            for e in range(m):
                if not fixed(e):
                    raise RuntimeError("constraint system leaves an edge undetermined")
                out.append(plo[e] if plo[e] <= phi[e] else nlo[e])
            return out
        # split the domain, low half first: the first solution found is the
        # least one in (edge order, value) lexicographic order
        e = order[depth]
        if nlo[e] <= nhi[e] and plo[e] <= phi[e]:
            return (branch(e, nlo[e], nhi[e], depth)
                    or branch(e, plo[e], phi[e], depth))
        lo, hi = (nlo[e], nhi[e]) if nlo[e] <= nhi[e] else (plo[e], phi[e])
        mid = lo + (hi - lo) // 2
        return (branch(e, lo, mid, depth)
                or branch(e, mid + 1, hi, depth))

    queue0 = list(range(ncons))
    for ci in range(ncons):
        in_queue[ci] = True
    if not propagate(queue0):
        return None, 0
    return rec(0), nodes


def color3_search(n, m, eu, ev):
    """Proper 3-edge-colouring by backtracking with forced-move propagation.

    Returns a list of colours in {1, 2, 3} per edge, or None (exhaustive).
    """
    incident: list[list[int]] = [[] for _ in range(n)]
    for k in range(m):
        incident[eu[k]].append(k)
        incident[ev[k]].append(k)
    edge_nbrs: list[list[int]] = [[] for _ in range(m)]
    for v in range(n):
        for a in incident[v]:
            for c in incident[v]:
                if a != c and c not in edge_nbrs[a]:
                    edge_nbrs[a].append(c)
    avail = [0b111] * m
    color = [0] * m
    trail: list[tuple[int, int]] = []  # (edge, previous avail of a neighbour)

    def set_color(e0, c0):
        stack = [(e0, c0)]
        while stack:
            e, c = stack.pop()
            if color[e]:
                if color[e] != c:
                    return False
                continue
            color[e] = c
            trail.append((-1 - e, 0))
            bit = 1 << (c - 1)
            for e2 in edge_nbrs[e]:
                if color[e2]:
                    if color[e2] == c:
                        return False
                    continue
                if avail[e2] & bit:
                    trail.append((e2, avail[e2]))
                    avail[e2] &= ~bit
                    a = avail[e2]
                    if a == 0:
                        return False
                    if a in (1, 2, 4):
                        stack.append((e2, a.bit_length()))
        return True

    def rollback(mark):
        while len(trail) > mark:
            key, prev = trail.pop()
            if key < 0:
                color[-1 - key] = 0
            else:
                avail[key] = prev

    def pick():
        best, best_c = -1, 4
        for e in range(m):
            if color[e] == 0:
                c = avail[e].bit_count()
                if c < best_c:
                    best, best_c = e, c
                    if c <= 1:
                        break
        return best

    def rec():
        e = pick()
        if e == -1:
            return True
        for c in (1, 2, 3):
            if avail[e] & (1 << (c - 1)):
                mark = len(trail)
                if set_color(e, c) and rec():
                    return True
                rollback(mark)
        return False

    return list(color) if rec() else None


def enumerate_signings(n, adj_mask, domains, target_sum, path_exempt_mask, limit):
    """All assignments b[v] in domains[v] with sum == target_sum and no
    single-colour 3-vertex path among non-exempt vertices with |b| == 1.

    Subtrees that already contain such a path are counted, not descended.
    Returns (assignments, pathful_pruned, nodes).
    """
    out: list[tuple[int, ...]] = []
    vals = [0] * n
    pos_mask = 0
    neg_mask = 0
    suffix_max = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix_max[v] = suffix_max[v + 1] + max(abs(x) for x in domains[v])
    pruned = 0
    nodes = 0

    def creates_path(v, sign_mask):
        same = adj_mask[v] & sign_mask & ~path_exempt_mask
        if same.bit_count() >= 2:
            return True
        mm = same
        while mm:
            low = mm & -mm
            u = low.bit_length() - 1
            mm ^= low
            if adj_mask[u] & sign_mask & ~path_exempt_mask & ~(1 << v):
                return True
        return False

    def rec(v, total):
        nonlocal pos_mask, neg_mask, pruned, nodes
        nodes += 1
        if v == n:
            if total == target_sum and len(out) < limit:
                out.append(tuple(vals))
            return
        rem = suffix_max[v]
        if total - rem > target_sum or total + rem < target_sum:
            return
        exempt = (path_exempt_mask >> v) & 1
        for x in domains[v]:
            vals[v] = x
            bit = 1 << v
            if x > 0:
                pos_mask |= bit
                bad = (not exempt) and abs(x) == 1 and creates_path(v, pos_mask)
            else:
                neg_mask |= bit
                bad = (not exempt) and abs(x) == 1 and creates_path(v, neg_mask)
            if bad:
                pruned += 1
            else:
                rec(v + 1, total + x)
            if x > 0:
                pos_mask &= ~bit
            else:
                neg_mask &= ~bit
        vals[v] = 0

    rec(0, 0)
    return out, pruned, nodes
