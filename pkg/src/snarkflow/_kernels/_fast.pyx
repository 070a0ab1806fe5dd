# cython: language_level=3
"""Compiled kernels; same contracts as the pure twins in ``_pure``."""

import numpy as np

BACKEND = "fast"

ctypedef long long i64
ctypedef unsigned long long u64


cdef inline int _ctz(u64 x):
    cdef int c = 0
    while not (x & 1):
        x >>= 1
        c += 1
    return c


cdef class _Sweep:
    """Gray-code walk over all proper nonempty vertex subsets."""
    cdef i64[:] start, to, deg, bb, cnt
    cdef signed char[:] ins
    cdef int n
    cdef u64 mask, full
    cdef i64 cut, bsum

    def __init__(self, int n, eu, ev, b):
        if n < 1 or n > 62:
            raise ValueError("subset sweep supports 1 <= n <= 62")
        cdef int m = len(eu)
        start = np.zeros(n + 1, dtype=np.int64)
        to = np.zeros(2 * m, dtype=np.int64)
        deg = np.zeros(n, dtype=np.int64)
        for u, v in zip(eu, ev):
            deg[u] += 1
            deg[v] += 1
        start[1:] = np.cumsum(deg)
        fill = start[:-1].copy()
        for u, v in zip(eu, ev):
            to[fill[u]] = v
            fill[u] += 1
            to[fill[v]] = u
            fill[v] += 1
        self.n = n
        self.start = start
        self.to = to
        self.deg = deg
        self.bb = np.asarray(b, dtype=np.int64)
        self.cnt = np.zeros(n, dtype=np.int64)
        self.ins = np.zeros(n, dtype=np.int8)
        self.mask = 0
        self.full = ((<u64>1) << n) - 1
        self.cut = 0
        self.bsum = 0

    cdef inline void flip(self, u64 k):
        cdef int v = _ctz(k)
        cdef i64 j
        if self.ins[v]:
            self.ins[v] = 0
            self.cut -= self.deg[v] - 2 * self.cnt[v]
            self.bsum -= self.bb[v]
            self.mask ^= (<u64>1) << v
            for j in range(self.start[v], self.start[v + 1]):
                self.cnt[self.to[j]] -= 1
        else:
            self.ins[v] = 1
            self.cut += self.deg[v] - 2 * self.cnt[v]
            self.bsum += self.bb[v]
            self.mask ^= (<u64>1) << v
            for j in range(self.start[v], self.start[v + 1]):
                self.cnt[self.to[j]] += 1


def max_excess_exhaustive(int n, eu, ev, b, i64 num, i64 den):
    """Max of den*b(S) - num*cut(S) over proper nonempty S; first argmax wins."""
    cdef _Sweep s = _Sweep(n, eu, ev, b)
    cdef u64 k, best_mask = 0
    cdef i64 best = 0, val
    cdef int have = 0
    for k in range(1, (<u64>1) << n):
        s.flip(k)
        if s.mask != s.full:
            val = den * s.bsum - num * s.cut
            if not have or val > best:
                best = val
                best_mask = s.mask
                have = 1
    if not have:
        raise ValueError("graph has no proper nonempty vertex subset")
    return best, best_mask


def enumerate_excess_target(int n, eu, ev, b, i64 num, i64 den, bint equal, int limit):
    """Proper masks with den*b(S) - num*cut(S) == 0 (equal) or >= 0."""
    cdef _Sweep s = _Sweep(n, eu, ev, b)
    cdef u64 k
    cdef i64 val
    cdef long count = 0
    out = []
    for k in range(1, (<u64>1) << n):
        s.flip(k)
        if s.mask != s.full:
            val = den * s.bsum - num * s.cut
            if (val == 0) if equal else (val >= 0):
                count += 1
                if len(out) < limit:
                    out.append(s.mask)
    return out, count


def max_phi_exhaustive(int n, eu, ev, b):
    """Max of (cut+b)/(cut-b) over proper S with cut != 0; also report the
    first proper set with cut - b(S) <= 0 (non-orientability witness)."""
    cdef _Sweep s = _Sweep(n, eu, ev, b)
    cdef u64 k, best_mask = 0
    cdef i64 p, q, pnum = -1, pden = 0
    cdef object bad_mask = None
    for k in range(1, (<u64>1) << n):
        s.flip(k)
        if s.mask != s.full and s.cut != 0:
            q = s.cut - s.bsum
            if q <= 0:
                if bad_mask is None:
                    bad_mask = s.mask
                continue
            p = s.cut + s.bsum
            if p * pden > pnum * q:
                pnum = p
                pden = q
                best_mask = s.mask
    return pnum, pden, best_mask, (-1 if bad_mask is None else bad_mask)


cdef class _FlowSearcher:
    """Two-interval domains per edge with bounds-consistency propagation."""
    cdef i64[:] nlo, nhi, plo, phid
    cdef int[:] cons_start, cons_edge, ec_start, ec_cons, order, queue, trail_e
    cdef i64[:] trail_vals
    cdef signed char[:] cons_sign, in_queue
    cdef int m, ncons, norder, trail_top, qhead, qcount, qcap
    cdef i64 q, big
    cdef long long nodes, node_limit

    def __init__(self, int m, i64 q, i64 big, order, constraints, long long node_limit):
        cdef int total = 0, ci = 0, i = 0
        for cons in constraints:
            total += len(cons)
        self.m = m
        self.q = q
        self.big = big
        self.ncons = len(constraints)
        self.node_limit = node_limit
        self.nodes = 0
        self.nlo = np.full(m, -big, dtype=np.int64)
        self.nhi = np.full(m, -q, dtype=np.int64)
        self.plo = np.full(m, q, dtype=np.int64)
        self.phid = np.full(m, big, dtype=np.int64)
        cons_start = np.zeros(self.ncons + 1, dtype=np.int32)
        cons_edge = np.zeros(max(total, 1), dtype=np.int32)
        cons_sign = np.zeros(max(total, 1), dtype=np.int8)
        ec_count = np.zeros(m, dtype=np.int64)
        for ci, cons in enumerate(constraints):
            cons_start[ci] = i
            for e, sg in cons:
                cons_edge[i] = e
                cons_sign[i] = sg
                ec_count[e] += 1
                i += 1
        cons_start[self.ncons] = i
        self.cons_start = cons_start
        self.cons_edge = cons_edge
        self.cons_sign = cons_sign
        ec_start = np.zeros(m + 1, dtype=np.int64)
        ec_start[1:] = np.cumsum(ec_count)
        ec_cons = np.zeros(max(total, 1), dtype=np.int32)
        fill = ec_start[:-1].copy()
        for ci, cons in enumerate(constraints):
            for e, sg in cons:
                ec_cons[fill[e]] = ci
                fill[e] += 1
        self.ec_start = ec_start.astype(np.int32)
        self.ec_cons = ec_cons
        self.norder = len(order)
        self.order = np.asarray(order, dtype=np.int32)
        self.in_queue = np.zeros(self.ncons, dtype=np.int8)
        self.qcap = self.ncons + 1
        self.queue = np.zeros(self.qcap, dtype=np.int32)
        self.qhead = 0
        self.qcount = 0
        # domains only shrink along a DFS path: at most 2*(big-q)+2 interval
        # moves plus sign deletions per edge
        cap = (m + 1) * (2 * (big - q) + 16)
        self.trail_e = np.zeros(cap, dtype=np.int32)
        self.trail_vals = np.zeros(4 * cap, dtype=np.int64)
        self.trail_top = 0

    cdef inline void _contrib(self, int e, int s, i64 *lo, i64 *hi):
        cdef i64 l, h
        l = self.nlo[e] if self.nlo[e] <= self.nhi[e] else self.plo[e]
        h = self.phid[e] if self.plo[e] <= self.phid[e] else self.nhi[e]
        if s > 0:
            lo[0] = l
            hi[0] = h
        else:
            lo[0] = -h
            hi[0] = -l

    cdef int tighten(self, int e, i64 lo_req, i64 hi_req):
        # 0 wipe-out, 1 unchanged, 2 changed (and constraints enqueued)
        cdef i64 n1 = self.nlo[e], n2 = self.nhi[e], p1 = self.plo[e], p2 = self.phid[e]
        cdef i64 nn1 = n1, nn2 = n2, np1 = p1, np2 = p2
        cdef int i, ci
        if lo_req > nn1:
            nn1 = lo_req
        if hi_req < nn2:
            nn2 = hi_req
        if lo_req > np1:
            np1 = lo_req
        if hi_req < np2:
            np2 = hi_req
        if nn1 > nn2 and np1 > np2:
            return 0
        if nn1 == n1 and nn2 == n2 and np1 == p1 and np2 == p2:
            return 1
        if self.trail_top * 4 + 4 > self.trail_vals.shape[0]:
            raise RuntimeError("flow search trail overflow")
        self.trail_e[self.trail_top] = e
        self.trail_vals[4 * self.trail_top] = n1
        self.trail_vals[4 * self.trail_top + 1] = n2
        self.trail_vals[4 * self.trail_top + 2] = p1
        self.trail_vals[4 * self.trail_top + 3] = p2
        self.trail_top += 1
        self.nlo[e] = nn1
        self.nhi[e] = nn2
        self.plo[e] = np1
        self.phid[e] = np2
        for i in range(self.ec_start[e], self.ec_start[e + 1]):
            ci = self.ec_cons[i]
            if not self.in_queue[ci]:
                self.in_queue[ci] = 1
                self.queue[(self.qhead + self.qcount) % self.qcap] = ci
                self.qcount += 1
        return 2

    cdef bint propagate(self):
        cdef int ci, j, e, s, r
        cdef i64 smin, smax, lo, hi, rest_lo, rest_hi
        cdef bint failed = False
        while self.qcount > 0:
            ci = self.queue[self.qhead]
            self.qhead = (self.qhead + 1) % self.qcap
            self.qcount -= 1
            self.in_queue[ci] = 0
            smin = 0
            smax = 0
            for j in range(self.cons_start[ci], self.cons_start[ci + 1]):
                self._contrib(self.cons_edge[j], self.cons_sign[j], &lo, &hi)
                smin += lo
                smax += hi
            if smin > 0 or smax < 0:
                failed = True
            else:
                for j in range(self.cons_start[ci], self.cons_start[ci + 1]):
                    e = self.cons_edge[j]
                    s = self.cons_sign[j]
                    self._contrib(e, s, &lo, &hi)
                    rest_lo = smin - lo
                    rest_hi = smax - hi
                    if s > 0:
                        r = self.tighten(e, -rest_hi, -rest_lo)
                    else:
                        r = self.tighten(e, rest_lo, rest_hi)
                    if r == 0:
                        failed = True
                        break
            if failed:
                while self.qcount > 0:
                    self.in_queue[self.queue[self.qhead]] = 0
                    self.qhead = (self.qhead + 1) % self.qcap
                    self.qcount -= 1
                return False
        return True

    cdef bint assign(self, int e, i64 x):
        if self.tighten(e, x, x) == 0:
            return False
        return self.propagate()

    cdef void rollback(self, int mark):
        cdef int e
        while self.trail_top > mark:
            self.trail_top -= 1
            e = self.trail_e[self.trail_top]
            self.nlo[e] = self.trail_vals[4 * self.trail_top]
            self.nhi[e] = self.trail_vals[4 * self.trail_top + 1]
            self.plo[e] = self.trail_vals[4 * self.trail_top + 2]
            self.phid[e] = self.trail_vals[4 * self.trail_top + 3]

    cdef inline bint fixed(self, int e):
        if self.nlo[e] > self.nhi[e]:
            return self.plo[e] == self.phid[e]
        if self.plo[e] > self.phid[e]:
            return self.nlo[e] == self.nhi[e]
        return False

    cdef int branch(self, int e, i64 lo_req, i64 hi_req, int depth) except -1:
        cdef int mark = self.trail_top
        if self.tighten(e, lo_req, hi_req) != 0:
            if self.propagate():
                if self.rec(depth):
                    return 1
        self.rollback(mark)
        return 0

    cdef int rec(self, int depth) except -1:
        cdef int e
        cdef i64 lo, hi, mid
        self.nodes += 1
        if self.node_limit and self.nodes > self.node_limit:
            raise RuntimeError("flow search node limit exceeded")
        while depth < self.norder and self.fixed(self.order[depth]):
            depth += 1
        if depth == self.norder:
            for e in range(self.m):
                if not self.fixed(e):
                    raise RuntimeError("constraint system leaves an edge undetermined")
            return 1
        # split the domain, low half first: the first solution found is the
        # least one in (edge order, value) lexicographic order
        e = self.order[depth]
        if self.nlo[e] <= self.nhi[e] and self.plo[e] <= self.phid[e]:
            if self.branch(e, self.nlo[e], self.nhi[e], depth):
                return 1
            return self.branch(e, self.plo[e], self.phid[e], depth)
        if self.nlo[e] <= self.nhi[e]:
            lo = self.nlo[e]
            hi = self.nhi[e]
        else:
            lo = self.plo[e]
            hi = self.phid[e]
        mid = lo + (hi - lo) / 2
        if self.branch(e, lo, mid, depth):
            return 1
        return self.branch(e, mid + 1, hi, depth)

    def run(self):
        cdef int ci, e
        for ci in range(self.ncons):
            self.in_queue[ci] = 1
            self.queue[ci] = ci
        self.qhead = 0
        self.qcount = self.ncons
        if not self.propagate():
            return None, 0
        if self.rec(0):
            out = []
            for e in range(self.m):
                out.append(self.plo[e] if self.plo[e] <= self.phid[e] else self.nlo[e])
            return out, self.nodes
        return None, self.nodes


def flow_search(int m, i64 q, i64 big, branch_order, constraints, long long node_limit=0):
    if m == 0:
        return [], 0
    s = _FlowSearcher(m, q, big, branch_order, constraints, node_limit)
    return s.run()


cdef class _Color3:
    cdef signed char[:] avail, trail_prev
    cdef int[:] color, nbr_start, nbr, trail_key, pstack_e, pstack_c
    cdef int m, trail_top, pstack_top

    def __init__(self, int n, int m, eu, ev):
        incident = [[] for _ in range(n)]
        for k in range(m):
            incident[eu[k]].append(k)
            incident[ev[k]].append(k)
        nbrs = [set() for _ in range(m)]
        for v in range(n):
            for a in incident[v]:
                for c in incident[v]:
                    if a != c:
                        nbrs[a].add(c)
        self.m = m
        total = sum(len(x) for x in nbrs)
        nbr_start = np.zeros(m + 1, dtype=np.int32)
        nbr = np.zeros(max(total, 1), dtype=np.int32)
        i = 0
        for e in range(m):
            nbr_start[e] = i
            for c in sorted(nbrs[e]):
                nbr[i] = c
                i += 1
        nbr_start[m] = i
        self.nbr_start = nbr_start
        self.nbr = nbr
        self.avail = np.full(m, 7, dtype=np.int8)
        self.color = np.zeros(m, dtype=np.int32)
        cap = 2 * (total + m) + 8
        self.trail_key = np.zeros(cap, dtype=np.int32)
        self.trail_prev = np.zeros(cap, dtype=np.int8)
        self.trail_top = 0
        self.pstack_e = np.zeros(m + 1, dtype=np.int32)
        self.pstack_c = np.zeros(m + 1, dtype=np.int32)
        self.pstack_top = 0

    cdef bint set_color(self, int e0, int c0):
        cdef int e, c, i, e2, bit, a
        self.pstack_e[0] = e0
        self.pstack_c[0] = c0
        self.pstack_top = 1
        while self.pstack_top > 0:
            self.pstack_top -= 1
            e = self.pstack_e[self.pstack_top]
            c = self.pstack_c[self.pstack_top]
            if self.color[e]:
                if self.color[e] != c:
                    return False
                continue
            self.color[e] = c
            self.trail_key[self.trail_top] = -1 - e
            self.trail_prev[self.trail_top] = 0
            self.trail_top += 1
            bit = 1 << (c - 1)
            for i in range(self.nbr_start[e], self.nbr_start[e + 1]):
                e2 = self.nbr[i]
                if self.color[e2]:
                    if self.color[e2] == c:
                        return False
                    continue
                if self.avail[e2] & bit:
                    self.trail_key[self.trail_top] = e2
                    self.trail_prev[self.trail_top] = self.avail[e2]
                    self.trail_top += 1
                    self.avail[e2] = self.avail[e2] & ~bit
                    a = self.avail[e2]
                    if a == 0:
                        return False
                    if a == 1 or a == 2 or a == 4:
                        if self.pstack_top > self.m:
                            return False
                        self.pstack_e[self.pstack_top] = e2
                        self.pstack_c[self.pstack_top] = 1 if a == 1 else (2 if a == 2 else 3)
                        self.pstack_top += 1
        return True

    cdef void rollback(self, int mark):
        cdef int key
        while self.trail_top > mark:
            self.trail_top -= 1
            key = self.trail_key[self.trail_top]
            if key < 0:
                self.color[-1 - key] = 0
            else:
                self.avail[key] = self.trail_prev[self.trail_top]

    cdef int pick(self):
        cdef int best = -1, best_c = 4, e, c, a
        for e in range(self.m):
            if self.color[e] == 0:
                a = self.avail[e]
                c = (a & 1) + ((a >> 1) & 1) + ((a >> 2) & 1)
                if c < best_c:
                    best = e
                    best_c = c
                    if c <= 1:
                        break
        return best

    cdef int rec(self) except -1:
        cdef int e = self.pick()
        cdef int c, mark
        if e == -1:
            return 1
        for c in range(1, 4):
            if self.avail[e] & (1 << (c - 1)):
                mark = self.trail_top
                if self.set_color(e, c):
                    if self.rec():
                        return 1
                self.rollback(mark)
        return 0

    def run(self):
        if self.rec():
            return [self.color[e] for e in range(self.m)]
        return None


def color3_search(int n, int m, eu, ev):
    if m == 0:
        return []
    return _Color3(n, m, eu, ev).run()


cdef class _Signings:
    cdef u64[:] adj
    cdef i64[:] dom_val, suffix, vals
    cdef int[:] dom_start
    cdef int n, limit
    cdef i64 target
    cdef u64 exempt, pos_mask, neg_mask
    cdef long long pruned, nodes
    cdef list out

    def __init__(self, int n, adj_mask, domains, i64 target_sum, u64 path_exempt_mask, int limit):
        if n > 62:
            raise ValueError("supports n <= 62")
        self.n = n
        self.adj = np.asarray(adj_mask, dtype=np.uint64)
        dom_start = np.zeros(n + 1, dtype=np.int32)
        total = 0
        for v in range(n):
            total += len(domains[v])
            dom_start[v + 1] = total
        self.dom_start = dom_start
        dom_val = np.zeros(total, dtype=np.int64)
        i = 0
        for v in range(n):
            for x in domains[v]:
                dom_val[i] = x
                i += 1
        self.dom_val = dom_val
        suffix = np.zeros(n + 1, dtype=np.int64)
        for v in range(n - 1, -1, -1):
            suffix[v] = suffix[v + 1] + max(abs(x) for x in domains[v])
        self.suffix = suffix
        self.vals = np.zeros(n, dtype=np.int64)
        self.target = target_sum
        self.exempt = path_exempt_mask
        self.limit = limit
        self.pos_mask = 0
        self.neg_mask = 0
        self.pruned = 0
        self.nodes = 0
        self.out = []

    cdef bint creates_path(self, int v, u64 sign_mask):
        cdef u64 same = self.adj[v] & sign_mask & ~self.exempt
        cdef u64 mm, low
        cdef int u, c = 0
        mm = same
        while mm:
            mm &= mm - 1
            c += 1
            if c >= 2:
                return True
        mm = same
        while mm:
            low = mm & (~mm + 1)
            u = _ctz(low)
            mm ^= low
            if self.adj[u] & sign_mask & ~self.exempt & ~((<u64>1) << v):
                return True
        return False

    cdef int rec(self, int v, i64 total_sum) except -1:
        cdef i64 rem, x
        cdef int di
        cdef u64 bit
        cdef bint bad, is_exempt
        self.nodes += 1
        if v == self.n:
            if total_sum == self.target and len(self.out) < self.limit:
                self.out.append(tuple(self.vals[i] for i in range(self.n)))
            return 0
        rem = self.suffix[v]
        if total_sum - rem > self.target or total_sum + rem < self.target:
            return 0
        is_exempt = (self.exempt >> v) & 1
        bit = (<u64>1) << v
        for di in range(self.dom_start[v], self.dom_start[v + 1]):
            x = self.dom_val[di]
            self.vals[v] = x
            bad = False
            if x > 0:
                self.pos_mask |= bit
                if not is_exempt and x == 1:
                    bad = self.creates_path(v, self.pos_mask)
            else:
                self.neg_mask |= bit
                if not is_exempt and x == -1:
                    bad = self.creates_path(v, self.neg_mask)
            if bad:
                self.pruned += 1
            else:
                self.rec(v + 1, total_sum + x)
            if x > 0:
                self.pos_mask &= ~bit
            else:
                self.neg_mask &= ~bit
        return 0

    def run(self):
        self.rec(0, 0)
        return self.out, self.pruned, self.nodes


def enumerate_signings(int n, adj_mask, domains, i64 target_sum, u64 path_exempt_mask, int limit):
    s = _Signings(n, adj_mask, domains, target_sum, path_exempt_mask, limit)
    return s.run()
