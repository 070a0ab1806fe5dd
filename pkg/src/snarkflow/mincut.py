"""Exact integer max-flow / min-cut (Dinic) on tiny networks.

Used by the cut oracle: capacities are exact integers (Python ints), and the
minimal / maximal minimum-cut source sides are read off the final residual
network.
"""

from __future__ import annotations


class MaxFlow:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        k = len(self.to)
        self.head[u].append(k)
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(k + 1)
        self.to.append(u)
        self.cap.append(0)
        return k

    def _bfs(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for k in self.head[v]:
                if self.cap[k] > 0 and level[self.to[k]] < 0:
                    level[self.to[k]] = level[v] + 1
                    queue.append(self.to[k])
        return level if level[t] >= 0 else None

    def _dfs(self, v: int, t: int, f: int, level: list[int], it: list[int]) -> int:
        if v == t:
            return f
        while it[v] < len(self.head[v]):
            k = self.head[v][it[v]]
            w = self.to[k]
            if self.cap[k] > 0 and level[w] == level[v] + 1:
                d = self._dfs(w, t, min(f, self.cap[k]), level, it)
                if d > 0:
                    self.cap[k] -= d
                    self.cap[k ^ 1] += d
                    return d
            it[v] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._bfs(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                f = self._dfs(s, t, 1 << 62, level, it)
                if f == 0:
                    break
                total += f

    def reachable_from(self, s: int) -> set[int]:
        """Residual reachability from s: the minimal min-cut source side."""
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for k in self.head[v]:
                w = self.to[k]
                if self.cap[k] > 0 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def reaching_to(self, t: int) -> set[int]:
        """Vertices with a residual path to t; complement = maximal source side."""
        seen = {t}
        stack = [t]
        while stack:
            v = stack.pop()
            for k in self.head[v]:
                # edge into v with residual capacity: its pair k^1 leaves v
                if self.cap[k ^ 1] > 0 and self.to[k] not in seen:
                    seen.add(self.to[k])
                    stack.append(self.to[k])
        return seen
