"""Undirected multigraph with stable vertex and edge indices.

Vertices are dense integers ``0..n-1``; edge identity is positional (edge k
is the k-th ``(u, v)`` pair).  Parallel edges are allowed, loops are not.
Everything is immutable after construction, so graphs and vertex sets can be
shared freely.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class VertexSet:
    """Subset of the vertices of an n-vertex graph, backed by a bitmask.

    A VertexSet is bound to a specific vertex count; mixing sets of
    different sizes raises ValueError.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0 or mask >> n:
            raise ValueError(f"mask out of range for n={n}")
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range [0, {n})")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"vertex sets bound to different sizes: {self.n} != {other.n}")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VertexSet) and self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.mask & ((1 << self.n) - 1))

    def add(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")
        return VertexSet(self.n, self.mask | (1 << v))

    def is_proper(self) -> bool:
        """Neither empty nor the full vertex set."""
        return self.mask != 0 and self.mask != (1 << self.n) - 1


class Graph:
    """Immutable undirected multigraph."""

    __slots__ = ("n", "edges", "adjacency", "degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edge_list = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            edge_list.append((u, v))
        self.n = n
        self.edges = tuple(edge_list)
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for k, (u, v) in enumerate(self.edges):
            adjacency[u].append((v, k))
            adjacency[v].append((u, k))
        self.adjacency = tuple(tuple(a) for a in adjacency)
        self.degrees = tuple(len(a) for a in self.adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def _bind(self, s: VertexSet) -> None:
        if s.n != self.n:
            raise ValueError(f"vertex set bound to n={s.n}, graph has n={self.n}")

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees)

    def boundary(self, s: VertexSet) -> tuple[int, list[int]]:
        """Cut size and the crossing edge indices for the vertex set s."""
        self._bind(s)
        mask = s.mask
        crossing = [
            k for k, (u, v) in enumerate(self.edges)
            if ((mask >> u) & 1) != ((mask >> v) & 1)
        ]
        return len(crossing), crossing

    def components_within(self, s: VertexSet) -> list[VertexSet]:
        """Connected components of the subgraph induced by s."""
        self._bind(s)
        seen = 0
        parts = []
        for start in s:
            if (seen >> start) & 1:
                continue
            comp = 0
            stack = [start]
            seen |= 1 << start
            while stack:
                v = stack.pop()
                comp |= 1 << v
                for w, _ in self.adjacency[v]:
                    if w in s and not (seen >> w) & 1:
                        seen |= 1 << w
                        stack.append(w)
            parts.append(VertexSet(self.n, comp))
        return parts

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(self.components_within(VertexSet.full(self.n))) == 1

    def contract(self, x: VertexSet) -> tuple["Graph", list[int]]:
        """Merge all vertices of x into one new vertex.

        Loops produced by the merge are deleted, parallel edges are kept.
        Returns the contracted graph and the old-to-new vertex map; vertices
        outside x keep their relative order, the merged vertex comes last.
        """
        self._bind(x)
        if x.mask == 0:
            raise ValueError("cannot contract an empty vertex set")
        vmap = []
        new_index = 0
        for v in range(self.n):
            if v in x:
                vmap.append(-1)
            else:
                vmap.append(new_index)
                new_index += 1
        merged = new_index  # the merged vertex takes the last new index
        for v in range(self.n):
            if vmap[v] == -1:
                vmap[v] = merged
        new_edges = []
        for u, v in self.edges:
            nu, nv = vmap[u], vmap[v]
            if nu != nv:
                new_edges.append((nu, nv))
        return Graph(merged + 1, new_edges), vmap

    def is_bridgeless(self) -> bool:
        """True iff no edge of the graph is a cut edge."""
        visited = [False] * self.n
        disc = [0] * self.n
        low = [0] * self.n
        timer = 0
        for root in range(self.n):
            if visited[root] or not self.adjacency[root]:
                continue
            # iterative DFS carrying the incoming edge index
            stack = [(root, -1, 0)]
            visited[root] = True
            disc[root] = low[root] = timer = timer + 1
            while stack:
                v, in_edge, ptr = stack[-1]
                if ptr < len(self.adjacency[v]):
                    stack[-1] = (v, in_edge, ptr + 1)
                    w, k = self.adjacency[v][ptr]
                    if k == in_edge:
                        continue
                    if visited[w]:
                        low[v] = min(low[v], disc[w])
                    else:
                        visited[w] = True
                        timer += 1
                        disc[w] = low[w] = timer
                        stack.append((w, k, 0))
                else:
                    stack.pop()
                    if stack:
                        parent = stack[-1][0]
                        low[parent] = min(low[parent], low[v])
                        if low[v] > disc[parent]:
                            return False
        return True

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for w, _ in self.adjacency[v]:
                    if color[w] == -1:
                        color[w] = color[v] ^ 1
                        queue.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    def neighbor_masks(self) -> list[int]:
        """Per-vertex neighbourhood bitmask (multiplicity collapsed)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
