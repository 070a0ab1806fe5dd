"""Shared test helpers: small reference graphs and random cubic graphs."""

from __future__ import annotations

import random

from snarkflow.graphs import Graph


def girth(g: Graph) -> int:
    best = 10 ** 9
    for start in range(g.n):
        dist = {start: 0}
        parent_edge = {start: -1}
        queue = [start]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w, k in g.adjacency[v]:
                if k == parent_edge[v]:
                    continue
                if w in dist:
                    best = min(best, dist[v] + dist[w] + 1)
                else:
                    dist[w] = dist[v] + 1
                    parent_edge[w] = k
                    queue.append(w)
    return best


def random_cubic(n: int, rng: random.Random, bridgeless: bool = True) -> Graph:
    """Random simple connected cubic graph on n vertices (pairing model)."""
    assert n % 2 == 0 and n >= 4
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        seen = set()
        ok = True
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if u == v or key in seen:
                ok = False
                break
            seen.add(key)
        if not ok:
            continue
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        if bridgeless and not g.is_bridgeless():
            continue
        return g


def prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                     (0, 3), (1, 4), (2, 5)])


def wagner() -> Graph:
    """Moebius-Kantor 8-vertex cubic graph (cycle plus diameters)."""
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return Graph(8, edges)
