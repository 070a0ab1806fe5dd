"""graph6 codec and the JSON multigraph format.

graph6 (bit-exact, 6-bit chunks, printable offset 63) encodes simple graphs
only; multigraphs travel as ``{"n": int, "edges": [[u, v], ...]}`` JSON.
The codec preserves vertex order; it does not canonicalize.
"""

from __future__ import annotations

import json

from .graphs import Graph


class Graph6Error(ValueError):
    pass


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 line")
    b0 = data[0]
    if b0 == 126:  # '~': multi-byte length form
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("truncated 8-byte size header")
            vals = [c - 63 for c in data[2:8]]
            if any(v < 0 or v > 63 for v in vals):
                raise Graph6Error("size byte out of range")
            n = 0
            for v in vals:
                n = (n << 6) | v
            return n, 8
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header")
        vals = [c - 63 for c in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise Graph6Error("size byte out of range")
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        if n < 63:
            raise Graph6Error(f"non-canonical size header for n={n}")
        return n, 4
    n = b0 - 63
    if n < 0 or n > 62:
        raise Graph6Error(f"bad size byte {b0}")
    return n, 1


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise Graph6Error("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        out = [126, 126]
        for shift in range(30, -1, -6):
            out.append(((n >> shift) & 63) + 63)
        return bytes(out)
    raise Graph6Error("vertex count too large for graph6")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph (vertex order as encoded)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 line")
    if s[0] in ":;&":
        raise Graph6Error(f"not a graph6 header: {s[0]!r} starts a different format")
    data = s.encode("ascii")
    n, offset = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[offset:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(f"bit field has {len(body)} bytes, expected {expected}")
    bits = 0
    for c in body:
        v = c - 63
        if v < 0 or v > 63:
            raise Graph6Error(f"byte {c} out of graph6 range")
        bits = (bits << 6) | v
    pad = expected * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    edges = []
    # column-major upper triangle: bit order (0,1), (0,2), (1,2), (0,3), ...
    idx = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if idx >= 0 and (bits >> idx) & 1:
                edges.append((u, v))
            idx -= 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a simple graph as a graph6 line."""
    if not g.is_simple():
        raise Graph6Error("graph6 cannot encode parallel edges")
    n = g.n
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = True
    nbits = n * (n - 1) // 2
    bits = 0
    for v in range(1, n):
        for u in range(v):
            bits = (bits << 1) | (1 if adj[u][v] else 0)
    nbytes = (nbits + 5) // 6
    bits <<= nbytes * 6 - nbits
    body = bytes(((bits >> (6 * (nbytes - 1 - i))) & 63) + 63 for i in range(nbytes))
    return (_encode_size(n) + body).decode("ascii")


def graph_to_json(g: Graph, labels: dict[int, str] | None = None) -> str:
    doc: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges]}
    if labels is not None:
        doc["labels"] = [labels[v] for v in range(g.n)]
    return json.dumps(doc)


def graph_from_json(text: str) -> Graph:
    doc = json.loads(text)
    try:
        n = int(doc["n"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise Graph6Error(f"malformed JSON graph: {exc}") from exc
    return Graph(n, edges)


def load_graph(text: str) -> Graph:
    """Accept either a graph6 line or the JSON edge-list format."""
    s = text.strip()
    if s.startswith("{"):
        return graph_from_json(s)
    return parse_graph6(s)
