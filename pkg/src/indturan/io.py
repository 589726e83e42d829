"""Graph interchange: graph6 (the corpus standard) and plain edge lists."""

from __future__ import annotations

from .graph import Graph, GraphError


class ParseError(ValueError):
    """Malformed graph input; carries the byte offset where parsing failed."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _decode_graph6_size(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed)."""
    if not data:
        raise ParseError("empty graph6 input", 0)
    c = data[0]
    if c == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise ParseError("truncated graph6 size field", len(data))
            n = 0
            for i in range(2, 8):
                b = data[i]
                if not 63 <= b <= 126:
                    raise ParseError(f"invalid graph6 byte {b}", i)
                n = n << 6 | (b - 63)
            return n, 8
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", len(data))
        n = 0
        for i in range(1, 4):
            b = data[i]
            if not 63 <= b <= 126:
                raise ParseError(f"invalid graph6 byte {b}", i)
            n = n << 6 | (b - 63)
        return n, 4
    if not 63 <= c <= 126:
        raise ParseError(f"invalid graph6 header byte {c}", 0)
    return c - 63, 1


def parse_graph6(data: bytes) -> Graph:
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    n, pos = _decode_graph6_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(data) - pos}",
            pos,
        )
    bits = []
    for i in range(pos, len(data)):
        b = data[i]
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b}", i)
        val = b - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", len(data) - 1)
    return Graph(n, edges)


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        header = bytes([n + 63])
    elif n <= 258047:
        header = bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        header = bytes(
            [126, 126]
            + [((n >> shift) & 63) + 63 for shift in range(30, -1, -6)]
        )
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(
        sum(bit << (5 - j) for j, bit in enumerate(bits[i:i + 6])) + 63
        for i in range(0, len(bits), 6)
    )
    return header + body


def parse_edge_list(data: bytes) -> Graph:
    """Whitespace-separated 0-based "u v" pairs; rejects self-loops and
    duplicate entries."""
    tokens = data.split()
    if len(tokens) % 2:
        raise ParseError("odd number of edge-list tokens", len(data))
    pairs = []
    seen = set()
    offset = 0
    for i in range(0, len(tokens), 2):
        try:
            u, v = int(tokens[i]), int(tokens[i + 1])
        except ValueError:
            raise ParseError(f"non-integer token {tokens[i]!r}", offset)
        if u < 0 or v < 0:
            raise ParseError("negative vertex id", offset)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", offset)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", offset)
        seen.add(key)
        pairs.append(key)
        offset += len(tokens[i]) + len(tokens[i + 1]) + 2
    n = 1 + max((max(p) for p in pairs), default=-1)
    return Graph(max(n, 0), pairs)


def emit_edge_list(g: Graph) -> bytes:
    return "\n".join(f"{u} {v}" for u, v in g.edges()).encode() + b"\n"


def parse_graph(data: bytes, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return parse_graph6(data)
    if fmt == "edge-list":
        return parse_edge_list(data)
    raise ParseError(f"unknown format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "graph6") -> bytes:
    if fmt == "graph6":
        return emit_graph6(g) + b"\n"
    if fmt == "edge-list":
        return emit_edge_list(g)
    raise ParseError(f"unknown format {fmt!r}")


def load_graph(path: str, fmt: str = "graph6") -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read(), fmt)
