"""Immutable simple-graph representation with bitset adjacency rows.

Vertices are the integers 0..n-1.  Each adjacency row is a Python int used
as a bitset, so neighborhood intersections (the workhorse of every codegree
query) are single big-int AND operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or query input."""


def _bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


class Graph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("n", "_rows", "edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        self.n = n
        rows = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not rows[u] >> v & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                m += 1
        self._rows = tuple(rows)
        self.edge_count = m

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def neighbors_bits(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v]

    def neighbors(self, v: int) -> list[int]:
        return _bits_to_list(self.neighbors_bits(v))

    def degree(self, v: int) -> int:
        return self.neighbors_bits(v).bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self._rows[u] >> (u + 1) << (u + 1)
            for v in _bits_to_list(row):
                yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on the given vertices, relabeled 0..k-1."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        edges = [
            (index[u], index[v])
            for i, u in enumerate(verts)
            for v in verts[i + 1:]
            if self._rows[u] >> v & 1
        ]
        return Graph(len(verts), edges)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DegreeProfile:
    """Minimum, maximum, and exact average degree of a graph."""

    min_degree: int
    max_degree: int
    avg_degree: Fraction


def common_neighborhood(g: Graph, s: Iterable[int]) -> list[int]:
    """Vertices outside s adjacent to every member of s.

    For s empty this is all of V: the adjacency condition is vacuous.
    """
    s = list(s)
    full = (1 << g.n) - 1
    bits = full
    s_bits = 0
    for u in s:
        g._check_vertex(u)
        s_bits |= 1 << u
        bits &= g.neighbors_bits(u)
    return _bits_to_list(bits & ~s_bits)


def codegree(g: Graph, s: Iterable[int]) -> int:
    """Size of the common neighborhood of s."""
    return len(common_neighborhood(g, s))


def degree_profile(g: Graph) -> DegreeProfile:
    """Exact degree extremes and average; rejects the empty graph."""
    if g.n == 0:
        raise GraphError("degree profile of the empty graph is undefined")
    degs = [g.degree(v) for v in range(g.n)]
    return DegreeProfile(min(degs), max(degs), Fraction(2 * g.edge_count, g.n))


def average_degree(g: Graph) -> Fraction:
    if g.n == 0:
        raise GraphError("average degree of the empty graph is undefined")
    return Fraction(2 * g.edge_count, g.n)


def is_k_almost_regular(g: Graph, k) -> bool:
    """True iff the maximum degree is at most k times the minimum degree."""
    prof = degree_profile(g)
    return prof.max_degree <= k * prof.min_degree


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.neighbors(u):
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        new = g.neighbors_bits(u) & ~seen
        seen |= new
        stack.extend(_bits_to_list(new))
    return seen == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)
