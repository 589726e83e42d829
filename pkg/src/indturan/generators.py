"""Constructors for theta graphs, prisms, rooted-tree lifts, clique blowups,
and dense C4-free polarity graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .graph import Graph, GraphError, is_connected, is_tree


class ParameterError(ValueError):
    """Generator parameter outside its valid range."""


class ThetaGraph(NamedTuple):
    graph: Graph
    terminals: tuple[int, int]


class BlowupGraph(NamedTuple):
    graph: Graph
    blobs: list[list[int]]  # blobs[v] = vertices of the clique replacing v


class LiftGraph(NamedTuple):
    graph: Graph
    # labels[i] = (tree vertex, copy index); copy index is None on R u S
    labels: list[tuple[int, Optional[int]]]


@dataclass(frozen=True)
class RootedTree:
    """A tree with an independent, nonempty, proper root set."""

    tree: Graph
    roots: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "roots", frozenset(self.roots))
        if not is_tree(self.tree):
            raise ParameterError("rooted tree requires a connected acyclic graph")
        for r in self.roots:
            self.tree._check_vertex(r)
        if not (1 <= len(self.roots) < self.tree.n):
            raise ParameterError("need at least one root and one non-root")
        for u, v in itertools.combinations(sorted(self.roots), 2):
            if self.tree.has_edge(u, v):
                raise ParameterError("root set must be independent")

    @property
    def non_roots(self) -> list[int]:
        return [v for v in range(self.tree.n) if v not in self.roots]


@dataclass(frozen=True)
class LiftSpec:
    """Gluing set S (a proper subset of the non-roots) and multiplicity p."""

    s: frozenset[int]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "s", frozenset(self.s))
        if self.p < 1:
            raise ParameterError("lift multiplicity must be >= 1")

    def validate(self, rt: RootedTree) -> None:
        non_roots = set(rt.non_roots)
        if not self.s <= non_roots:
            raise ParameterError("S must consist of non-root vertices")
        if self.s == non_roots:
            raise ParameterError("S must be a proper subset of the non-roots")


def theta(l: int, t: int) -> ThetaGraph:
    """Theta graph: t internally disjoint l-edge paths joining two terminals."""
    if l < 2:
        raise ParameterError("path length must be >= 2 (l=1 creates multi-edges)")
    if t < 2:
        raise ParameterError("need at least 2 paths")
    edges = []
    nxt = 2
    for _ in range(t):
        prev = 0
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return ThetaGraph(Graph(nxt, edges), (0, 1))


def prism(l: int) -> Graph:
    """Two disjoint l-cycles joined by a perfect matching."""
    if l < 3:
        raise ParameterError("prism requires cycle length >= 3")
    edges = []
    for i in range(l):
        j = (i + 1) % l
        edges.append((i, j))
        edges.append((l + i, l + j))
        edges.append((i, l + i))
    return Graph(2 * l, edges)


def cycle(l: int) -> Graph:
    if l < 3:
        raise ParameterError("cycle length must be >= 3")
    return Graph(l, [(i, (i + 1) % l) for i in range(l)])


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def lift(rt: RootedTree, spec: LiftSpec) -> LiftGraph:
    """The (p; S)-lift: p copies of the tree glued along R u S."""
    spec.validate(rt)
    shared = rt.roots | spec.s
    labels: list[tuple[int, Optional[int]]] = []
    index: dict[tuple[int, Optional[int]], int] = {}
    for v in sorted(shared):
        index[(v, None)] = len(labels)
        labels.append((v, None))
    for j in range(spec.p):
        for v in range(rt.tree.n):
            if v not in shared:
                index[(v, j)] = len(labels)
                labels.append((v, j))

    def vid(v: int, j: int) -> int:
        return index[(v, None)] if v in shared else index[(v, j)]

    edges = set()
    for u, v in rt.tree.edges():
        for j in range(spec.p):
            a, b = vid(u, j), vid(v, j)
            edges.add((min(a, b), max(a, b)))
    return LiftGraph(Graph(len(labels), edges), labels)


def lift_family(
    rt: RootedTree, p: int, dedup: bool = False
) -> list[tuple[LiftSpec, LiftGraph]]:
    """All (p; S)-lifts as S ranges over proper subsets of the non-roots."""
    if p < 1:
        raise ParameterError("lift multiplicity must be >= 1")
    non_roots = rt.non_roots
    out = []
    seen_keys = set()
    for size in range(len(non_roots)):
        for combo in itertools.combinations(non_roots, size):
            spec = LiftSpec(frozenset(combo), p)
            lg = lift(rt, spec)
            if dedup:
                key = canonical_key(lg.graph)
                if key in seen_keys:
                    continue
                seen_keys.add(key)
            out.append((spec, lg))
    return out


def density(rt: RootedTree) -> Fraction:
    """Edge count over non-root count, exact."""
    return Fraction(rt.tree.edge_count, rt.tree.n - len(rt.roots))


def clique_blowup(g0: Graph, t: int) -> BlowupGraph:
    """Replace each vertex by a t-clique; base edges become full t x t joins."""
    if t < 1:
        raise ParameterError("blowup factor must be >= 1")
    blobs = [list(range(v * t, (v + 1) * t)) for v in range(g0.n)]
    edges = []
    for blob in blobs:
        edges.extend(itertools.combinations(blob, 2))
    for u, v in g0.edges():
        edges.extend((a, b) for a in blobs[u] for b in blobs[v])
    return BlowupGraph(Graph(g0.n * t, edges), blobs)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def polarity_graph(q: int) -> Graph:
    """Orthogonal polarity graph of the projective plane over F_q, q prime.

    Vertices are the q^2+q+1 projective points; two distinct points are
    adjacent when their dot product vanishes mod q.  The result is
    K_{2,2}-free with q(q+1)^2/2 edges and degrees in {q, q+1}.
    """
    if not _is_prime(q):
        raise ParameterError(f"{q} is not prime (prime powers unsupported)")
    points = [(1, b, c) for b in range(q) for c in range(q)]
    points += [(0, 1, c) for c in range(q)]
    points.append((0, 0, 1))
    edges = []
    for i, p in enumerate(points):
        for j in range(i + 1, len(points)):
            r = points[j]
            if (p[0] * r[0] + p[1] * r[1] + p[2] * r[2]) % q == 0:
                edges.append((i, j))
    return Graph(len(points), edges)


def canonical_key(g: Graph):
    """Canonical form usable as an isomorphism-invariant dictionary key.

    Backtracking over vertex orderings grouped by degree, keeping the
    lexicographically smallest adjacency encoding.  Intended for the small
    graphs that appear in lift families.
    """
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    best: list[Optional[tuple]] = [None]

    def encode_step(order: list[int], v: int) -> tuple:
        return tuple(1 if g.has_edge(v, u) else 0 for u in order)

    def extend(order: list[int], prefix: tuple, remaining: set[int]):
        if best[0] is not None and prefix > best[0][: len(prefix)]:
            return
        if not remaining:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        # lowest degree first keeps candidate sets small
        dmin = min(degs[v] for v in remaining)
        for v in sorted(remaining):
            if degs[v] != dmin:
                continue
            extend(order + [v], prefix + encode_step(order, v), remaining - {v})

    extend([], (), set(range(n)))
    return (n, tuple(sorted(degs)), best[0])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_key(g) == canonical_key(h)
