"""Exact counting of closed-walk homomorphisms, induced trees and cycles,
induced 2-paths, and the thin/thick 4-cycle split.

All counts are exact Python integers; adjacency-power traces overflow
64-bit arithmetic already at modest sizes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, _bits_to_list, codegree


class BudgetExceeded(RuntimeError):
    """An exact enumeration outgrew its node budget."""


@dataclass
class WalkClassification:
    """Partition of closed 2l-walks into degenerate / induced / chorded."""

    length: int
    total: int
    degenerate: int
    induced_cycle: int
    chorded: int
    mode: str  # "exact" or "sampled"
    sample_size: Optional[int] = None
    seed: Optional[int] = None

    def proportions(self) -> tuple[float, float, float]:
        base = self.total if self.mode == "exact" else self.sample_size
        if not base:
            return (0.0, 0.0, 0.0)
        return (
            self.degenerate / base,
            self.induced_cycle / base,
            self.chorded / base,
        )


@dataclass
class C4Stats:
    induced_c4_count: int
    thin_count: int
    thick_count: int
    threshold: float


@dataclass
class TwoPathTally:
    """Induced 2-path counts indexed by midpoint and by endpoint pair."""

    per_vertex: dict[int, int]
    per_pair: dict[tuple[int, int], int]

    def total_by_vertex(self) -> int:
        return sum(self.per_vertex.values())

    def total_by_pair(self) -> int:
        return sum(self.per_pair.values())


def _walks_to(g: Graph, target: int, steps: int) -> list[list[int]]:
    """vecs[r][u] = number of r-step walks from u to target, r = 0..steps."""
    vec = [0] * g.n
    vec[target] = 1
    vecs = [vec]
    for _ in range(steps):
        prev = vecs[-1]
        vec = [sum(prev[w] for w in g.neighbors(u)) for u in range(g.n)]
        vecs.append(vec)
    return vecs


def hom_closed_walks(g: Graph, k: int) -> int:
    """Number of closed k-walks: the trace of the k-th adjacency power."""
    if k < 1:
        raise GraphError("walk length must be >= 1")
    total = 0
    for v in range(g.n):
        total += _walks_to(g, v, k)[k][v]
    return total


def walk_count(g: Graph, u: int, v: int, l: int) -> int:
    """Entry (u, v) of the l-th adjacency power."""
    g._check_vertex(u)
    g._check_vertex(v)
    if l < 0:
        raise GraphError("walk length must be >= 0")
    return _walks_to(g, v, l)[l][u]


def _classify_walk(g: Graph, walk: tuple[int, ...]) -> str:
    verts = set(walk)
    if len(verts) < len(walk):
        return "degenerate"
    sub_edges = sum(
        1 for a, b in itertools.combinations(verts, 2) if g.has_edge(a, b)
    )
    return "induced_cycle" if sub_edges == len(walk) else "chorded"


def classify_closed_walks(
    g: Graph,
    l: int,
    mode: str = "exact",
    sample_size: int = 1000,
    seed: int = 0,
    budget: Optional[int] = 10**7,
) -> WalkClassification:
    """Classify closed 2l-walks exactly or by exactly-uniform sampling.

    Sampling draws a start vertex weighted by the diagonal of the 2l-th
    adjacency power, then extends stepwise by the ratio of remaining walk
    counts, so every closed walk is equally likely (no rejection).
    """
    if l < 1:
        raise GraphError("half-length must be >= 1")
    k = 2 * l
    if mode == "exact":
        counts = {"degenerate": 0, "induced_cycle": 0, "chorded": 0}
        seen = [0]

        def dfs(walk: list[int]):
            if len(walk) == k:
                if g.has_edge(walk[-1], walk[0]):
                    seen[0] += 1
                    if budget is not None and seen[0] > budget:
                        raise BudgetExceeded(
                            f"more than {budget} closed {k}-walks"
                        )
                    counts[_classify_walk(g, tuple(walk))] += 1
                return
            for w in g.neighbors(walk[-1]):
                dfs(walk + [w])

        for v in range(g.n):
            dfs([v])
        total = sum(counts.values())
        return WalkClassification(
            k, total, counts["degenerate"], counts["induced_cycle"],
            counts["chorded"], "exact",
        )

    if mode != "sampled":
        raise GraphError(f"unknown mode {mode!r}")
    if sample_size < 1:
        raise GraphError("sample size must be >= 1")
    rng = random.Random(seed)
    diag = [_walks_to(g, v, k)[k][v] for v in range(g.n)]
    total = sum(diag)
    if total == 0:
        return WalkClassification(k, 0, 0, 0, 0, "sampled", sample_size, seed)
    vec_cache: dict[int, list[list[int]]] = {}
    counts = {"degenerate": 0, "induced_cycle": 0, "chorded": 0}
    for _ in range(sample_size):
        r = rng.randrange(total)
        start = 0
        while r >= diag[start]:
            r -= diag[start]
            start += 1
        if start not in vec_cache:
            vec_cache[start] = _walks_to(g, start, k)
        vecs = vec_cache[start]
        walk = [start]
        for remaining in range(k - 1, 0, -1):
            u = walk[-1]
            r = rng.randrange(vecs[remaining + 1][u])
            for w in g.neighbors(u):
                if r < vecs[remaining][w]:
                    walk.append(w)
                    break
                r -= vecs[remaining][w]
        counts[_classify_walk(g, tuple(walk))] += 1
    return WalkClassification(
        k, total, counts["degenerate"], counts["induced_cycle"],
        counts["chorded"], "sampled", sample_size, seed,
    )


def count_labeled_induced(
    g: Graph, h: Graph, budget: Optional[int] = 10**7
) -> int:
    """Number of injections h -> g preserving adjacency both ways."""
    if h.n < 1:
        raise GraphError("pattern must be non-empty")
    if h.n > g.n:
        return 0
    full = (1 << g.n) - 1
    nodes = [0]

    def backtrack(k: int, images: list[int], used: int) -> int:
        if k == h.n:
            return 1
        cand = full & ~used
        for i in range(k):
            bits = g.neighbors_bits(images[i])
            cand &= bits if h.has_edge(i, k) else ~bits
        count = 0
        for v in _bits_to_list(cand):
            nodes[0] += 1
            if budget is not None and nodes[0] > budget:
                raise BudgetExceeded("induced-count enumeration budget hit")
            count += backtrack(k + 1, images + [v], used | 1 << v)
        return count

    return backtrack(0, [], 0)


def _induced_c4_diagonals(g: Graph):
    """Yield (u, v, x, y): induced 4-cycle u-x-v-y with diagonals {u,v},{x,y},
    emitted exactly once (u minimal, x < y)."""
    for u in range(g.n):
        nu = g.neighbors_bits(u)
        for v in range(u + 1, g.n):
            if nu >> v & 1:
                continue
            common = _bits_to_list(nu & g.neighbors_bits(v))
            for i, x in enumerate(common):
                if x < u:
                    continue  # this cycle is emitted from its other diagonal
                for y in common[i + 1:]:
                    if not g.has_edge(x, y):
                        yield (u, v, x, y)


def count_induced_c4(g: Graph, method: str = "fast") -> int:
    """Unlabeled induced 4-cycle count.

    The fast path counts nonadjacent midpoint pairs per nonadjacent diagonal
    and halves (each cycle owns exactly two diagonals); the oracle path
    enumerates 4-subsets directly.
    """
    if method == "subsets":
        count = 0
        for quad in itertools.combinations(range(g.n), 4):
            sub = [
                (a, b)
                for a, b in itertools.combinations(quad, 2)
                if g.has_edge(a, b)
            ]
            if len(sub) == 4 and all(
                sum(1 for e in sub if q in e) == 2 for q in quad
            ):
                count += 1
        return count
    if method != "fast":
        raise GraphError(f"unknown method {method!r}")
    doubled = 0
    for u in range(g.n):
        nu = g.neighbors_bits(u)
        for v in range(u + 1, g.n):
            if nu >> v & 1:
                continue
            common = nu & g.neighbors_bits(v)
            cnt = common.bit_count()
            inner_edges = 0
            for x in _bits_to_list(common):
                inner_edges += (common & g.neighbors_bits(x)).bit_count()
            inner_edges //= 2
            doubled += cnt * (cnt - 1) // 2 - inner_edges
    assert doubled % 2 == 0
    return doubled // 2


def thin_thick_stats(g: Graph, tau: float) -> C4Stats:
    """Split induced 4-cycles by whether both diagonal codegrees are <= tau."""
    if tau < 0:
        raise GraphError("threshold must be >= 0")
    thin = thick = 0
    for u, v, x, y in _induced_c4_diagonals(g):
        if codegree(g, (u, v)) <= tau and codegree(g, (x, y)) <= tau:
            thin += 1
        else:
            thick += 1
    return C4Stats(thin + thick, thin, thick, tau)


def two_path_tally(g: Graph) -> TwoPathTally:
    """Count induced 2-paths by midpoint and by (nonadjacent) endpoint pair."""
    per_vertex: dict[int, int] = {}
    for v in range(g.n):
        nb = g.neighbors_bits(v)
        deg = nb.bit_count()
        inner = sum(
            (nb & g.neighbors_bits(x)).bit_count() for x in _bits_to_list(nb)
        ) // 2
        per_vertex[v] = deg * (deg - 1) // 2 - inner
    per_pair: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        nu = g.neighbors_bits(u)
        for v in range(u + 1, g.n):
            if nu >> v & 1:
                continue
            cnt = (nu & g.neighbors_bits(v)).bit_count()
            if cnt:
                per_pair[(u, v)] = cnt
    return TwoPathTally(per_vertex, per_pair)
