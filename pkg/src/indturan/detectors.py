"""Certified searches: K_{s,s} subgraphs, induced pattern copies, and the
witness check behind valid induced-Turan constructions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, _bits_to_list


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map from a pattern into a host graph."""

    pattern_order: int
    mapping: tuple[int, ...]
    induced: bool = True

    def __post_init__(self):
        if len(self.mapping) != self.pattern_order:
            raise GraphError("embedding length disagrees with pattern order")
        if len(set(self.mapping)) != self.pattern_order:
            raise GraphError("embedding must be injective")


@dataclass(frozen=True)
class BicliqueCertificate:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        if set(self.side_a) & set(self.side_b):
            return False
        return all(g.has_edge(a, b) for a in self.side_a for b in self.side_b)


@dataclass
class SearchResult:
    """Outcome of a budgeted induced search.

    ``exhausted`` distinguishes a blown node budget from proven absence.
    """

    embedding: Optional[Embedding]
    exhausted: bool = False
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.embedding is not None


@dataclass
class WitnessReport:
    kss_violation: Optional[BicliqueCertificate]
    induced_violations: list[tuple[int, Embedding]]
    inconclusive: bool
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = (
            self.kss_violation is None
            and not self.induced_violations
            and not self.inconclusive
        )


def find_biclique(g: Graph, s: int) -> Optional[BicliqueCertificate]:
    """Any K_{s,s} subgraph (sides disjoint, not necessarily induced).

    Branches over s-subsets of one side in degree order, pruning once the
    common neighborhood drops below s.  Complete: None means no K_{s,s}.
    """
    if s < 1:
        raise GraphError("biclique side size must be >= 1")
    if 2 * s > g.n:
        return None
    cands = [v for v in range(g.n) if g.degree(v) >= s]
    # high degree first: dense vertices are the likely biclique sides
    cands.sort(key=lambda v: (-g.degree(v), v))
    full = (1 << g.n) - 1

    def extend(start: int, chosen: list[int], inter: int, chosen_bits: int):
        if len(chosen) == s:
            others = _bits_to_list(inter & ~chosen_bits)
            if len(others) >= s:
                return BicliqueCertificate(
                    tuple(sorted(chosen)), tuple(sorted(others[:s]))
                )
            return None
        for i in range(start, len(cands)):
            v = cands[i]
            nxt = inter & g.neighbors_bits(v)
            if (nxt & ~(chosen_bits | 1 << v)).bit_count() < s:
                continue
            res = extend(i + 1, chosen + [v], nxt, chosen_bits | 1 << v)
            if res is not None:
                return res
        return None

    return extend(0, [], full, 0)


def _pattern_order(h: Graph) -> list[int]:
    """Order pattern vertices so each (after the first) touches a placed one
    when possible; most-constrained first."""
    if h.n == 0:
        return []
    order = []
    placed = set()
    remaining = set(range(h.n))
    while remaining:
        def score(v):
            back = sum(1 for u in order if h.has_edge(u, v))
            return (-back, -h.degree(v), v)
        v = min(remaining, key=score)
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def find_induced(
    g: Graph, h: Graph, limit: Optional[int] = None
) -> SearchResult:
    """Backtracking search for an induced copy of h in g.

    ``limit`` caps the number of candidate placements tried; hitting it
    yields exhausted=True instead of a (false) proof of absence.
    """
    if h.n < 1:
        raise GraphError("pattern must be non-empty")
    if h.n > g.n:
        return SearchResult(None)
    order = _pattern_order(h)
    full = (1 << g.n) - 1
    nodes = [0]

    def backtrack(k: int, images: list[int], used: int) -> Optional[list[int]]:
        if k == h.n:
            return images
        hv = order[k]
        cand = full & ~used
        for i in range(k):
            hu = order[i]
            gu_bits = g.neighbors_bits(images[i])
            if h.has_edge(hu, hv):
                cand &= gu_bits
            else:
                cand &= ~gu_bits
        needed = h.degree(hv)
        for v in _bits_to_list(cand):
            if g.degree(v) < needed:
                continue
            nodes[0] += 1
            if limit is not None and nodes[0] > limit:
                raise _Exhausted
            res = backtrack(k + 1, images + [v], used | 1 << v)
            if res is not None:
                return res
        return None

    try:
        images = backtrack(0, [], 0)
    except _Exhausted:
        return SearchResult(None, exhausted=True, nodes=nodes[0])
    if images is None:
        return SearchResult(None, nodes=nodes[0])
    mapping = [0] * h.n
    for hv, gv in zip(order, images):
        mapping[hv] = gv
    return SearchResult(Embedding(h.n, tuple(mapping), induced=True), nodes=nodes[0])


class _Exhausted(Exception):
    pass


def verify_embedding(g: Graph, h: Graph, e: Embedding) -> bool:
    """Pure check of injectivity and the (induced) adjacency condition."""
    if e.pattern_order != h.n:
        raise GraphError("embedding order disagrees with pattern")
    if len(set(e.mapping)) != h.n:
        return False
    for u, v in itertools.combinations(range(h.n), 2):
        himg = g.has_edge(e.mapping[u], e.mapping[v])
        if h.has_edge(u, v):
            if not himg:
                return False
        elif e.induced and himg:
            return False
    return True


def witness_check(
    g: Graph,
    family: list[Graph],
    s: int,
    limit: Optional[int] = None,
) -> WitnessReport:
    """Certify that g avoids K_{s,s} and every induced family member."""
    for h in family:
        if h.n == 0:
            raise GraphError("family members must be non-empty")
    kss = find_biclique(g, s)
    violations = []
    inconclusive = False
    for idx, h in enumerate(family):
        res = find_induced(g, h, limit=limit)
        if res.found:
            violations.append((idx, res.embedding))
        elif res.exhausted:
            inconclusive = True
    return WitnessReport(kss, violations, inconclusive)
