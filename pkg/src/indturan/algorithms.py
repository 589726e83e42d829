"""Constructive pipelines: almost-regularization, greedy induced-tree
embedding, the vector selection lemma, and the lift / theta / prism
assembly searches.

The analysis behind these procedures uses constants far beyond any graph
we can build (e.g. edge-density prefactors like (l*t)^(20*s), rich-set
sizes like (16*l^2*s)^(8*l+10), or q = (2p)^s * s * t^(2s-1)).  Those
formulas are recorded here as documentation; every runnable default is a
desk-scale value supplied through PipelineConfig.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .counters import walk_count
from .detectors import Embedding, find_biclique, find_induced, verify_embedding
from .generators import LiftSpec, RootedTree, lift, prism, theta
from .graph import (
    Graph,
    GraphError,
    _bits_to_list,
    average_degree,
    codegree,
    degree_profile,
    is_k_almost_regular,
    is_tree,
)


@dataclass
class PipelineConfig:
    """Desk-scale knobs for the assembly pipelines.

    Documented analysis values (never used as runnable defaults):
      beta    = 1 - 1/(3s)
      q       = (2p)^s * s * t^(2s-1)
      tau     = C * g(s) * d^(2/3), g(s) = f(s)^(1/l), f(s) = (l*t)^(20*s)
      rich c1 = c2 = (16 * l^2 * s)^(8l+10)
      eps     = 1/512, lambda = s * 80^s * l^(2s), delta = 1/(100*lambda^2)
      C       > (l*t)^(100*l) for theta, > l^(100*l) for prisms
    """

    s: int = 2
    l: int = 2
    t: int = 2
    p: int = 2
    q: int = 4
    tau: Optional[float] = None  # None: d^(2/3)
    beta: Optional[float] = None  # None: 1 - 1/(3s)
    path_budget: int = 10_000
    node_budget: int = 200_000
    trials: int = 50
    seed: int = 0

    def __post_init__(self):
        if min(self.s, self.l, self.t, self.p, self.q) < 1:
            raise GraphError("pipeline parameters must be positive")
        if self.beta is not None and not (0 < self.beta < 1):
            raise GraphError("beta must lie in (0, 1)")

    def beta_value(self) -> float:
        return self.beta if self.beta is not None else 1 - 1 / (3 * self.s)

    def beta_threshold(self, g: Graph) -> float:
        return float(average_degree(g)) ** self.beta_value()

    def resolve_tau(self, g: Graph) -> float:
        if self.tau is not None:
            return self.tau
        return float(average_degree(g)) ** (2 / 3)


# ---------------------------------------------------------------------------
# Almost-regularization


@dataclass
class RegularizationResult:
    success: bool
    vertex_set: list[int]
    subgraph: Optional[Graph]
    achieved_k: Optional[Fraction]
    iterations: int
    log: list[dict]
    failure_reason: Optional[str] = None


def almost_regularize(
    g: Graph, alpha: float, c: float, trials: int = 50, seed: int = 0
) -> RegularizationResult:
    """Extract a K-almost-regular dense induced subgraph, K = 2^(4/alpha+2).

    Iteratively restricts to a high-degree core: while the heavy vertices
    carry most edges, keep the highest-degree block A_i plus the best of
    `trials` random blocks B_i, then clean up degree outliers.  The random
    block stands in for the expectation argument; acceptance is the
    expectation floor, so a success certificate never depends on luck.
    """
    if not (0 < alpha < 1):
        raise GraphError("alpha must lie in (0, 1)")
    if c <= 0:
        raise GraphError("C must be positive")
    rng = random.Random(seed)
    k_prime = 2 ** (4 / alpha)
    big_k = 4 * k_prime

    if g.edge_count < c * g.n ** (1 + alpha):
        return RegularizationResult(
            False, [], None, None, 0, [],
            failure_reason="hypothesis failure: e(G) < C * n^(1+alpha)",
        )

    current = sorted(range(g.n))
    log: list[dict] = []
    i = 0
    while True:
        sub = g.subgraph(current)
        n_i = sub.n
        heavy_cut = 2**i * k_prime * c * n_i**alpha
        heavy = [u for u in range(n_i) if sub.degree(u) >= heavy_cut]
        heavy_sum = sum(sub.degree(u) for u in heavy)
        stop_cut = 2 ** (i - 1) * c * n_i ** (1 + alpha)
        entry = {
            "n_i": n_i,
            "heavy_threshold": heavy_cut,
            "heavy_degree_sum": heavy_sum,
            "stop_threshold": stop_cut,
        }
        if heavy_sum < stop_cut:
            log.append(entry)
            break
        size = max(1, int(n_i / (2 * k_prime)))
        by_degree = sorted(range(n_i), key=lambda u: (-sub.degree(u), u))
        a_set = set(by_degree[:size])
        floor = 2 ** (i + 1) * c * (n_i / k_prime) ** (1 + alpha)
        best_b: Optional[set[int]] = None
        best_edges = -1
        for _ in range(trials):
            b_set = set(rng.sample(range(n_i), size))
            m_ab = sub.subgraph(sorted(a_set | b_set)).edge_count
            if m_ab > best_edges:
                best_edges = m_ab
                best_b = b_set
        entry.update({"a_size": size, "best_block_edges": best_edges})
        log.append(entry)
        if best_edges < floor:
            return RegularizationResult(
                False, [], None, None, i, log,
                failure_reason=(
                    f"sampling failure: best block has {best_edges} edges, "
                    f"expectation floor is {floor:.3f}"
                ),
            )
        current = sorted(current[u] for u in a_set | best_b)
        i += 1

    k = i
    sub = g.subgraph(current)
    n_k = sub.n
    heavy_cut = 2**k * k_prime * c * n_k**alpha
    low_cut = 2 ** (k - 2) * c * n_k**alpha
    keep = [u for u in range(n_k) if sub.degree(u) < heavy_cut]
    while keep:
        h = sub.subgraph(keep)  # keep stays sorted, so h vertex j is keep[j]
        drop = {keep[j] for j in range(h.n) if h.degree(j) <= low_cut}
        if not drop:
            break
        keep = [u for u in keep if u not in drop]

    if not keep:
        return RegularizationResult(
            False, [], None, None, k, log,
            failure_reason="cleanup removed every vertex",
        )
    final_vertices = sorted(current[u] for u in keep)
    h = g.subgraph(final_vertices)
    prof = degree_profile(h)
    achieved = (
        Fraction(prof.max_degree, prof.min_degree)
        if prof.min_degree
        else None
    )
    checks = [
        (prof.min_degree > low_cut, "min degree below 2^(k-2) C n_k^alpha"),
        (prof.max_degree < heavy_cut, "max degree above 2^k K' C n_k^alpha"),
        (
            h.edge_count >= (c / 4) * h.n ** (1 + alpha),
            "e(H) < (C/4) m^(1+alpha)",
        ),
        (is_k_almost_regular(h, big_k), "Delta(H) > 4K' delta(H)"),
    ]
    for ok, reason in checks:
        if not ok:
            return RegularizationResult(
                False, final_vertices, h, achieved, k, log,
                failure_reason=reason,
            )
    return RegularizationResult(True, final_vertices, h, achieved, k, log)


# ---------------------------------------------------------------------------
# Greedy induced-tree embedding


def bad_neighbor_set(g: Graph, v: int, threshold: float) -> list[int]:
    """Vertices whose codegree with v reaches the threshold."""
    if threshold < 0:
        raise GraphError("threshold must be >= 0")
    g._check_vertex(v)
    nv = g.neighbors_bits(v)
    return [
        u
        for u in range(g.n)
        if u != v and (nv & g.neighbors_bits(u)).bit_count() >= threshold
    ]


def bfs_leaf_order(tree: Graph, root: int = 0) -> list[int]:
    """BFS ordering: every prefix induces a subtree ending in a leaf."""
    if not is_tree(tree):
        raise GraphError("input must be a tree")
    tree._check_vertex(root)
    order = [root]
    seen = {root}
    queue = [root]
    while queue:
        u = queue.pop(0)
        for v in tree.neighbors(u):
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    return order


@dataclass
class GreedyEmbedResult:
    embedding: Optional[Embedding]
    failed_step: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.embedding is not None


def _tree_parents(tree: Graph, order: list[int]) -> list[Optional[int]]:
    """parents[k] = index in `order` of the unique earlier tree-neighbor."""
    pos = {v: k for k, v in enumerate(order)}
    parents: list[Optional[int]] = [None]
    for k in range(1, len(order)):
        earlier = [pos[u] for u in tree.neighbors(order[k]) if pos[u] < k]
        if len(earlier) != 1:
            raise GraphError("ordering violates the leaf-prefix property")
        parents.append(earlier[0])
    return parents


def _candidate_set(
    g: Graph,
    placed: list[int],
    parent_idx: int,
    bad_sets: list[int],
) -> int:
    """Bitset of valid images for the next tree vertex.

    Neighbors of the parent image, minus every placed vertex, minus all
    earlier neighborhoods (inducedness), minus all bad-neighbor sets.
    """
    cand = g.neighbors_bits(placed[parent_idx])
    for i, v in enumerate(placed):
        cand &= ~(1 << v)
        cand &= ~bad_sets[i]
        if i != parent_idx:
            cand &= ~g.neighbors_bits(v)
    return cand


def greedy_tree_embed(
    g: Graph,
    tree: Graph,
    beta_threshold: float,
    seed: int = 0,
    root: int = 0,
) -> GreedyEmbedResult:
    """One-pass random greedy embedding of an induced tree copy."""
    order = bfs_leaf_order(tree, root)
    parents = _tree_parents(tree, order)
    rng = random.Random(seed)
    bad_bits_cache: dict[int, int] = {}

    def bad_bits(v: int) -> int:
        if v not in bad_bits_cache:
            bits = 0
            for u in bad_neighbor_set(g, v, beta_threshold):
                bits |= 1 << u
            bad_bits_cache[v] = bits
        return bad_bits_cache[v]

    if g.n == 0:
        return GreedyEmbedResult(None, failed_step=0)
    placed = [rng.randrange(g.n)]
    bads = [bad_bits(placed[0])]
    for k in range(1, tree.n):
        cand = _candidate_set(g, placed, parents[k], bads)
        options = _bits_to_list(cand)
        if not options:
            return GreedyEmbedResult(None, failed_step=k)
        v = options[rng.randrange(len(options))]
        placed.append(v)
        bads.append(bad_bits(v))
    mapping = [0] * tree.n
    for tv, gv in zip(order, placed):
        mapping[tv] = gv
    return GreedyEmbedResult(Embedding(tree.n, tuple(mapping), induced=True))


@dataclass
class TreeEnumeration:
    count: int
    embeddings: Optional[list[Embedding]]
    exhausted: bool


def enumerate_tree_embeddings(
    g: Graph,
    tree: Graph,
    beta_threshold: float,
    budget: Optional[int] = None,
    collect: bool = False,
    root: int = 0,
) -> TreeEnumeration:
    """Exhaustive DFS over the greedy candidate schema.

    Every emitted embedding is induced; the count certifies a lower bound
    on the labeled induced copy count.
    """
    order = bfs_leaf_order(tree, root)
    parents = _tree_parents(tree, order)
    bad_bits_cache: dict[int, int] = {}

    def bad_bits(v: int) -> int:
        if v not in bad_bits_cache:
            bits = 0
            for u in bad_neighbor_set(g, v, beta_threshold):
                bits |= 1 << u
            bad_bits_cache[v] = bits
        return bad_bits_cache[v]

    found: list[Embedding] = []
    count = [0]
    steps = [0]
    exhausted = [False]

    def emit(placed: list[int]):
        count[0] += 1
        if collect:
            mapping = [0] * tree.n
            for tv, gv in zip(order, placed):
                mapping[tv] = gv
            found.append(Embedding(tree.n, tuple(mapping), induced=True))

    def dfs(placed: list[int], bads: list[int]):
        if exhausted[0]:
            return
        if len(placed) == tree.n:
            emit(placed)
            return
        k = len(placed)
        cand = _candidate_set(g, placed, parents[k], bads)
        for v in _bits_to_list(cand):
            steps[0] += 1
            if budget is not None and steps[0] > budget:
                exhausted[0] = True
                return
            dfs(placed + [v], bads + [bad_bits(v)])

    for v0 in range(g.n):
        dfs([v0], [bad_bits(v0)])
        if exhausted[0]:
            break
    return TreeEnumeration(count[0], found if collect else None, exhausted[0])


# ---------------------------------------------------------------------------
# Selection lemma


@dataclass
class SelectionResult:
    chosen: list[int]  # indices into the input list
    verdicts: list[str]  # per position: "all-same" or "pairwise-distinct"
    value_sets: list[set]
    guaranteed: bool  # input met the N(t, q) floor
    success: bool


def selection_floor(t: int, q: int) -> int:
    """Minimum input size for which selection is guaranteed."""
    return math.factorial(t) ** 2 * q ** (t + 1)


def select_regular(vectors: Sequence[Sequence], q: int) -> SelectionResult:
    """Pick q vectors that agree or fully differ at each position.

    Recursion: a popular value at some position pins it (filter and drop
    the position); otherwise fix a vector and delete everything sharing an
    entry with it, q times.  Below the guaranteed floor the same procedure
    runs best-effort and flags the result.
    """
    if not vectors:
        raise GraphError("need at least one vector")
    t = len(vectors[0])
    if q < 1 or t < 1:
        raise GraphError("t and q must be positive")
    for vec in vectors:
        if len(vec) != t:
            raise GraphError("vectors must share one length")
        if len(set(vec)) != t:
            raise GraphError("vector entries must be pairwise distinct")
    guaranteed = len(vectors) >= selection_floor(t, q)

    def solve(idxs: list[int], active: list[int]) -> Optional[list[int]]:
        ta = len(active)
        if ta == 1:
            pos = active[0]
            groups: dict = {}
            for i in idxs:
                groups.setdefault(vectors[i][pos], []).append(i)
            for value in sorted(groups, key=repr):
                if len(groups[value]) >= q:
                    return groups[value][:q]
            if len(groups) >= q:
                picks = sorted(groups, key=repr)[:q]
                return [groups[v][0] for v in picks]
            return None
        m_prev = selection_floor(ta - 1, q)
        for pos in active:
            tally: dict = {}
            for i in idxs:
                tally[vectors[i][pos]] = tally.get(vectors[i][pos], 0) + 1
            popular = [v for v, c in sorted(tally.items(), key=lambda kv: repr(kv[0])) if c >= m_prev]
            if popular:
                v0 = popular[0]
                kept = [i for i in idxs if vectors[i][pos] == v0]
                rest = [a for a in active if a != pos]
                return solve(kept, rest)
        # fix-and-delete
        chosen: list[int] = []
        pool = list(idxs)
        while pool and len(chosen) < q:
            pick = pool[0]
            chosen.append(pick)
            taken = {vectors[pick][a] for a in active}
            pool = [
                i
                for i in pool
                if not taken & {vectors[i][a] for a in active}
            ]
        if len(chosen) == q:
            return chosen
        # best effort below the floor: pin the most popular value at any
        # position once it covers q vectors, backtracking over positions
        for pos in active:
            tally = {}
            for i in idxs:
                tally[vectors[i][pos]] = tally.get(vectors[i][pos], 0) + 1
            for v0, c in sorted(tally.items(), key=lambda kv: (-kv[1], repr(kv[0]))):
                if c < q:
                    break
                kept = [i for i in idxs if vectors[i][pos] == v0]
                rest = [a for a in active if a != pos]
                res = solve(kept, rest)
                if res is not None:
                    return res
        return None

    chosen = solve(list(range(len(vectors))), list(range(t)))
    if chosen is None:
        return SelectionResult([], [], [], guaranteed, False)
    verdicts = []
    value_sets = []
    ok = True
    for pos in range(t):
        vals = [vectors[i][pos] for i in chosen]
        if len(set(vals)) == 1:
            verdicts.append("all-same")
        elif len(set(vals)) == len(vals):
            verdicts.append("pairwise-distinct")
        else:
            verdicts.append("invalid")
            ok = False
        value_sets.append(set(vals))
    for a, b in itertools.combinations(range(t), 2):
        if value_sets[a] & value_sets[b]:
            ok = False
    return SelectionResult(chosen, verdicts, value_sets, guaranteed, ok)


# ---------------------------------------------------------------------------
# Lift assembly


@dataclass
class LiftSearchResult:
    spec: Optional[LiftSpec]
    embedding: Optional[Embedding]
    failure_stage: Optional[str] = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.embedding is not None


def _union_is_induced(g: Graph, tree: Graph, map_a, map_b) -> bool:
    """Whether two induced tree copies union to an induced subgraph."""
    verts = sorted(set(map_a) | set(map_b))
    expected = set()
    for u, v in tree.edges():
        expected.add(frozenset((map_a[u], map_a[v])))
        expected.add(frozenset((map_b[u], map_b[v])))
    for a, b in itertools.combinations(verts, 2):
        if g.has_edge(a, b) != (frozenset((a, b)) in expected):
            return False
    return True


def find_induced_lift(
    g: Graph, rt: RootedTree, p: int, cfg: PipelineConfig
) -> LiftSearchResult:
    """Locate an induced (p; S)-lift of the rooted tree in g.

    Pipeline: enumerate induced tree copies, pigeonhole on the root
    orientation, regularize intersections with the selection lemma, then
    extract a conflict-free subfamily whose union is the lift.
    """
    if cfg.q < p:
        raise GraphError("config q must be at least p")
    beta_thr = cfg.beta_threshold(g)
    enum = enumerate_tree_embeddings(
        g, rt.tree, beta_thr, budget=cfg.node_budget, collect=True
    )
    if not enum.embeddings:
        return LiftSearchResult(
            None, None, "enumeration",
            {"copies": 0, "exhausted": enum.exhausted},
        )
    roots = sorted(rt.roots)
    groups: dict[tuple[int, ...], list[Embedding]] = {}
    for emb in enum.embeddings:
        key = tuple(emb.mapping[r] for r in roots)
        groups.setdefault(key, []).append(emb)
    key = max(groups, key=lambda k: (len(groups[k]), k))
    copies = groups[key]
    non_roots = rt.non_roots
    if p == 1:
        spec = LiftSpec(frozenset(), 1)
        pattern = lift(rt, spec)
        images = [copies[0].mapping[v] for v, _ in pattern.labels]
        emb = Embedding(pattern.graph.n, tuple(images), induced=True)
        if not verify_embedding(g, pattern.graph, emb):
            return LiftSearchResult(None, None, "verification", {"p": 1})
        return LiftSearchResult(spec, emb)
    # selection acts on the non-root images; the roots agree by construction
    vectors = [tuple(emb.mapping[w] for w in non_roots) for emb in copies]
    selection = select_regular(vectors, cfg.q)
    if not selection.success:
        return LiftSearchResult(
            None, None, "selection",
            {
                "group_size": len(copies),
                "floor": selection_floor(len(non_roots), cfg.q),
            },
        )
    chosen = [copies[i] for i in selection.chosen]
    s_set = frozenset(
        w
        for pos, w in enumerate(non_roots)
        if selection.verdicts[pos] == "all-same"
    )
    if s_set == set(non_roots):
        return LiftSearchResult(
            None, None, "selection",
            {"reason": "all copies coincide on every non-root"},
        )
    conflict = {
        (i, j)
        for i, j in itertools.combinations(range(len(chosen)), 2)
        if not _union_is_induced(g, rt.tree, chosen[i].mapping, chosen[j].mapping)
    }
    # greedy minimum-degree independent set
    alive = set(range(len(chosen)))
    independent: list[int] = []
    adj = {i: set() for i in alive}
    for i, j in conflict:
        adj[i].add(j)
        adj[j].add(i)
    while alive:
        v = min(alive, key=lambda i: (len(adj[i] & alive), i))
        independent.append(v)
        alive -= adj[v] | {v}
    if len(independent) < p:
        return LiftSearchResult(
            None, None, "independent-set",
            {"conflict_edges": len(conflict), "independent": len(independent)},
        )
    picked = [chosen[i] for i in sorted(independent[:p])]
    spec = LiftSpec(s_set, p)
    pattern = lift(rt, spec)
    images = []
    for tree_vertex, copy_idx in pattern.labels:
        if copy_idx is None:
            images.append(picked[0].mapping[tree_vertex])
        else:
            images.append(picked[copy_idx].mapping[tree_vertex])
    try:
        emb = Embedding(pattern.graph.n, tuple(images), induced=True)
    except GraphError:
        return LiftSearchResult(None, None, "assembly", {"reason": "collision"})
    if not verify_embedding(g, pattern.graph, emb):
        return LiftSearchResult(
            None, None, "verification", {"spec": (sorted(s_set), p)}
        )
    return LiftSearchResult(spec, emb)


# ---------------------------------------------------------------------------
# Theta assembly


@dataclass
class ThetaSearchResult:
    embedding: Optional[Embedding]
    exhausted: bool = False
    diagnostics: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.embedding is not None


def _induced_paths(
    g: Graph, u: int, v: int, l: int, cap: int
) -> tuple[list[tuple[int, ...]], bool]:
    """Induced l-edge paths from u to v (interior tuples), capped."""
    paths: list[tuple[int, ...]] = []
    capped = [False]

    def dfs(seq: list[int]):
        if capped[0]:
            return
        last = seq[-1]
        if len(seq) == l:
            if g.has_edge(last, v):
                if len(paths) >= cap:
                    capped[0] = True
                    return
                paths.append(tuple(seq[1:]))
            return
        for w in g.neighbors(last):
            if w == v or w in seq:
                continue
            # induced path: w may touch only its predecessor (and u if first)
            if any(g.has_edge(w, x) for x in seq[:-1]):
                continue
            if len(seq) < l - 1 and g.has_edge(w, v):
                continue
            dfs(seq + [w])

    dfs([u])
    return paths, capped[0]


def find_induced_theta(
    g: Graph, l: int, t: int, cfg: PipelineConfig
) -> ThetaSearchResult:
    """Assemble an induced theta graph from pairwise-compatible paths.

    Pairs are visited in decreasing l-walk count (rich pairs carry the
    thetas); paths are compatible when their union is an induced 2l-cycle,
    and a t-clique in the compatibility graph is the theta.
    """
    if l < 2 or t < 2:
        raise GraphError("theta requires l >= 2 and t >= 2")
    pattern = theta(l, t)
    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    pairs.sort(key=lambda uv: (-walk_count(g, uv[0], uv[1], l), uv))
    any_capped = False
    for u, v in pairs:
        paths, capped = _induced_paths(g, u, v, l, cfg.path_budget)
        any_capped = any_capped or capped
        if len(paths) < t:
            continue
        compatible = [[False] * len(paths) for _ in paths]
        for i, pi in enumerate(paths):
            set_i = set(pi)
            for j in range(i + 1, len(paths)):
                pj = paths[j]
                if set_i & set(pj):
                    continue
                if any(g.has_edge(a, b) for a in pi for b in pj):
                    continue
                compatible[i][j] = compatible[j][i] = True
        clique = _find_clique(compatible, t)
        if clique is None:
            continue
        images = [u, v]
        for idx in clique:
            images.extend(paths[idx])
        emb = Embedding(pattern.graph.n, tuple(images), induced=True)
        if verify_embedding(g, pattern.graph, emb):
            return ThetaSearchResult(emb, exhausted=any_capped)
    return ThetaSearchResult(None, exhausted=any_capped)


def _find_clique(adj: list[list[bool]], size: int) -> Optional[list[int]]:
    """First clique of the given size, vertices in index order."""
    n = len(adj)

    def extend(chosen: list[int], candidates: list[int]) -> Optional[list[int]]:
        if len(chosen) == size:
            return chosen
        if len(chosen) + len(candidates) < size:
            return None
        for idx, v in enumerate(candidates):
            nxt = [w for w in candidates[idx + 1:] if adj[v][w]]
            res = extend(chosen + [v], nxt)
            if res is not None:
                return res
        return None

    return extend([], list(range(n)))


# ---------------------------------------------------------------------------
# Rich-set extraction (thick 4-cycle route)


@dataclass
class RichSetResult:
    vertex_set: Optional[list[int]]
    audit: dict

    @property
    def found(self) -> bool:
        return self.vertex_set is not None


def _thick_pair_count(g: Graph, x: int, y: int, tau: float) -> int:
    """Pairs (z, w) completing edge xy to an induced 4-cycle x-y-z-w with
    diagonal codegree deg(x, z) >= tau."""
    count = 0
    for z in g.neighbors(y):
        if z == x or g.has_edge(x, z):
            continue
        if codegree(g, (x, z)) < tau:
            continue
        for w in g.neighbors(x):
            if w in (y, z) or g.has_edge(y, w) or not g.has_edge(z, w):
                continue
            count += 1
    return count


def find_rich_set(
    g: Graph,
    tau: float,
    c1: int,
    c2: int,
    trials: int = 50,
    seed: int = 0,
) -> RichSetResult:
    """Extract X with every 3-subset codegree >= c1, via thick 4-cycles.

    Follows the dependent-random-choice shape: anchor the edge richest in
    thick 4-cycles, sample a binomial subset of the high-codegree side,
    intersect with a random anchor neighbor, and delete one vertex per
    deficient triple.  The returned set is always audited exhaustively.
    """
    if tau <= 0 or c1 <= 0 or c2 <= 0:
        raise GraphError("tau, c1, c2 must be positive")
    best_edge = None
    best_count = 0
    for x, y in g.edges():
        for a, b in ((x, y), (y, x)):
            cnt = _thick_pair_count(g, a, b, tau)
            if cnt > best_count:
                best_count = cnt
                best_edge = (a, b)
    audit: dict = {"anchor_edge": best_edge, "thick_pair_count": best_count}
    if best_edge is None:
        audit["reason"] = "no thick 4-cycle at this threshold"
        return RichSetResult(None, audit)
    x, y = best_edge
    side_a = g.neighbors(x)
    side_b = [
        z
        for z in g.neighbors(y)
        if z != x and codegree(g, (x, z)) >= tau
    ]
    e_ab = sum(
        (g.neighbors_bits(b) & _to_bits(side_a)).bit_count() for b in side_b
    )
    audit.update({"side_a": len(side_a), "side_b": len(side_b), "e_ab": e_ab})
    if e_ab == 0:
        audit["reason"] = "no edges between the anchor sides"
        return RichSetResult(None, audit)
    prob = min(1.0, 2 * c2 * len(side_a) / e_ab)
    rng = random.Random(seed)
    best_score = -1
    for trial in range(trials):
        sampled = [b for b in side_b if rng.random() < prob]
        v = side_a[rng.randrange(len(side_a))]
        pool = [b for b in sampled if g.has_edge(v, b)]
        bad = [
            triple
            for triple in itertools.combinations(sorted(pool), 3)
            if codegree(g, triple) < c1
        ]
        score = len(pool) - len(bad)
        if score > best_score:
            best_score = score
        if score < c2:
            continue
        removed: set[int] = set()
        for triple in bad:
            if not removed & set(triple):
                removed.add(max(triple))
        x_set = sorted(set(pool) - removed)
        if len(x_set) < c2:
            continue
        if all(
            codegree(g, triple) >= c1
            for triple in itertools.combinations(x_set, 3)
        ):
            audit.update({"trial": trial, "pool": len(pool), "bad": len(bad)})
            return RichSetResult(x_set, audit)
    audit.update({"best_score": best_score, "trials": trials, "seed": seed})
    return RichSetResult(None, audit)


def _to_bits(vertices) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


# ---------------------------------------------------------------------------
# Prism assembly (thin 4-cycle route)


def _thin_square(g: Graph, a: int, b: int, w: int, z: int, tau: float) -> bool:
    """Whether a-b-w-z is a thin induced 4-cycle (diagonals {a,w}, {b,z})."""
    if len({a, b, w, z}) < 4:
        return False
    if not (
        g.has_edge(a, b)
        and g.has_edge(b, w)
        and g.has_edge(w, z)
        and g.has_edge(z, a)
    ):
        return False
    if g.has_edge(a, w) or g.has_edge(b, z):
        return False
    return codegree(g, (a, w)) <= tau and codegree(g, (b, z)) <= tau


def find_induced_prism(
    g: Graph,
    l: int,
    cfg: PipelineConfig,
    fallback: bool = False,
) -> ThetaSearchResult:
    """Search for an induced prism over two l-cycles.

    Walks the auxiliary graph whose vertices are edges of g and whose
    edges are thin induced 4-cycles; an l-cycle there with all endpoints
    distinct and no stray chords is the prism.  With ``fallback`` set, a
    plain induced-subgraph search is used instead.
    """
    if l < 3:
        raise GraphError("prism requires cycle length >= 3")
    pattern = prism(l)
    if fallback:
        res = find_induced(g, pattern, limit=cfg.node_budget)
        return ThetaSearchResult(res.embedding, res.exhausted)
    tau = cfg.resolve_tau(g)
    edges = list(g.edges())
    steps = [0]
    exhausted = [False]

    def extend(
        tops: list[int], bottoms: list[int], used: int
    ) -> Optional[tuple[list[int], list[int]]]:
        if exhausted[0]:
            return None
        if len(tops) == l:
            a0, b0 = tops[0], bottoms[0]
            ak, bk = tops[-1], bottoms[-1]
            if _thin_square(g, ak, bk, b0, a0, tau):
                return tops, bottoms
            return None
        ak, bk = tops[-1], bottoms[-1]
        for z, w in itertools.product(g.neighbors(ak), g.neighbors(bk)):
            if used >> z & 1 or used >> w & 1 or z == w:
                continue
            if not g.has_edge(z, w):
                continue
            steps[0] += 1
            if steps[0] > cfg.node_budget:
                exhausted[0] = True
                return None
            if not _thin_square(g, ak, bk, w, z, tau):
                continue
            # no chords back to anything before the previous rung
            earlier = [x for x in tops[:-1] + bottoms[:-1]]
            if len(tops) == l - 1:
                allowed = {tops[0], bottoms[0]}
                earlier = [x for x in earlier if x not in allowed]
            if any(g.has_edge(z, x) or g.has_edge(w, x) for x in earlier):
                continue
            res = extend(tops + [z], bottoms + [w], used | 1 << z | 1 << w)
            if res is not None:
                return res
        return None

    for a, b in edges:
        for a0, b0 in ((a, b), (b, a)):
            res = extend([a0], [b0], 1 << a0 | 1 << b0)
            if res is not None:
                tops, bottoms = res
                emb = Embedding(
                    pattern.n, tuple(tops + bottoms), induced=True
                )
                if verify_embedding(g, pattern, emb):
                    return ThetaSearchResult(emb, exhausted[0])
            if exhausted[0]:
                return ThetaSearchResult(None, True)
    return ThetaSearchResult(None, exhausted[0])


# ---------------------------------------------------------------------------
# Hypothesis predicates for the conditional supersaturation bounds


def supersaturation_hypotheses(g: Graph, s: int, t: int, k: float) -> bool:
    """K-almost-regular, K_{s,s}-free, and d >= (4Kt)^(6s) * s^3."""
    if not is_k_almost_regular(g, k):
        return False
    if find_biclique(g, s) is not None:
        return False
    return float(average_degree(g)) >= (4 * k * t) ** (6 * s) * s**3
