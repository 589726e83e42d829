import itertools
from fractions import Fraction

import pytest

from indturan.graph import Graph, codegree
from indturan.generators import (
    LiftSpec,
    ParameterError,
    RootedTree,
    are_isomorphic,
    canonical_key,
    clique_blowup,
    complete,
    cycle,
    density,
    lift,
    lift_family,
    path,
    polarity_graph,
    prism,
    theta,
)
from conftest import FIG2_ROOTED, FIG2_SPEC, random_graph


def test_theta_small_shape():
    tg = theta(2, 2)
    assert tg.graph == cycle(4) or are_isomorphic(tg.graph, cycle(4))
    assert tg.terminals == (0, 1)
    assert not tg.graph.has_edge(0, 1)


def test_theta_rejects_short_paths():
    with pytest.raises(ParameterError):
        theta(1, 3)
    with pytest.raises(ParameterError):
        theta(3, 1)


def test_prism_rejects_short_cycles():
    with pytest.raises(ParameterError):
        prism(2)


def test_prism_structure():
    g = prism(3)
    assert g.n == 6 and g.edge_count == 9
    # rungs form a perfect matching
    for i in range(3):
        assert g.has_edge(i, 3 + i)


def test_rooted_tree_validation():
    tree = path(4)
    with pytest.raises(ParameterError):
        RootedTree(tree, frozenset({0, 1}))  # roots not independent
    with pytest.raises(ParameterError):
        RootedTree(tree, frozenset())
    with pytest.raises(ParameterError):
        RootedTree(cycle(4), frozenset({0}))
    rt = RootedTree(tree, frozenset({0, 3}))
    assert rt.non_roots == [1, 2]


def test_lift_spec_validation():
    with pytest.raises(ParameterError):
        LiftSpec(frozenset(), 0)
    with pytest.raises(ParameterError):
        LiftSpec(frozenset({1, 2, 3}), 2).validate(FIG2_ROOTED)  # not proper
    with pytest.raises(ParameterError):
        LiftSpec(frozenset({0}), 2).validate(FIG2_ROOTED)  # root in S


def test_lift_figure_two_counts():
    lg = lift(FIG2_ROOTED, FIG2_SPEC)
    assert lg.graph.n == 9
    assert lg.graph.edge_count == 10
    shared = [v for v, j in lg.labels if j is None]
    assert shared == [0, 3, 4]


def test_lift_density():
    assert density(FIG2_ROOTED) == Fraction(4, 3)


def test_lift_p1_is_tree():
    lg = lift(FIG2_ROOTED, LiftSpec(frozenset(), 1))
    assert are_isomorphic(lg.graph, path(5))


def test_lift_family_enumerates_proper_subsets():
    fam = lift_family(FIG2_ROOTED, 2)
    # subsets of {1,2,3} except the full set
    assert len(fam) == 7
    for spec, lg in fam:
        copies = spec.p
        free = 3 - len(spec.s)
        assert lg.graph.n == 2 + len(spec.s) + copies * free
        assert lg.graph.edge_count <= copies * 4


def test_lift_family_dedup_drops_isomorphic():
    fam = lift_family(FIG2_ROOTED, 2, dedup=True)
    keys = [canonical_key(lg.graph) for _, lg in fam]
    assert len(keys) == len(set(keys))
    assert len(fam) < 7  # S={1} and S={3} give isomorphic lifts


def test_clique_blowup_counts():
    g0 = cycle(5)
    bg = clique_blowup(g0, 3)
    assert bg.graph.n == 15
    assert bg.graph.edge_count == 5 * 3 + 5 * 9
    for blob in bg.blobs:
        for a, b in itertools.combinations(blob, 2):
            assert bg.graph.has_edge(a, b)


def test_blowup_factor_one_is_identity():
    g0 = random_graph(8, 0.4, 1)
    assert clique_blowup(g0, 1).graph == g0


def test_polarity_graph_basic_facts():
    for q in (3, 5):
        g = polarity_graph(q)
        assert g.n == q * q + q + 1
        assert g.edge_count == q * (q + 1) ** 2 // 2
        assert all(g.degree(v) in (q, q + 1) for v in range(g.n))
        # C4-free: every pair has at most one common neighbor
        assert all(
            codegree(g, (u, v)) <= 1
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )


def test_polarity_rejects_composite_order():
    with pytest.raises(ParameterError):
        polarity_graph(4)
    with pytest.raises(ParameterError):
        polarity_graph(9)  # prime power, not supported


def test_isomorphism_check():
    g = cycle(5)
    relabeled = Graph(5, [(4, 3), (3, 2), (2, 1), (1, 0), (0, 4)])
    assert are_isomorphic(g, relabeled)
    assert not are_isomorphic(cycle(6), path(6))
    assert not are_isomorphic(complete(4), cycle(4))
    # same degree sequence, different graphs
    assert not are_isomorphic(
        Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]), cycle(6)
    )


def test_canonical_key_invariant_under_relabeling():
    g = random_graph(7, 0.4, 5)
    perm = [3, 1, 6, 0, 4, 2, 5]
    h = Graph(7, [(perm[u], perm[v]) for u, v in g.edges()])
    assert canonical_key(g) == canonical_key(h)
