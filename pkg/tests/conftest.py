import random

import pytest

from indturan.graph import Graph
from indturan.generators import (
    RootedTree,
    LiftSpec,
    clique_blowup,
    complete,
    complete_bipartite,
    cycle,
    lift,
    path,
    polarity_graph,
    prism,
    theta,
)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform-ish random tree: attach each vertex to an earlier one."""
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


FIG2_TREE = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
FIG2_ROOTED = RootedTree(FIG2_TREE, frozenset({0, 4}))
FIG2_SPEC = LiftSpec(frozenset({3}), 3)


def build_corpus() -> list[tuple[str, Graph]]:
    return [
        ("theta_2_2", theta(2, 2).graph),
        ("theta_3_3", theta(3, 3).graph),
        ("theta_4_2", theta(4, 2).graph),
        ("prism_3", prism(3)),
        ("prism_4", prism(4)),
        ("prism_6", prism(6)),
        ("cycle_6", cycle(6)),
        ("cycle_7", cycle(7)),
        ("path_5", path(5)),
        ("complete_5", complete(5)),
        ("complete_bipartite_3_3", complete_bipartite(3, 3)),
        ("polarity_3", polarity_graph(3)),
        ("polarity_5", polarity_graph(5)),
        ("blowup_c7_2", clique_blowup(cycle(7), 2).graph),
        ("lift_fig2", lift(FIG2_ROOTED, FIG2_SPEC).graph),
        ("random_12", random_graph(12, 0.3, 7)),
        ("random_16", random_graph(16, 0.25, 11)),
    ]


CORPUS = build_corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS
