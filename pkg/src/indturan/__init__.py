"""Constructions, certified detectors, exact counters, and embedding
pipelines for graphs that avoid K_{s,s} subgraphs and prescribed induced
subgraphs."""

from .graph import (
    DegreeProfile,
    Graph,
    GraphError,
    average_degree,
    codegree,
    common_neighborhood,
    degree_profile,
    is_bipartite,
    is_connected,
    is_k_almost_regular,
    is_tree,
)
from .generators import (
    BlowupGraph,
    LiftGraph,
    LiftSpec,
    ParameterError,
    RootedTree,
    ThetaGraph,
    are_isomorphic,
    canonical_key,
    clique_blowup,
    complete,
    complete_bipartite,
    cycle,
    density,
    lift,
    lift_family,
    path,
    polarity_graph,
    prism,
    theta,
)
from .detectors import (
    BicliqueCertificate,
    Embedding,
    SearchResult,
    WitnessReport,
    find_biclique,
    find_induced,
    verify_embedding,
    witness_check,
)
from .counters import (
    BudgetExceeded,
    C4Stats,
    TwoPathTally,
    WalkClassification,
    classify_closed_walks,
    count_induced_c4,
    count_labeled_induced,
    hom_closed_walks,
    thin_thick_stats,
    two_path_tally,
    walk_count,
)
from .algorithms import (
    GreedyEmbedResult,
    LiftSearchResult,
    PipelineConfig,
    RegularizationResult,
    RichSetResult,
    SelectionResult,
    ThetaSearchResult,
    TreeEnumeration,
    almost_regularize,
    bad_neighbor_set,
    bfs_leaf_order,
    enumerate_tree_embeddings,
    find_induced_lift,
    find_induced_prism,
    find_induced_theta,
    find_rich_set,
    greedy_tree_embed,
    select_regular,
    selection_floor,
    supersaturation_hypotheses,
)
from .io import (
    ParseError,
    emit_edge_list,
    emit_graph,
    emit_graph6,
    load_graph,
    parse_edge_list,
    parse_graph,
    parse_graph6,
)

__version__ = "0.1.0"
