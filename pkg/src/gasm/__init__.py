"""Attributed graph matching by iterative score propagation, with baselines,
quality metrics, generators, and a reproducible benchmark harness."""

from .attributes import (
    CATEGORICAL,
    MEASURABLE,
    Attribute,
    attribute_distance,
    combine,
    default_error,
    joint_distance,
)
from .baselines import ZagerConfig, run_two_opt, run_zager, two_opt_permutation, zager_scores
from .bench import (
    AttributeSpec,
    BenchRow,
    ExperimentSpec,
    run_bench,
    rows_to_csv,
    rows_to_json,
)
from .engine import (
    GasmConfig,
    RunDiagnostics,
    ScoreState,
    convergence_iterations,
    init_scores,
    iterate,
    match_edges,
    normalization_factor,
    restore_isolated,
    run_gasm,
    structural_operators,
)
from .generators import (
    balanced_binary_tree,
    round_half_away,
    circular_ladder,
    degrade_edges,
    degrade_vertices,
    er_gnp,
    shuffle_vertices,
    star_branched,
)
from .graph import (
    Graph,
    adjacency,
    as_undirected,
    complement,
    effective_diameter,
    graph_from_json,
    graph_to_json,
    incidence_unoriented,
    load_graph,
    save_graph,
    source_terminus,
)
from .lap import Assignment, solve_max, solve_min
from .matching import Matching, Permutation
from .metrics import (
    MatchingResult,
    accuracy,
    peak_edge_probability,
    qap_cost,
    qap_similarity,
    score_ratio,
    structural_quality,
    theoretical_accuracy,
)
from .qaplib import (
    FLAG_NO_BEST,
    FLAG_UNBOUNDED,
    BestKnown,
    QapInstance,
    QapRow,
    instance_to_graphs,
    load_instance,
    load_suite,
    parse_instance,
    parse_solution,
    phi_distributions,
    run_qaplib,
    serialize_instance,
)

__version__ = "0.1.0"

__all__ = [
    "Attribute",
    "CATEGORICAL",
    "MEASURABLE",
    "attribute_distance",
    "combine",
    "default_error",
    "joint_distance",
    "ZagerConfig",
    "run_two_opt",
    "run_zager",
    "two_opt_permutation",
    "zager_scores",
    "AttributeSpec",
    "BenchRow",
    "ExperimentSpec",
    "run_bench",
    "rows_to_csv",
    "rows_to_json",
    "GasmConfig",
    "RunDiagnostics",
    "ScoreState",
    "convergence_iterations",
    "init_scores",
    "iterate",
    "match_edges",
    "normalization_factor",
    "restore_isolated",
    "run_gasm",
    "structural_operators",
    "balanced_binary_tree",
    "circular_ladder",
    "degrade_edges",
    "degrade_vertices",
    "er_gnp",
    "round_half_away",
    "shuffle_vertices",
    "star_branched",
    "Graph",
    "adjacency",
    "as_undirected",
    "complement",
    "effective_diameter",
    "graph_from_json",
    "graph_to_json",
    "incidence_unoriented",
    "load_graph",
    "save_graph",
    "source_terminus",
    "Assignment",
    "solve_max",
    "solve_min",
    "Matching",
    "Permutation",
    "MatchingResult",
    "accuracy",
    "peak_edge_probability",
    "qap_cost",
    "qap_similarity",
    "score_ratio",
    "structural_quality",
    "theoretical_accuracy",
    "QapInstance",
    "QapRow",
    "BestKnown",
    "FLAG_NO_BEST",
    "FLAG_UNBOUNDED",
    "instance_to_graphs",
    "load_instance",
    "load_suite",
    "parse_instance",
    "parse_solution",
    "phi_distributions",
    "run_qaplib",
    "serialize_instance",
    "__version__",
]
