"""Eternal distance-k domination of trees.

A linear-time solver for the k = 2 eternal domination number of trees, an
exhaustive game oracle for small graphs, exact (distance) domination
solvers, and generators plus recognizers for the tree families whose
eternal domination behaviour is fully characterized. The `eterdom` CLI
exposes computation, batch verification with reports and figures,
generation, benchmarking and conjecture scanning.
"""

from .domination import (
    DominationResult,
    distance_domination,
    distance_domination_brute,
    domination_with_required,
    in_some_min_dominating_set,
    is_distance_dominating,
    leaf_removal_lowers_domination,
)
from .errors import GraphFormatError, GuardRailError, NotATreeError
from .eternal import (
    ReductionStep,
    ReductionTrace,
    RemovalStep,
    eternal2_linear,
    eternal2_reduction,
    is_critical,
    small_diameter_value,
)
from .families import (
    FamilyTrace,
    TraceStep,
    canonical_form,
    enumerate_trees,
    gen_pendant_paths,
    gen_regular_balls,
    gen_spider,
    recognize_critical,
    recognize_distance2_tight,
    recognize_domination_tight,
    regular_ball_size,
    replay_trace,
    tree_from_canonical,
)
from .graphs import (
    Graph,
    LeafClosure,
    Tree,
    UNREACHABLE,
    bfs_distances,
    diameter,
    emit_edge_list,
    emit_graph6,
    is_connected,
    leaf_closure,
    leaf_ranks,
    parse_edge_list,
    parse_graph6,
    power_graph,
    tree_diameter,
)
from .oracle import (
    DefenseTranscript,
    GuardConfig,
    OracleResult,
    configs_compatible,
    eternal_number,
    guard_config,
    replay_defense,
    winning_configs,
)

__version__ = "0.1.0"

__all__ = [
    "DefenseTranscript",
    "DominationResult",
    "FamilyTrace",
    "Graph",
    "GraphFormatError",
    "GuardConfig",
    "GuardRailError",
    "LeafClosure",
    "NotATreeError",
    "OracleResult",
    "ReductionStep",
    "ReductionTrace",
    "RemovalStep",
    "TraceStep",
    "Tree",
    "UNREACHABLE",
    "bfs_distances",
    "canonical_form",
    "configs_compatible",
    "diameter",
    "distance_domination",
    "distance_domination_brute",
    "domination_with_required",
    "emit_edge_list",
    "emit_graph6",
    "enumerate_trees",
    "eternal2_linear",
    "eternal2_reduction",
    "eternal_number",
    "gen_pendant_paths",
    "gen_regular_balls",
    "gen_spider",
    "guard_config",
    "in_some_min_dominating_set",
    "is_connected",
    "is_critical",
    "is_distance_dominating",
    "leaf_closure",
    "leaf_ranks",
    "leaf_removal_lowers_domination",
    "parse_edge_list",
    "parse_graph6",
    "power_graph",
    "recognize_critical",
    "recognize_distance2_tight",
    "recognize_domination_tight",
    "regular_ball_size",
    "replay_defense",
    "replay_trace",
    "small_diameter_value",
    "tree_diameter",
    "tree_from_canonical",
    "winning_configs",
]
