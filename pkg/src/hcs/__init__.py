"""Dense graphs, vertex connectivity, and large highly connected subgraphs."""

from .graphs import (
    AnticliqueProfile,
    EMPTY_PROFILE,
    InducedSubgraph,
    SimpleGraph,
    TwoGraphView,
    average_degree,
    graph_from_json_dict,
    graph_to_dot,
    graph_to_json_dict,
    induced_subgraph,
    two_graph_counts,
)
from .connectivity import (
    CutWitness,
    Separation,
    brute_force_min_cut,
    find_separation,
    is_k1_connected,
    min_vertex_cut,
)
from .enclosure import Enclosure, as_enclosure, sqrt_enclosure
from .extractor import (
    FOUND,
    LEAF_CONNECTED,
    LEAF_SMALL,
    SEPARABLE,
    SEPARATED,
    BudgetExceededError,
    DecompositionNode,
    DensityImplicationReport,
    ExtractionResult,
    brute_force_hcs,
    check_density_implication,
    extract,
    scan_connected_subgraph,
    size_threshold,
    validate_decomposition,
)
from .extremal import (
    ExtremalGraph,
    ExtremalReport,
    build_extremal,
    extremal_from_json_dict,
    extremal_to_json_dict,
    first_level_meeting_degree_target,
    sharpness_rate,
    verify_extremal,
)
from .bounds import (
    BoundReport,
    OptimizationInstance,
    ParameterAlternative,
    alternative_1,
    alternative_2,
    alternative_3,
    basic_edge_bound,
    certify_nonnegative_on_interval,
    core_side_edge_bound,
    density_threshold,
    get_alternative,
    iterated_edge_bound,
    separable_density_check,
    small_sides_edge_bound,
    split_maximum,
    split_maximum_grid,
    square_ratio_gap,
    verify_all_bounds,
    verify_alternative,
    verify_basic_bounds,
)
from .cli import ExperimentConfig, dispatch, run_experiment

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
