"""Entropy of tree shifts of finite type.

A 0/1 matrix M over d symbols defines the tree shift of labelings of
the infinite k-ary tree in which a parent symbol i may sit above a
child symbol j only when M[i][j] = 1. The package computes the exact
number of valid labelings of the depth-n initial subtree, entropy
estimates from those counts, spectral data of M with the induced
bounds, exhaustive small-depth oracles, and Sturmian-word labelings of
the binary tree.
"""

from .matrix import (
    BadChar,
    NonSquare,
    ParseError,
    RowOrColumnZero,
    TransitionMatrix,
    parse_matrix,
)
from .oracle import (
    BlockCensus,
    DepthExceeded,
    EnumerationResult,
    IdentityReport,
    LabeledTree,
    SubadditivityReport,
    TooLarge,
    blocks_in_tree,
    check_subadditivity,
    enumerate_configs,
    node_count,
    verify_phi_identity,
)
from .recurrence import (
    CountVector,
    EmptySuccessorSet,
    EntropySeries,
    PowerBoundCheck,
    TreeParams,
    accelerated_entropy,
    auto_depth,
    golden_counts,
    golden_power_bounds,
    golden_ratios,
    golden_zero_rooted_counts,
    kary_bounds,
    level_entropy,
    log_deviation,
    run,
    step,
    supergolden_root,
)
from .reference import (
    PLASTIC_MATRIX,
    REFERENCE_ROWS,
    ReferenceResult,
    ReferenceRow,
    compute_reference_table,
    evaluate_row,
    plastic_report,
)
from .spectral import (
    NoConvergence,
    SpectralData,
    UndefinedForReducible,
    analyze_matrix,
    certified_radius_lower,
    graph_period,
    row_sum_heuristic,
    strong_components,
    upper_bound,
)
from .sturmian import (
    ComplexityViolation,
    FactorOracle,
    PrecisionExhausted,
    SturmianParams,
    build_factor_oracle,
    characteristic_word,
    label_tree_lex,
    label_tree_random,
    left_edge_word,
    mechanical_word,
    minimal_sequence,
    path_words,
    tree_complexity,
)

__version__ = "0.1.0"

__all__ = [
    "BadChar",
    "BlockCensus",
    "ComplexityViolation",
    "CountVector",
    "DepthExceeded",
    "EmptySuccessorSet",
    "EntropySeries",
    "EnumerationResult",
    "FactorOracle",
    "IdentityReport",
    "LabeledTree",
    "NoConvergence",
    "NonSquare",
    "PLASTIC_MATRIX",
    "ParseError",
    "PowerBoundCheck",
    "REFERENCE_ROWS",
    "ReferenceResult",
    "ReferenceRow",
    "RowOrColumnZero",
    "SpectralData",
    "SturmianParams",
    "SubadditivityReport",
    "TooLarge",
    "TransitionMatrix",
    "TreeParams",
    "UndefinedForReducible",
    "accelerated_entropy",
    "analyze_matrix",
    "auto_depth",
    "blocks_in_tree",
    "build_factor_oracle",
    "certified_radius_lower",
    "characteristic_word",
    "check_subadditivity",
    "compute_reference_table",
    "enumerate_configs",
    "evaluate_row",
    "golden_counts",
    "golden_power_bounds",
    "golden_ratios",
    "golden_zero_rooted_counts",
    "graph_period",
    "kary_bounds",
    "label_tree_lex",
    "label_tree_random",
    "left_edge_word",
    "level_entropy",
    "log_deviation",
    "mechanical_word",
    "minimal_sequence",
    "node_count",
    "parse_matrix",
    "path_words",
    "plastic_report",
    "row_sum_heuristic",
    "run",
    "step",
    "strong_components",
    "supergolden_root",
    "tree_complexity",
    "upper_bound",
    "verify_phi_identity",
]
