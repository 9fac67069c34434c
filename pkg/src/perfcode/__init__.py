"""Efficient domination (perfect codes) via independent sets on graph squares.

A library for solving the weighted efficient domination problem by
reduction to maximum weight independent set on the graph square, with
certified recognition of the forbidden-subgraph classes whose squares are
structurally nice, and a harness that checks those structural facts
empirically on graph corpora.
"""

from .graph import (
    Graph,
    closed_neighborhood_weights,
    complement,
    complete_graph,
    complete_sun,
    connected_components,
    cycle_graph,
    distance,
    from_edge_list,
    induced_subgraph,
    is_independent_set,
    path_graph,
    square,
    INFINITY,
)
from .recognition import (
    ClassReport,
    PatternWitness,
    CLASS_TAGS,
    class_membership,
    find_hole,
    find_induced_path,
    find_odd_antihole,
    find_pattern,
    is_chordal,
    is_perfect_desk,
    is_perfect_elimination_order,
    lexbfs_order,
    witness_is_valid,
)
from .mwis import MwisResult, mwis_chordal, mwis_exact, wed_weights
from .solver import (
    EDSolution,
    SquareDiagnostics,
    BUDGET_ENV_VAR,
    oracle_ed,
    solve,
    verify_ed,
)
from .verify import (
    THEOREM_IDS,
    TrialConfig,
    VerificationReport,
    check_theorem,
    gen_random_chordal,
    gen_random_graph,
    run_campaign,
)
from .dimacs import DimacsError, GraphFile, parse_dimacs, write_dimacs

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "INFINITY",
    "from_edge_list",
    "distance",
    "square",
    "closed_neighborhood_weights",
    "complement",
    "induced_subgraph",
    "connected_components",
    "is_independent_set",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "complete_sun",
    "PatternWitness",
    "ClassReport",
    "CLASS_TAGS",
    "find_induced_path",
    "find_pattern",
    "find_hole",
    "find_odd_antihole",
    "is_chordal",
    "is_perfect_desk",
    "is_perfect_elimination_order",
    "lexbfs_order",
    "class_membership",
    "witness_is_valid",
    "MwisResult",
    "mwis_chordal",
    "mwis_exact",
    "wed_weights",
    "EDSolution",
    "SquareDiagnostics",
    "BUDGET_ENV_VAR",
    "solve",
    "oracle_ed",
    "verify_ed",
    "THEOREM_IDS",
    "TrialConfig",
    "VerificationReport",
    "check_theorem",
    "gen_random_graph",
    "gen_random_chordal",
    "run_campaign",
    "DimacsError",
    "GraphFile",
    "parse_dimacs",
    "write_dimacs",
]
