"""Exact computation and verification of double Roman domination numbers.

The library covers three layers: graph construction (families, products,
coronas, twins, parsing), exact solvers for domination, Roman domination
and double Roman domination, and closed-form values with certified
witnesses plus inequality checkers for the relations between these
invariants.
"""

from .bounds import (
    BoundReport,
    PairScanResult,
    build_corona_realization,
    build_roman_pair_graph,
    check_cartesian,
    check_fundamental,
    check_min_drdf_partition,
    check_twin,
    scan_pair_realizability,
)
from .errors import (
    DrdError,
    ExcludedCaseError,
    GraphParseError,
    InvalidArgumentsError,
    InvalidSpecError,
    ResourceLimitError,
    WrongFormulaError,
)
from .formulas import (
    FormulaResult,
    gamma_dr_corona_k1,
    gamma_dr_corona_nontrivial,
    gamma_dr_cycle,
    gamma_dr_double_corona,
    gamma_dr_grid2,
)
from .graph import (
    FamilySpec,
    Graph,
    RootedGraph,
    add_false_twin,
    add_true_twin,
    cartesian_product,
    complete,
    complete_bipartite,
    corona,
    cycle,
    disjoint_union,
    enumerate_labeled_graphs,
    generate,
    grid2,
    is_connected,
    parse_graph,
    path,
    rooted_product,
    serialize_graph,
    star,
    trivial,
)
from .labeling import (
    DRLabeling,
    RomanLabeling,
    Verdict,
    Violation,
    eliminate_ones,
    is_dominating,
    is_valid_drdf,
    is_valid_rdf,
    parse_labeling,
    partition,
    serialize_labeling,
)
from .solvers import (
    SolveResult,
    brute_force,
    enumerate_min_drdfs,
    solve_domination,
    solve_double_roman,
    solve_roman,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DRLabeling",
    "DrdError",
    "ExcludedCaseError",
    "FamilySpec",
    "FormulaResult",
    "Graph",
    "GraphParseError",
    "InvalidArgumentsError",
    "InvalidSpecError",
    "PairScanResult",
    "ResourceLimitError",
    "RomanLabeling",
    "RootedGraph",
    "SolveResult",
    "Verdict",
    "Violation",
    "WrongFormulaError",
    "add_false_twin",
    "add_true_twin",
    "brute_force",
    "build_corona_realization",
    "build_roman_pair_graph",
    "cartesian_product",
    "check_cartesian",
    "check_fundamental",
    "check_min_drdf_partition",
    "check_twin",
    "complete",
    "complete_bipartite",
    "corona",
    "cycle",
    "disjoint_union",
    "eliminate_ones",
    "enumerate_labeled_graphs",
    "enumerate_min_drdfs",
    "gamma_dr_corona_k1",
    "gamma_dr_corona_nontrivial",
    "gamma_dr_cycle",
    "gamma_dr_double_corona",
    "gamma_dr_grid2",
    "generate",
    "grid2",
    "is_connected",
    "is_dominating",
    "is_valid_drdf",
    "is_valid_rdf",
    "parse_graph",
    "parse_labeling",
    "partition",
    "path",
    "rooted_product",
    "scan_pair_realizability",
    "serialize_graph",
    "serialize_labeling",
    "solve_domination",
    "solve_double_roman",
    "solve_roman",
    "star",
    "trivial",
]
