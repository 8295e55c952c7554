"""Exact effective resistances, Kirchhoff indices, and spanning-tree counts
for prism and ladder networks, with an independent linear-algebra oracle.

The closed forms live in exact Q(sqrt 3) arithmetic and are certified
rational on the way out; the oracle recomputes everything from Laplacian
pseudoinverses so the two routes can be compared at full precision.
"""

from .exact import (
    BigRat,
    Qsqrt3,
    SQRT3,
    TWO_MINUS_SQRT3,
    TWO_PLUS_SQRT3,
    rational_to_float,
    to_rational,
    two_minus_sqrt3_pow,
)
from .genfib import (
    GenFibCache,
    gfib,
    gfib_closed,
    prism_spanning_tree_count,
    prism_spanning_tree_count_float,
    reciprocal_power_identity,
)
from .ladder import (
    DeltaEdges,
    LadderParams,
    ladder_delta_edges,
    ladder_params,
    ladder_terminal_resistances,
)
from .network import (
    DisconnectedNetworkError,
    EightTerminalStencil,
    Network,
    SingularMatrixError,
    SymMatrix,
    build_ladder,
    build_prism,
    four_corner_laplacian,
    kirchhoff_oracle,
    kron_reduce,
    laplacian,
    matrix_tree_count,
    network_from_json,
    network_to_json,
    pinv_laplacian,
    resistance_oracle,
)
from .prism import (
    PrismSpectrum,
    PrismVertex,
    csc2_sum_check,
    kirchhoff_closed,
    kirchhoff_float,
    prism_eigenvalues,
    prism_pair_sum,
    prism_resistance,
    prism_resistance_base,
    prism_resistance_via_reduction,
    resistance_table,
    trig_sum,
)
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "BigRat", "Qsqrt3", "SQRT3", "TWO_MINUS_SQRT3", "TWO_PLUS_SQRT3",
    "rational_to_float", "to_rational", "two_minus_sqrt3_pow",
    "GenFibCache", "gfib", "gfib_closed", "prism_spanning_tree_count",
    "prism_spanning_tree_count_float", "reciprocal_power_identity",
    "DeltaEdges", "LadderParams", "ladder_delta_edges", "ladder_params",
    "ladder_terminal_resistances",
    "DisconnectedNetworkError", "EightTerminalStencil", "Network",
    "SingularMatrixError", "SymMatrix", "build_ladder", "build_prism",
    "four_corner_laplacian", "kirchhoff_oracle", "kron_reduce", "laplacian",
    "matrix_tree_count", "network_from_json", "network_to_json",
    "pinv_laplacian", "resistance_oracle",
    "PrismSpectrum", "PrismVertex", "csc2_sum_check", "kirchhoff_closed",
    "kirchhoff_float", "prism_eigenvalues", "prism_pair_sum",
    "prism_resistance", "prism_resistance_base",
    "prism_resistance_via_reduction", "resistance_table", "trig_sum",
    "CheckResult", "run_checks",
    "__version__",
]
