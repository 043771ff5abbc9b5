"""litsigma: the lit-only sigma-game on simple connected graphs.

Configurations light some vertices; the only legal move picks a lit vertex
and toggles all of its neighbors.  This package classifies the orbits of
that game in closed form when the adjacency matrix is invertible over GF(2),
computes minimum light numbers, solves positions by brute force, and serves
all of it over a CLI and a small JSON HTTP API.
"""

from .classify import (
    Applicability,
    ClassReport,
    OrbitClass,
    OrbitSizes,
    OutOfScopeError,
    adjacency_space,
    bipartite_one_lit,
    classify_graph,
    dual_graph,
    orbit_class,
    predicted_orbit_sizes,
)
from .f2 import (
    DegenerateFormError,
    F2Matrix,
    F2Vector,
    InversionResult,
    QuadraticSpace,
    SymplecticBasis,
    bilinear,
    count_quadratic_ones,
    dual_basis,
    invert,
    quadratic,
    symplectic_basis_and_arf,
)
from .game import (
    CapExceededError,
    Configuration,
    MoveSequence,
    OrbitTable,
    ReplayResult,
    SolveResult,
    apply_move,
    enumerate_orbits,
    min_light_number_bruteforce,
    replay,
    solve,
)
from .graphs import (
    Graph,
    GraphError,
    GraphFormatError,
    StructuralReport,
    adjacency_matrix,
    bipartition,
    generate_graph,
    is_nondegenerate_line_graph,
    line_graph_of,
    parse_graph,
    parse_graph_json,
    structural_report,
)
from .transvect import (
    TreeReduction,
    VectorSet,
    elementary_t_move,
    reduce_to_tree_search,
    transvection_apply,
    tv_orbits,
    verify_kappa_tau_duality,
)

__version__ = "0.1.0"
