"""Entanglement polytopes of multipartite pure states.

Exact free-state closest-point solving, exact rational convex geometry,
a moment-map gradient flow toward arbitrary rational targets, and the
semi-interactive (human-in-the-loop) polytope computation loop, plus a
catalog of verified fixtures for the published low-dimensional systems.
"""

from .convex import (
    HPolytope,
    RationalInequality,
    VPolytope,
    bravyi_inequalities,
    contains,
    enumerate_vertices,
    facet_hull,
    local_constraints,
    remove_redundant,
)
from .flow import (
    FlowOptions,
    FlowOutcome,
    YoungTuple,
    convert_to_lambdas,
    extended_moment,
    extract_inequality,
    flow,
    flow_to_point,
    lambda_star,
    suggest_integer,
)
from .freestates import (
    ClosestPointSolution,
    closest_point_matrix,
    eigenvalue_bound_rhs,
    eigenvector_defect,
    is_free,
    solve_closest_point,
    substate,
    support,
    torus_match,
)
from .sic import (
    SicSession,
    add_generic_inequalities,
    consider_found,
    replay_events,
    sic_add_inequality,
    sic_report,
    sic_run_auto,
    sic_start,
    sic_step,
)
from .states import (
    Dims,
    PureState,
    SloccOperator,
    apply_slocc,
    basis_ket,
    full_distance,
    ghz_state,
    lift,
    local_spectrum,
    marginals,
    moment_map,
    most_local,
    normalize,
    random_slocc,
    random_state,
    random_unitary_tuple,
    reduced_density_matrix,
    w_state,
)

__version__ = "0.1.0"
