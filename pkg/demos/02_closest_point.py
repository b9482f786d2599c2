"""The exact closest-point method on free supports.

If every two support kets differ in at least two slots, the marginals are
diagonal and the closest point of the polytope to the origin comes from an
integer linear system on the squared amplitudes.  Everything here is exact
rational arithmetic; the emitted inequality is an entanglement witness.
"""

from polyent import (
    PureState,
    closest_point_matrix,
    eigenvector_defect,
    ghz_state,
    is_free,
    solve_closest_point,
    substate,
    support,
    torus_match,
    w_state,
)

w3 = PureState.from_terms((2, 2, 3), [((0, 1, 0), 1), ((1, 0, 1), 1), ((0, 0, 2), 1)])

print("support(W3 rep):", support(w3))
print("free:", is_free(support(w3)))
print("A matrix:", closest_point_matrix(support(w3), (2, 2, 3)))

sol = solve_closest_point(w3)
print("\nweights by ket:", dict(zip(sol.kets, sol.weights)))
print("closest point:", sol.point)
print("inequality:", sol.inequality.pretty())
print("eigenvector defect of the witness state:", eigenvector_defect(sol.state))

# GHZ contains the origin, so there is nothing to separate.
print("\nGHZ:", "contains origin" if solve_closest_point(ghz_state()).contains_origin
      else "?")

# W is already the critical state: X_rho W = lambda W.
print("W closest point:", solve_closest_point(w_state()).point)

# Torus transitivity: any positive amplitude pattern on the same free
# support is reachable by a diagonal SLOCC tuple.  Here: move the uniform
# W3 representative onto the closest-point weights.
import math

t = torus_match(w3, [math.sqrt(float(x)) for x in sol.weights])
print("\ndiagonal factors:", [tuple(round(float(d), 4) for d in f.diagonal()) for f in t.factors])

# Dropping support kets degenerates into the orbit closure: removing |002>
# leaves a GHZ-class state, witnessing GHZ < W3 in the hierarchy.
print("substate support:", support(substate(w3, [(0, 1, 0), (1, 0, 1)])))
