"""Exact convex geometry: vertex enumeration, hulls, redundancy removal.

The engine works over exact rationals (double description on the
homogenization cone), so vertex sets of moment polytopes come out exactly.
"""

from polyent import (
    HPolytope,
    bravyi_inequalities,
    contains,
    enumerate_vertices,
    facet_hull,
    remove_redundant,
)
from polyent import catalog

# The 2x2x3 generic polytope from the two-qubit marginal inequalities.
p223 = bravyi_inequalities(3)
v = enumerate_vertices(p223)
print("2x2x3 generic vertices:")
for x in v.verts:
    print("  ", tuple(str(c) for c in x))

# Facet enumeration inverts vertex enumeration exactly.
h = facet_hull(v)
print("\nroundtrip identity:", enumerate_vertices(h).verts == v.verts)

# The printed 17-row system contains redundant rows; the minimal system is
# the claimed 12-inequality description.
r = remove_redundant(p223)
print(f"non-redundant: {len(r.ineqs)} of {len(p223.ineqs)} rows")

# Membership with exact slack reporting: the origin is NOT in the W
# polytope, violated by 1/2.
wpoly = catalog.entry_polytope(catalog.load("222-W"))
from fractions import Fraction as F

ok, violated = contains(wpoly, (F(1, 2), F(1, 2), F(1, 2)))
print("\norigin in W polytope:", ok, "| violation:",
      [str(q.value((F(1, 2),) * 3)) for q in violated])

# The 2x2x4 polytope is a cone over the 2x2x3 one.
v4 = enumerate_vertices(bravyi_inequalities(4))
print("\n2x2x4 vertex count:", len(v4.verts), "(9 lifted + the fully mixed point)")

# The full catalog sweep re-verifies every stored vertex fixture.
rep = catalog.verify_entry(catalog.load("233-generic"), samples=10)
print("\n233-generic verification:", "ok" if rep["ok"] else "FAIL",
      [c["name"] for c in rep["checks"]])
