"""Flowing a state toward rational targets in its polytope.

The extended moment map steers the flow toward any rational chamber point
lambda/k.  Reaching the target certifies membership; failing to reach it
produces the separating inequality through the closest point, which is the
engine behind the semi-interactive loop.
"""

from fractions import Fraction as F

from polyent import FlowOptions, convert_to_lambdas, flow_to_point, ghz_state, w_state

# Young-diagram encoding of targets: lambda/k with k the lcm of denominators.
lam = convert_to_lambdas([F(1), F(1), F(1, 2)], (2, 2, 2))
print("target (1,1,1/2) ->", lam.lambdas, "k =", lam.k)

# GHZ reaches the origin (its spectrum already sits there).
out = flow_to_point(ghz_state(), [F(1, 2)] * 3, opts=FlowOptions(seed=1))
print("\nGHZ -> origin: reached =", out.reached)

# W cannot reach the origin; the closest point is (2/3,2/3,2/3) and the
# emitted inequality is the W-polytope facet.
out = flow_to_point(w_state(), [F(1, 2)] * 3, opts=FlowOptions(seed=1))
print("\nW -> origin:")
print("  reached:", out.reached, "| final distance:", round(out.final_distance, 6))
print("  raw:", [round(x, 6) for x in out.raw_inequality])
print("  pretty:", out.pretty_inequality)
print("  suggested:", out.suggested_inequality)

# Flowing toward a reachable vertex: GHZ -> (1,1,1), the separable corner.
out = flow_to_point(ghz_state(), [F(1)] * 3, opts=FlowOptions(seed=2))
print("\nGHZ -> (1,1,1): reached =", out.reached, "in", out.steps_taken, "steps")
print("  trajectory (most-local):")
for x in out.trajectory[:: max(1, len(out.trajectory) // 6)]:
    print("   ", tuple(round(v, 4) for v in x))

# Options mirror the published defaults; a 'highdim' preset lowers the
# progress threshold for higher-level systems.
print("\ndefaults:", FlowOptions())
print("highdim: ", FlowOptions.preset("highdim"))
