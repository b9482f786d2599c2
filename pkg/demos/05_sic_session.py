"""The semi-interactive loop, scripted end to end on the W state.

Expected vertices of the current outer approximation are flowed to one by
one; the first one (the origin of the generic polytope) is unreachable, the
operator accepts the suggested integer rounding, and the remaining four are
found, which terminates the session with the exact W polytope.
"""

from polyent import (
    add_generic_inequalities,
    replay_events,
    sic_add_inequality,
    sic_report,
    sic_run_auto,
    sic_start,
    sic_step,
    w_state,
)
from polyent.sic import AWAITING, FLOWING

s = sic_start(w_state(), seed=42)
print("local box gives", len(s.verts_expected), "expected vertices")

add_generic_inequalities(s, "222-generic")
print("with the generic system:", len(s.verts_expected), "expected")

sic_step(s)
assert s.status == AWAITING
print("\nVERTEX NOT FOUND:", [str(x) for x in s.pending_vertex])
print("  closest point:", [round(x, 6) for x in s.last_outcome_dict["closest_point"]])
print("  raw:       ", [round(x, 6) for x in s.last_outcome.raw_inequality])
print("  suggested: ", s.last_outcome.suggested_inequality)

# The operator accepts the suggestion (guards check it cuts the target and
# keeps every found vertex).
sic_add_inequality(s, list(s.last_outcome.suggested_inequality))
while s.status == FLOWING:
    sic_step(s)

report = sic_report(s)
print("\nstatus:", report["status"])
print("vertices found:")
for v in report["vertices_found"]:
    print("  ", "\t".join(v))

# The event log replays to the identical session; this is what the operator
# console uses to reconstruct views after a reload.
replayed = replay_events(s.events)
print("\nreplay reproduces the session:",
      sic_report(replayed)["vertices_found"] == report["vertices_found"])

# The same loop, fully automatic, on a fresh session:
s2 = sic_start(w_state(), seed=42)
add_generic_inequalities(s2, "222-generic")
sic_run_auto(s2)
print("auto run:", sic_report(s2)["status"], "with",
      len(sic_report(s2)["vertices_found"]), "vertices")
