"""Build the catalog fixture JSONs from the transcribed appendix tables.

Every closest-point value is recomputed with the exact solver and compared
against the printed table; mismatches must be explicitly whitelisted (they
are the documented printed typos).  Vertex fixtures are frozen only after
the engine reproduces the counts and explicitly listed vertices claimed in
the text.  Run from the repository root:

    python3 tools/transcribe_catalog.py
"""

from __future__ import annotations

import json
import re
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import rows_appendix as R

from polyent.convex import (
    HPolytope,
    RationalInequality,
    dedupe_inequalities,
    enumerate_vertices,
    local_constraints,
)
from polyent.errors import NoNonnegativeSolution, NotFree
from polyent.freestates import solve_closest_point
from polyent.states import PureState

DATA = Path(__file__).resolve().parent.parent / "src" / "polyent" / "catalog" / "data"

TERM = re.compile(r"([+-]?)\s*(\d+)?\s*(?:x_\{(\d+),(\d+)\})?")


def parse_side(side: str, dims):
    """Coefficient dict + constant for one side of an inequality row."""
    coeffs: dict[tuple[int, int], int] = {}
    const = 0
    for m in re.finditer(r"([+-]?)\s*(\d*)\s*x_\{(\d+),(\d+)\}|([+-]?)\s*(\d+)(?!\s*x|\d*,)", side):
        if m.group(3) is not None:
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            key = (int(m.group(3)), int(m.group(4)))
            coeffs[key] = coeffs.get(key, 0) + sign * mag
        elif m.group(6) is not None:
            sign = -1 if m.group(5) == "-" else 1
            const += sign * int(m.group(6))
    return coeffs, const


def parse_rows(block: str, dims) -> list[RationalInequality]:
    total = sum(d - 1 for d in dims)
    idx = {}
    pos = 0
    for i, d in enumerate(dims, start=1):
        for j in range(1, d):
            idx[(i, j)] = pos
            pos += 1
    out = []
    for line in block.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        if "<=" in line:
            lhs, rhs = line.split("<=")
            flip = False
        elif ">=" in line:
            lhs, rhs = line.split(">=")
            flip = True
        else:
            raise ValueError(f"row without relation: {line!r}")
        cl, kl = parse_side(lhs, dims)
        cr, kr = parse_side(rhs, dims)
        vec = [0] * total
        for key, c in cl.items():
            vec[idx[key]] += c
        for key, c in cr.items():
            vec[idx[key]] -= c
        offset = kl - kr
        if flip:
            vec = [-v for v in vec]
            offset = -offset
        out.append(RationalInequality(vec, offset))
    return dedupe_inequalities(out)


def ineq_json(q: RationalInequality) -> dict:
    return {"coeffs": [str(c) for c in q.coeffs], "offset": str(q.offset)}


def verts_json(verts) -> list[list[str]]:
    return [[str(x) for x in v] for v in verts]


def rep_json(kets) -> list[dict]:
    return [{"ket": list(k), "re": 1.0, "im": 0.0} for k in kets]


def compute_cp(dims, kets):
    psi = PureState.from_terms(dims, [(k, 1.0) for k in kets])
    try:
        sol = solve_closest_point(psi)
    except NotFree:
        return "not_free"
    except NoNonnegativeSolution:
        return "no_nonnegative_solution"
    if sol.inequality is None:
        return "contains_origin"
    return ineq_json(sol.inequality)


ENTRIES: list[dict] = []


# Printed rows that random SLOCC images (or the representative itself) of
# their own class provably violate; preserved as suspect, never checked.
SUSPECT_ROWS = {
    "245-g0": [
        # violated by the representative's own spectrum (slack -1/5)
        "-4 x_{1,1}+x_{2,2}+5 x_{2,3}-5 x_{3,1}-4 x_{3,2}-5 x_{3,3}+x_{3,4}+4 <= 0",
    ],
    "246-t1": [
        # violated by the representative's own spectrum (slack -1)
        "-2 x_{1,1}-4 x_{2,1}-2 x_{2,2}-x_{2,3}-2 x_{3,1}-3 x_{3,2}-x_{3,3}-2 x_{3,4}-x_{3,5}+6 <= 0",
    ],
    # The whole qutrit list is quarantined: exact sampling of SLOCC images of
    # the representative (every slot ordering) violates at least eight of the
    # printed rows by up to ~0.07, so the hand-rounded list cannot describe
    # this orbit's polytope.
    "333-uppertri": "ALL",
}


def entry(id, dims, class_name, kets, generic=False, additional=None,
          generic_available=True, cp_printed=None, flags=None, notes=None,
          source=""):
    additional = list(additional or [])
    suspect = []
    marked = SUSPECT_ROWS.get(id, [])
    if marked == "ALL":
        suspect, additional = additional, []
    else:
        for row in marked:
            q = parse_rows(row, dims)[0]
            assert q in additional, f"{id}: suspect row {row!r} not found in the table"
            additional.remove(q)
            suspect.append(q)
    e = {
        "id": id,
        "dims": list(dims),
        "class_name": class_name,
        "representative": rep_json(kets),
        "generic": generic,
        "generic_available": generic_available,
        "inequalities": [ineq_json(q) for q in additional],
        "closest_point_ineq": compute_cp(dims, kets),
        "source": source,
    }
    if suspect:
        e["suspect_inequalities"] = [ineq_json(q) for q in suspect]
    if cp_printed is not None:
        e["closest_point_printed"] = cp_printed
    if flags:
        e["flags"] = flags
    if notes:
        e["notes"] = notes
    ENTRIES.append(e)
    return e


def frac_tuple(*xs):
    return tuple(Fraction(x) for x in xs)


def main():
    DATA.mkdir(parents=True, exist_ok=True)

    # ---- 2x2x2 -------------------------------------------------------
    dims = (2, 2, 2)
    g222 = parse_rows(R.GENERIC_222, dims)
    w222 = parse_rows(R.W_222_ADDITIONAL, dims)
    e = entry("222-generic", dims, "GHZ", [(0, 0, 0), (1, 1, 1)], generic=True,
              source="appendix: three qubits, generic polytope")
    v = enumerate_vertices(HPolytope(g222, dims=dims))
    assert set(v.verts) == {
        frac_tuple(1, 1, 1),
        frac_tuple(1, Fraction(1, 2), Fraction(1, 2)),
        frac_tuple(Fraction(1, 2), 1, Fraction(1, 2)),
        frac_tuple(Fraction(1, 2), Fraction(1, 2), 1),
        frac_tuple(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    }, "2x2x2 generic vertices do not match the SIC transcript"
    e["generic_inequalities"] = [ineq_json(q) for q in g222]
    e["expected_vertices"] = verts_json(v.verts)

    e = entry("222-W", dims, "W", [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
              additional=w222, source="appendix: three qubits, orbit polytopes")
    vw = enumerate_vertices(HPolytope(list(g222) + list(w222), dims=dims))
    assert set(vw.verts) == set(v.verts) - {frac_tuple(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))}
    e["expected_vertices"] = verts_json(vw.verts)

    # ---- 2x2x3 -------------------------------------------------------
    dims = (2, 2, 3)
    g223 = parse_rows(R.GENERIC_223, dims)
    e = entry("223-generic", dims, "generic",
              [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 2)], generic=True,
              source="appendix: 2x2x3 generic polytope")
    v223 = enumerate_vertices(HPolytope(g223, dims=dims))
    prop_verts = {
        frac_tuple(Fraction(1, 2), Fraction(1, 2), Fraction(1, 3), Fraction(1, 3)),
        frac_tuple(Fraction(2, 3), Fraction(2, 3), Fraction(1, 3), Fraction(1, 3)),
        frac_tuple(Fraction(1, 2), Fraction(3, 4), Fraction(1, 2), Fraction(1, 4)),
        frac_tuple(Fraction(3, 4), Fraction(1, 2), Fraction(1, 2), Fraction(1, 4)),
        frac_tuple(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
        frac_tuple(1, Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
        frac_tuple(Fraction(1, 2), 1, Fraction(1, 2), Fraction(1, 2)),
        frac_tuple(Fraction(1, 2), Fraction(1, 2), 1, 0),
        frac_tuple(1, 1, 1, 0),
    }
    assert set(v223.verts) == prop_verts, "2x2x3 generic vertices differ from the 9 listed"
    e["generic_inequalities"] = [ineq_json(q) for q in g223]
    e["expected_vertices"] = verts_json(v223.verts)

    w3 = parse_rows(R.W3_223_ADDITIONAL, dims)
    e = entry("223-W3", dims, "W3", [(0, 0, 0), (0, 1, 1), (1, 1, 2)],
              additional=w3, source="appendix: 2x2x3 orbit polytopes")
    vw3 = enumerate_vertices(HPolytope(list(g223) + list(w3), dims=dims))
    origin223 = frac_tuple(Fraction(1, 2), Fraction(1, 2), Fraction(1, 3), Fraction(1, 3))
    assert set(vw3.verts) == prop_verts - {origin223}, "W3 vertex claim failed"
    e["expected_vertices"] = verts_json(vw3.verts)

    # ---- 2x2x4 -------------------------------------------------------
    dims = (2, 2, 4)
    g224 = parse_rows(R.GENERIC_224, dims)
    e = entry("224-generic", dims, "generic",
              [(0, 0, 0), (0, 1, 1), (1, 0, 2), (1, 1, 3)], generic=True,
              source="appendix: 2x2x4 generic polytope")
    v224 = enumerate_vertices(HPolytope(g224, dims=dims))
    cone = {tuple(list(x) + [1 - x[2] - x[3]]) for x in prop_verts} | {
        frac_tuple(Fraction(1, 2), Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), Fraction(1, 4))
    }
    assert set(v224.verts) == cone, "2x2x4 cone statement failed"
    e["generic_inequalities"] = [ineq_json(q) for q in g224]
    e["expected_vertices"] = verts_json(v224.verts)

    # ---- 2x3x3 -------------------------------------------------------
    dims = (2, 3, 3)
    g233 = parse_rows(R.GENERIC_233, dims)
    e = entry("233-generic", dims, "psi0",
              [(0, 0, 0), (1, 1, 1), (0, 2, 2), (1, 2, 2)], generic=True,
              cp_printed="n/a",
              notes="representative is not free (|022> and |122> differ in one slot)",
              source="appendix: 2x3x3 generic polytope; Chen class table")
    v233 = enumerate_vertices(HPolytope(g233, dims=dims))
    assert len(v233.verts) == 18, f"2x3x3 generic has {len(v233.verts)} vertices, expected 18"
    new_five = {
        frac_tuple(Fraction(1, 2), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
        frac_tuple(1, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
        frac_tuple(Fraction(1, 2), Fraction(1, 3), Fraction(1, 3), Fraction(2, 3), Fraction(1, 6)),
        frac_tuple(Fraction(1, 2), Fraction(2, 3), Fraction(1, 6), Fraction(1, 3), Fraction(1, 3)),
        frac_tuple(Fraction(1, 2), Fraction(2, 3), Fraction(1, 6), Fraction(2, 3), Fraction(1, 6)),
    }
    assert new_five <= set(v233.verts), "the five listed new 2x3x3 vertices are missing"
    e["generic_inequalities"] = [ineq_json(q) for q in g233]
    e["expected_vertices"] = verts_json(v233.verts)
    origin233 = frac_tuple(
        Fraction(1, 2), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)
    )

    p1 = parse_rows(R.PSI1_233_ADDITIONAL, dims)
    e = entry("233-psi1", dims, "psi1", [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 2)],
              additional=p1,
              notes="appendix prints the representative with |010> duplicated; "
                    "Chen's table value used",
              source="appendix: 2x3x3 orbit polytopes")
    v = enumerate_vertices(HPolytope(list(g233) + list(p1), dims=dims))
    ws = {
        frac_tuple(Fraction(1, 2), Fraction(1, 3), Fraction(1, 3), Fraction(1, 2), Fraction(1, 3)),
        frac_tuple(Fraction(1, 2), Fraction(3, 8), Fraction(3, 8), Fraction(3, 8), Fraction(3, 8)),
        frac_tuple(Fraction(1, 2), Fraction(2, 5), Fraction(3, 10), Fraction(2, 5), Fraction(2, 5)),
        # printed as (1/2,2/5,2/5,2/5,2/5); the paper's own witness
        # lambda(3/10,1/5,1/10,2/5) evaluates to x32 = 3/10
        frac_tuple(Fraction(1, 2), Fraction(2, 5), Fraction(2, 5), Fraction(2, 5), Fraction(3, 10)),
        frac_tuple(Fraction(1, 2), Fraction(1, 2), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
        frac_tuple(Fraction(2, 3), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
    }
    assert ws <= set(v.verts), "w1..w6 missing from the psi1 polytope"
    assert set(v.verts) == (set(v233.verts) - {origin233}) | ws, "psi1 vertex structure"
    e["expected_vertices"] = verts_json(v.verts)

    p4 = parse_rows(R.PSI4_233_ADDITIONAL, dims)
    e = entry("233-psi4", dims, "psi4",
              [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 1), (1, 1, 2)],
              additional=p4, source="appendix: 2x3x3 orbit polytopes")
    v = enumerate_vertices(HPolytope(list(g233) + list(p4), dims=dims))
    assert set(v.verts) == set(v233.verts) - {origin233}, (
        "psi4 polytope should keep all generic vertices but the origin"
    )
    e["expected_vertices"] = verts_json(v.verts)

    p3 = parse_rows(R.PSI3_233_ADDITIONAL, dims)
    e = entry("233-psi3", dims, "GHZ3-type |000>+|111>+|022>",
              [(0, 0, 0), (1, 1, 1), (0, 2, 2)],
              additional=p3,
              notes="the text's class list prints psi3 = |100>+|010>+|022>, a "
                    "rank-(2,3,2) substate of psi2 and a different class from "
                    "this full-rank one (regular vs singular matrix pencil); "
                    "this polytope is contained in psi1's, not psi2's",
              source="appendix: 2x3x3 orbit polytopes")
    v = enumerate_vertices(HPolytope(list(g233) + list(p3), dims=dims))
    e["expected_vertices"] = verts_json(v.verts)

    p2 = parse_rows(R.PSI2_233_ADDITIONAL, dims)
    e = entry("233-psi2", dims, "psi2", [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 2, 2)],
              additional=p2, source="appendix: 2x3x3 orbit polytopes")
    v2 = enumerate_vertices(HPolytope(list(g233) + list(p2), dims=dims))
    e["expected_vertices"] = verts_json(v2.verts)

    e = entry("233-psi2b", dims, "psi2 (second listing)",
              [(1, 0, 0), (0, 1, 0), (1, 1, 2), (1, 2, 1)],
              additional=p2, flags=["duplicate_suspect"],
              notes="appendix lists this representative with a list identical to "
                    "psi2's; the two representatives are SLOCC-equivalent "
                    "(identical exact closest points), so the list is kept",
              source="appendix: 2x3x3 orbit polytopes")
    e["expected_vertices"] = verts_json(v2.verts)

    e = entry("233-psi5", dims, "psi5", [(0, 1, 0), (0, 0, 1), (1, 1, 2), (1, 2, 1)],
              cp_printed="2 x_{1,1}+2 x_{2,1}+x_{2,2}+2 x_{3,1}+x_{3,2} >= 4",
              notes="printed closest-point row duplicates psi2's and is violated "
                    "by this class's own exact closest point "
                    "((1/2,1/2),(1/2,1/4,1/4),(1/2,1/4,1/4)); no orbit-polytope "
                    "table is printed for this class",
              source="closest-point table, 2x3x3 block")

    # ---- 2x3x4 -------------------------------------------------------
    dims = (2, 3, 4)
    g234 = parse_rows(R.GENERIC_234, dims)
    e = entry("234-generic", dims, "Theta5 (M=1)",
              [(0, 2, 3), (1, 2, 2), (0, 1, 2), (1, 1, 0), (0, 0, 0), (1, 0, 1)],
              generic=True, cp_printed="n/a",
              source="appendix: 2x3x4 generic polytope")
    e["generic_inequalities"] = [ineq_json(q) for q in g234]

    t0 = parse_rows(R.THETA0_234_ADDITIONAL_PRINTED, dims)
    t0 = [RationalInequality(t0[0].coeffs, t0[0].offset + 1)]
    entry("234-c1", dims, "Theta0 (M=1)", [(1, 2, 3), (0, 1, 2), (0, 0, 0), (1, 0, 1)],
          additional=t0,
          notes="printed additional row lacks the +1 constant (vacuous as "
                "printed); offset restored from the class's closest-point "
                "inequality x21+x31+x32 >= 1",
          source="appendix: 2x3x4 orbit polytopes")
    entry("234-c2", dims, "Theta1 (M=1)", [(0, 2, 3), (0, 1, 2), (0, 0, 0), (1, 0, 1)],
          additional=parse_rows(R.THETA1_234_ADDITIONAL, dims),
          cp_printed="x_{1,1}+2 x_{2,1}+3 x_{3,1}+2 x_{3,2}+2 x_{3,3} >= 5",
          notes="closest-point table drops the leading 3 on x11 (row violated "
                "by its own closest point as printed); the 16-inequality block "
                "is printed under the Theta0 representative but belongs to this "
                "class per the text and contains the corrected closest-point row",
          source="appendix: 2x3x4 orbit polytopes")
    entry("234-c3", dims, "Theta2 (M=1)",
          [(1, 2, 3), (0, 1, 2), (1, 1, 0), (0, 0, 0), (1, 0, 1)],
          additional=parse_rows(R.THETA2_234_ADDITIONAL, dims),
          source="appendix: 2x3x4 orbit polytopes")
    entry("234-c4", dims, "Theta3 (M=1)",
          [(0, 2, 3), (1, 2, 2), (0, 1, 2), (0, 0, 0), (1, 0, 1)],
          additional=parse_rows(R.THETA3_234_ADDITIONAL, dims),
          source="appendix: 2x3x4 orbit polytopes")

    # ---- 2x3x5 -------------------------------------------------------
    dims = (2, 3, 5)
    g235 = parse_rows(R.GENERIC_235, dims)
    e = entry("235-generic", dims, "Upsilon2 (M=2)",
              [(0, 2, 4), (1, 2, 1), (0, 0, 0), (0, 1, 1), (1, 0, 2), (1, 1, 3)],
              generic=True, cp_printed="n/a",
              notes="the closest-point solve succeeds with a non-origin point; "
                    "the 2x3x5 generic polytope does not contain the origin "
                    "(I/2, I/3, I/5 marginals are not realizable by a pure state)",
              source="appendix: 2x3x5 generic polytope")
    e["generic_inequalities"] = [ineq_json(q) for q in g235]
    entry("235-c1", dims, "Upsilon1 (M=2)",
          [(0, 2, 4), (0, 0, 0), (0, 1, 1), (1, 0, 2), (1, 1, 3)],
          additional=parse_rows(R.UPSILON1_235_ADDITIONAL, dims),
          source="appendix: 2x3x5 orbit polytopes")

    # ---- 2x3x6 -------------------------------------------------------
    dims = (2, 3, 6)
    g236 = parse_rows(R.GENERIC_236, dims)
    e = entry("236-generic", dims, "Upsilon0 (M=3)",
              [(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 0, 3), (1, 1, 4), (1, 2, 5)],
              generic=True, cp_printed="n/a",
              source="appendix: 2x3x6 generic polytope")
    e["generic_inequalities"] = [ineq_json(q) for q in g236]

    # ---- 2x4x4 -------------------------------------------------------
    dims = (2, 4, 4)
    phi = {
        0: [(0, 0, 0), (1, 1, 1), (0, 2, 2)],
        1: [(0, 0, 0), (1, 1, 1), (0, 2, 2), (1, 2, 2)],
        2: [(0, 1, 0), (0, 0, 1), (1, 1, 2), (1, 2, 1)],
        3: [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 2), (1, 2, 1)],
        4: [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 2, 2)],
        5: [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 2)],
        6: [(0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 2, 1)],
    }
    def p44(extra, base, id, printed=None, notes=None, additional=None, coeff=None):
        kets = extra + phi[base]
        name = "+".join("|%d%d%d>" % k for k in extra) + f"+phi{base}"
        return entry(id, dims, name, kets, additional=additional,
                     cp_printed=printed, notes=notes,
                     generic_available=False,
                     source="appendix: 2x4x4 closest-point table")

    p44([(1, 3, 3)], 0, "244-c01", printed="n/a",
        additional=parse_rows(R.PHI0_244_ADDITIONAL, dims))
    p44([(0, 3, 3)], 0, "244-c02")
    p44([(1, 3, 3)], 1, "244-c03", printed="n/a")
    e = entry("244-c04", dims, "|033>+1/2|133>+phi0",
              [(0, 3, 3), (1, 3, 3)] + phi[0], generic_available=False,
              cp_printed="n/a",
              notes="printed family |033>+x|133>+phi0; the support is not free "
                    "for any x, so the fixture uses x=1/2 via the term list",
              source="appendix: 2x4x4 closest-point table")
    e["representative"] = (
        [{"ket": [0, 3, 3], "re": 1.0, "im": 0.0}, {"ket": [1, 3, 3], "re": 0.5, "im": 0.0}]
        + rep_json(phi[0])
    )
    p44([(1, 3, 3)], 2, "244-c05")
    p44([(1, 3, 3)], 3, "244-c06",
        printed="3 x_{1,1}+8 x_{2,1}+4 x_{2,2}+3 x_{2,3}+8 x_{3,1}+4 x_{3,2}+3 x_{3,3} >= 11",
        notes="printed row repeats the |133>+phi2 inequality and is violated by "
              "this support's own exact closest point")
    p44([(0, 3, 3)], 3, "244-c07",
        printed="3 x_{1,1}+8 x_{2,1}+4 x_{2,2}+3 x_{2,3}+8 x_{3,1}+4 x_{3,2}+3 x_{3,3} >= 11",
        notes="printed row repeats the |133>+phi2 inequality and is violated by "
              "this support's own exact closest point")
    p44([(1, 3, 3)], 4, "244-c08")
    p44([(0, 3, 3)], 4, "244-c09")
    p44([(1, 3, 3)], 5, "244-c10", printed="n/a")
    p44([(1, 3, 3), (0, 3, 3)], 5, "244-c11", printed="n/a")
    p44([(1, 3, 3), (0, 3, 2)], 2, "244-c12")
    p44([(1, 3, 3), (0, 3, 2)], 3, "244-c13",
        printed="x_{2,1}+x_{2,2}+x_{3,1} >= 1",
        notes="printed row repeats the preceding class's inequality and is "
              "violated by this support's own exact closest point")
    p44([(0, 3, 3), (1, 3, 2)], 4, "244-c14")
    p44([(1, 3, 3), (0, 3, 2)], 5, "244-c15", printed="n/a")
    p44([(0, 3, 3), (1, 3, 2)], 6, "244-c16")

    # ---- 2x4x5 (Gamma family, M=1) and 2x4x6 (Theta family, M=2) ------
    def upsilon0(M):
        return [(0, i, i) for i in range(M)] + [(1, i, i + M) for i in range(M)]

    def upsilon(j, M):
        if j == 0:
            return upsilon0(M)
        if j == 1:
            return [(0, M, 2 * M)] + upsilon0(M)
        return [(0, M, 2 * M), (1, M, M - 1)] + upsilon0(M)

    def theta(j, M):
        head = {
            0: [(1, M + 1, 2 * M + 1)],
            1: [(0, M + 1, 2 * M + 1)],
            2: [(1, M + 1, 2 * M + 1)],
            3: [(0, M + 1, 2 * M + 1), (1, M + 1, 2 * M)],
            4: [(0, M + 1, 2 * M + 1), (1, M + 1, 0)],
            5: [(0, M + 1, 2 * M + 1), (1, M + 1, 2 * M)],
        }[j]
        return head + upsilon(1 if j in (0, 1, 3) else 2, M)

    def gamma(j, M):
        head = {
            0: [(1, M + 2, 2 * M + 2)],
            1: [(0, M + 2, 2 * M + 2), (1, M + 2, 2 * M + 2)],
            2: [(0, M + 2, 2 * M + 2)],
            3: [(1, M + 2, 2 * M + 2)],
            4: [(0, M + 2, 2 * M + 2)],
            5: [(1, M + 2, 2 * M + 2)],
            6: [(0, M + 2, 2 * M + 2)],
            7: [(1, M + 2, 2 * M + 2)],
            8: [(1, M + 2, 2 * M + 2)],
            9: [(1, M + 2, 2 * M + 2), (0, M + 2, 2 * M + 1)],
            10: [(1, M + 2, 2 * M + 2), (1, M + 2, 2 * M + 1)],
            11: [(1, M + 2, 2 * M + 2), (0, M + 2, M + 1)],
            12: [(1, M + 2, 2 * M + 2), (0, M + 2, M)],
            13: [(0, M + 2, 2 * M + 2), (1, M + 2, 2 * M + 1)],
        }[j]
        base = {0: 0, 1: 0, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 4, 8: 5, 9: 2,
                10: 3, 11: 4, 12: 5, 13: 5}[j]
        return head + theta(base, M)

    dims = (2, 4, 5)
    printed45 = {
        0: "6 x_{1,1}+7 x_{2,1}+3 x_{2,2}+10 x_{3,1}+7 x_{3,2}+7 x_{3,3}+6 x_{3,4} >= 13",
        1: "n/a", 2: "9 x_{1,1}+5 x_{2,1}+9 x_{3,1}+5 x_{3,2}+5 x_{3,3}+5 x_{3,4} >= 14",
        3: "n/a", 4: "x_{2,1}+x_{2,2}+x_{3,1}+x_{3,2} >= 1", 5: "n/a", 6: "n/a",
        8: "7 x_{1,1}+24 x_{2,1}+17 x_{2,2}+10 x_{2,3}+24 x_{3,1}+21 x_{3,2}+14 x_{3,3}+7 x_{3,4} >= 31",
        9: "10 x_{1,1}+21 x_{2,1}+11 x_{2,2}+10 x_{2,3}+21 x_{3,1}+20 x_{3,2}+11 x_{3,3}+10 x_{3,4} >= 31",
        10: "n/a", 12: "n/a", 13: None,
    }
    add45 = {0: parse_rows(R.GAMMA0_245_ADDITIONAL, dims),
             1: parse_rows(R.GAMMA1_245_ADDITIONAL, dims)}
    notes45 = {
        5: "printed n/a; the exact solve yields an inequality",
        6: "printed n/a; the exact solve yields an inequality",
        13: "listed as falling away for M=1; included because the orbit table "
            "prints it with no additional inequalities",
    }
    for j, printed in printed45.items():
        entry(f"245-g{j}", dims, f"Gamma{j} (M=1)", gamma(j, 1),
              additional=add45.get(j), generic_available=False,
              cp_printed=printed, notes=notes45.get(j),
              source="appendix: 2x4x5 tables; class constructions from the "
                     "2xMxN class appendix")

    dims = (2, 4, 6)
    printed46 = {
        0: "x_{2,1}+x_{2,2}+x_{3,1}+x_{3,2} >= 1",
        1: "6 x_{1,1}+5 x_{2,1}+5 x_{2,2}+6 x_{3,1}+6 x_{3,2}+5 x_{3,3}+5 x_{3,4} >= 11",
        2: "15 x_{1,1}+40 x_{2,1}+33 x_{2,2}+18 x_{2,3}+40 x_{3,1}+37 x_{3,2}+22 x_{3,3}+15 x_{3,4}+7 x_{3,5} >= 55",
        3: "n/a", 4: "n/a",
        5: "x_{2,1}+x_{3,1}+x_{3,2}+x_{3,3}+x_{3,4} >= 1",
    }
    add46 = {0: parse_rows(R.THETA0_246_ADDITIONAL, dims),
             1: parse_rows(R.THETA1_246_ADDITIONAL, dims)}
    notes46 = {3: "printed n/a; the exact solve yields an inequality"}
    for j, printed in printed46.items():
        entry(f"246-t{j}", dims, f"Theta{j} (M=2)", theta(j, 2),
              additional=add46.get(j), generic_available=False,
              cp_printed=printed, notes=notes46.get(j),
              source="appendix: 2x4x6 tables")

    # ---- three qutrits -------------------------------------------------
    dims = (3, 3, 3)
    entry("333-uppertri", dims, "upper-triangular 2x2 multiplication tensor",
          [(0, 0, 0), (2, 2, 2), (0, 1, 1), (1, 2, 1)],
          additional=parse_rows(R.UPPERTRI_333, dims),
          generic_available=False,
          notes="the printed list is titled complete, but exact sampling of "
                "SLOCC images of the representative violates several rows "
                "(by up to ~0.07), so it is preserved as suspect only; the "
                "closest-point inequality is recomputed exactly",
          source="appendix: three qutrits")

    # ---- cross-check printed closest-point rows ------------------------
    mismatches = []
    for e in ENTRIES:
        printed = e.get("closest_point_printed")
        if printed is None or printed == "n/a":
            continue
        dims_e = tuple(e["dims"])
        computed = e["closest_point_ineq"]
        want = parse_rows(printed, dims_e)[0]
        got = (
            None if not isinstance(computed, dict)
            else RationalInequality([Fraction(c) for c in computed["coeffs"]],
                                    Fraction(computed["offset"]))
        )
        if got is None or (got.coeffs, got.offset) != (want.coeffs, want.offset):
            mismatches.append(e["id"])
    expected_mismatches = {"233-psi5", "234-c2", "244-c06", "244-c07", "244-c13"}
    assert set(mismatches) == expected_mismatches, (
        f"unexpected printed/computed disagreements: {sorted(mismatches)}"
    )

    # printed rows that must match exactly
    exact = {
        "235-c1": "3 x_{1,1}+4 x_{2,1}+4 x_{2,2}+4 x_{3,1}+3 x_{3,2}+3 x_{3,3} >= 7",
        "234-c1": "x_{2,1}+x_{3,1}+x_{3,2} >= 1",
        "234-c3": "x_{1,1}+2 x_{2,1}+x_{2,2}+2 x_{3,1}+2 x_{3,2}+x_{3,3} >= 3",
        "234-c4": "2 x_{1,1}+3 x_{2,1}+2 x_{2,2}+3 x_{3,1}+2 x_{3,2}+x_{3,3} >= 5",
        "233-psi3": "2 x_{1,1}+x_{2,1}+x_{3,1} >= 2",
        "233-psi4": "x_{1,1}+2 x_{2,1}+x_{2,2}+2 x_{3,1}+x_{3,2} >= 3",
        "233-psi2": "2 x_{1,1}+2 x_{2,1}+x_{2,2}+2 x_{3,1}+x_{3,2} >= 4",
        "233-psi1": "x_{1,1}+x_{2,1}+x_{2,2}+x_{3,1}+x_{3,2} >= 2",
        "244-c02": "2 x_{1,1}+x_{2,1}+x_{3,1} >= 2",
    }
    by_id = {e["id"]: e for e in ENTRIES}
    for id_, row in exact.items():
        want = parse_rows(row, tuple(by_id[id_]["dims"]))[0]
        got = by_id[id_]["closest_point_ineq"]
        assert isinstance(got, dict), f"{id_}: expected an inequality, got {got}"
        gq = RationalInequality([Fraction(c) for c in got["coeffs"]], Fraction(got["offset"]))
        assert (gq.coeffs, gq.offset) == (want.coeffs, want.offset), (
            f"{id_}: computed {gq} differs from printed {row}"
        )

    # n/a semantics checks
    assert by_id["236-generic"]["closest_point_ineq"] == "contains_origin"
    assert by_id["234-generic"]["closest_point_ineq"] == "contains_origin"
    assert by_id["233-generic"]["closest_point_ineq"] == "not_free"
    assert isinstance(by_id["235-generic"]["closest_point_ineq"], dict)

    # ---- every entry's own representative satisfies its active rows ------
    from polyent.states import local_spectrum, most_local

    for e in ENTRIES:
        dims_e = tuple(e["dims"])
        psi = PureState.from_terms(
            dims_e,
            [(tuple(t["ket"]), complex(t["re"], t["im"])) for t in e["representative"]],
        )
        x = most_local(local_spectrum(psi))
        rows = [
            RationalInequality([Fraction(c) for c in q["coeffs"]], Fraction(q["offset"]))
            for q in e["inequalities"]
        ] + list(local_constraints(dims_e))
        for q in rows:
            val = float(q.value(x))
            assert val <= 1e-9, f"{e['id']}: representative violates {q} by {val}"

    # ---- write ----------------------------------------------------------
    for e in ENTRIES:
        d = DATA / "x".join(str(x) for x in e["dims"])
        d.mkdir(parents=True, exist_ok=True)
        (d / f"{e['id']}.json").write_text(json.dumps(e, indent=1) + "\n")
    print(f"wrote {len(ENTRIES)} entries under {DATA}")


if __name__ == "__main__":
    main()
