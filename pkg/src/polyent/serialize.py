"""JSON (de)serialization for states, inequalities, and polytopes.

State files:      {"dims": [2,2,2], "terms": [{"ket": [0,0,0], "re": 1.0, "im": 0.0}, ...]}
Inequality files: {"dims": [...], "coeffs": ["-1", "-1", "-1"], "offset": "2"}
Polytope files:   {"dims": [...], "ineqs": [...]} or {"dims": [...], "verts": [["1/2", ...], ...]}

Rationals are written as strings ("p/q" or decimal); plain JSON numbers are
accepted on input.  Amplitudes need not be normalized on input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .convex import HPolytope, RationalInequality, VPolytope
from .errors import MalformedFixture
from .states import Dims, PureState


def parse_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    if isinstance(x, str):
        return Fraction(x)
    raise MalformedFixture(f"cannot parse rational from {x!r}")


def state_to_dict(psi: PureState, tol: float = 0.0) -> dict:
    terms = []
    for i, a in enumerate(psi.amp):
        if abs(a) > tol:
            terms.append({"ket": list(psi.dims.ket_of(i)), "re": float(a.real), "im": float(a.imag)})
    return {"dims": list(psi.dims.d), "terms": terms}


def state_from_dict(d: dict) -> PureState:
    try:
        dims = Dims(d["dims"])
        terms = [
            (tuple(t["ket"]), complex(float(t.get("re", 0.0)), float(t.get("im", 0.0))))
            for t in d["terms"]
        ]
    except (KeyError, TypeError) as exc:
        raise MalformedFixture(f"bad state JSON: {exc}") from exc
    return PureState.from_terms(dims, terms)


def load_state(path) -> PureState:
    return state_from_dict(json.loads(Path(path).read_text()))


def save_state(psi: PureState, path) -> None:
    Path(path).write_text(json.dumps(state_to_dict(psi), indent=1))


def inequality_to_dict(q: RationalInequality, dims=None) -> dict:
    d = {"coeffs": [str(c) for c in q.coeffs], "offset": str(q.offset)}
    if dims is not None:
        d["dims"] = list(dims)
    return d


def inequality_from_dict(d: dict) -> RationalInequality:
    try:
        return RationalInequality(
            [parse_rational(c) for c in d["coeffs"]], parse_rational(d["offset"])
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFixture(f"bad inequality JSON: {exc}") from exc


def polytope_to_dict(p: HPolytope | VPolytope) -> dict:
    if isinstance(p, HPolytope):
        d = {"ineqs": [inequality_to_dict(q) for q in p.ineqs]}
    else:
        d = {"verts": [[str(x) for x in v] for v in p.verts]}
    if p.dims is not None:
        d["dims"] = list(p.dims)
    return d


def polytope_from_dict(d: dict) -> HPolytope | VPolytope:
    dims = d.get("dims")
    if "ineqs" in d:
        return HPolytope([inequality_from_dict(q) for q in d["ineqs"]], dims=dims)
    if "verts" in d:
        return VPolytope([[parse_rational(x) for x in v] for v in d["verts"]], dims=dims)
    raise MalformedFixture("polytope JSON needs 'ineqs' or 'verts'")


def load_polytope(path):
    return polytope_from_dict(json.loads(Path(path).read_text()))
