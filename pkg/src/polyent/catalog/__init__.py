"""Machine-readable fixtures for the published class tables.

Each entry carries an SLOCC class representative, the dims' generic
inequality system where the source provides one, the class's additional
inequalities, and its exact closest-point inequality.  Fixtures were
frozen only after recomputation with the exact engines; entries whose
printed rows disagree with the recomputation carry the printed variant
under ``closest_point_printed`` and an explanatory note.
"""

from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Sequence

import numpy as np

from ..convex import (
    HPolytope,
    RationalInequality,
    VPolytope,
    contains,
    dedupe_inequalities,
    enumerate_vertices,
    facet_hull,
    local_constraints,
)
from ..errors import BadParams, MalformedFixture, NoNonnegativeSolution, NotFree, UnknownId
from ..freestates import solve_closest_point
from ..serialize import inequality_from_dict, parse_rational
from ..states import Dims, PureState, apply_slocc, local_spectrum, most_local, normalize, random_slocc


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dims: tuple[int, ...]
    class_name: str
    representative: PureState
    generic: bool
    generic_available: bool
    inequalities: tuple[RationalInequality, ...]
    suspect_inequalities: tuple[RationalInequality, ...]
    generic_inequalities: tuple[RationalInequality, ...] | None
    closest_point_ineq: RationalInequality | str | None
    closest_point_printed: str | None
    expected_vertices: tuple | None
    flags: tuple[str, ...]
    source: str
    notes: str | None

    @property
    def duplicate_suspect(self) -> bool:
        return "duplicate_suspect" in self.flags


def _data_dir():
    return resources.files(__package__) / "data"


def _iter_fixture_paths():
    for sub in sorted(_data_dir().iterdir(), key=lambda p: p.name):
        if sub.is_dir():
            yield from sorted(sub.iterdir(), key=lambda p: p.name)


def _parse_entry(raw: dict) -> CatalogEntry:
    try:
        dims = Dims(raw["dims"])
        rep = PureState.from_terms(
            dims,
            [
                (tuple(t["ket"]), complex(t.get("re", 0.0), t.get("im", 0.0)))
                for t in raw["representative"]
            ],
        )
        rep = normalize(rep)
        ineqs = tuple(inequality_from_dict(q) for q in raw.get("inequalities", []))
        suspect = tuple(
            inequality_from_dict(q) for q in raw.get("suspect_inequalities", [])
        )
        gen = raw.get("generic_inequalities")
        gen = tuple(inequality_from_dict(q) for q in gen) if gen is not None else None
        cp = raw.get("closest_point_ineq")
        if isinstance(cp, dict):
            cp = inequality_from_dict(cp)
        ev = raw.get("expected_vertices")
        if ev is not None:
            ev = tuple(tuple(parse_rational(x) for x in v) for v in ev)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFixture(f"{raw.get('id', '?')}: {exc}") from exc
    return CatalogEntry(
        id=raw["id"],
        dims=dims.d,
        class_name=raw.get("class_name", raw["id"]),
        representative=rep,
        generic=raw.get("generic", False),
        generic_available=raw.get("generic_available", True),
        inequalities=ineqs,
        suspect_inequalities=suspect,
        generic_inequalities=gen,
        closest_point_ineq=cp,
        closest_point_printed=raw.get("closest_point_printed"),
        expected_vertices=ev,
        flags=tuple(raw.get("flags", [])),
        source=raw.get("source", ""),
        notes=raw.get("notes"),
    )


_CACHE: dict[str, CatalogEntry] | None = None


def _all() -> dict[str, CatalogEntry]:
    global _CACHE
    if _CACHE is None:
        _CACHE = {}
        for path in _iter_fixture_paths():
            raw = json.loads(path.read_text())
            _CACHE[raw["id"]] = _parse_entry(raw)
    return _CACHE


def load(id: str) -> CatalogEntry:
    try:
        return _all()[id]
    except KeyError:
        raise UnknownId(f"no catalog entry {id!r}") from None


def list_entries(dims: Sequence[int] | None = None) -> list[CatalogEntry]:
    out = list(_all().values())
    if dims is not None:
        dims = tuple(dims)
        out = [e for e in out if e.dims == dims]
    return sorted(out, key=lambda e: e.id)


def generic_system(dims: Sequence[int]) -> HPolytope:
    """The dims' generic (quantum marginal) inequality system."""
    dims = tuple(dims)
    for e in list_entries(dims):
        if e.generic and e.generic_inequalities:
            return HPolytope(e.generic_inequalities, dims=dims)
    raise UnknownId(f"no generic system recorded for dims {dims}")


def entry_polytope(e: CatalogEntry) -> HPolytope:
    """Complete halfspace system for an entry: locals + generic + additional.

    Only meaningful when the dims' generic system is available (or the
    entry's list is self-contained); raises UnknownId otherwise.
    """
    rows = list(local_constraints(e.dims))
    if e.generic_available:
        rows += list(generic_system(e.dims).ineqs)
    elif not e.inequalities:
        raise UnknownId(f"{e.id}: no complete polytope description available")
    rows += list(e.inequalities)
    return HPolytope(dedupe_inequalities(rows), dims=e.dims)


def sampling_inequalities(e: CatalogEntry) -> list[RationalInequality]:
    """All inequalities asserted valid for the entry's orbit polytope.

    Rows recorded under ``suspect_inequalities`` (printed rows that states
    of their own class provably violate) are excluded.
    """
    rows = list(local_constraints(e.dims))
    if e.generic_available:
        rows += list(generic_system(e.dims).ineqs)
    rows += list(e.inequalities)
    if isinstance(e.closest_point_ineq, RationalInequality):
        rows.append(e.closest_point_ineq)
    return dedupe_inequalities(rows)


# -- Dicke states -----------------------------------------------------------

def dicke_state(m: int, n: int) -> PureState:
    """Symmetric n-qubit state: equal superposition of kets with m ones."""
    if not (0 <= m <= n) or n < 1:
        raise BadParams(f"need 0 <= M <= N, got M={m}, N={n}")
    if not 0 < m < n / 2:
        warnings.warn(
            f"Dicke(M={m}, N={n}) outside the regime 0 < M < N/2; "
            "the polytope statement is only asserted there",
            stacklevel=2,
        )
    dims = Dims([2] * n)
    terms = []
    for ones in itertools.combinations(range(n), m):
        ket = [0] * n
        for i in ones:
            ket[i] = 1
        terms.append((tuple(ket), 1.0))
    return normalize(PureState.from_terms(dims, terms))


def dicke_inequality(m: int, n: int) -> RationalInequality:
    """The halfspace sum_i lambda_max^(i) >= N - M cutting the Dicke polytope."""
    if not (0 <= m <= n) or n < 1:
        raise BadParams(f"need 0 <= M <= N, got M={m}, N={n}")
    return RationalInequality([-1] * n, n - m)


def qubit_generic_system(n: int) -> HPolytope:
    """Generic polytope of n qubits: local box plus polygonal inequalities."""
    dims = tuple([2] * n)
    rows = list(local_constraints(dims))
    for i in range(n):
        # sum_{j != i} x_j <= x_i + (n - 2)
        coeffs = [1] * n
        coeffs[i] = -1
        rows.append(RationalInequality(coeffs, -(n - 2)))
    return HPolytope(dedupe_inequalities(rows), dims=dims)


# -- verification harness ----------------------------------------------------

def verify_entry(e: CatalogEntry, samples: int = 50, seed: int = 0,
                 slack: float = 1e-8) -> dict:
    """Recompute what the fixture claims; returns a report dict.

    Checks, where applicable: (a) exact vertex enumeration of the complete
    system against the stored vertex fixture plus the hull round trip;
    (b) closest-point recomputation on the representative; (c) random
    SLOCC images of the representative against every valid inequality.
    """
    report = {"id": e.id, "checks": [], "ok": True}

    def check(name, ok, detail=""):
        report["checks"].append({"name": name, "ok": bool(ok), "detail": detail})
        if not ok:
            report["ok"] = False

    if e.expected_vertices is not None:
        p = entry_polytope(e)
        v = enumerate_vertices(p)
        check("vertex-enumeration", set(v.verts) == set(e.expected_vertices),
              f"{len(v.verts)} vertices")
        v2 = enumerate_vertices(facet_hull(v))
        check("hull-roundtrip", v2.verts == v.verts)

    cp = e.closest_point_ineq
    if cp is not None:
        try:
            sol = solve_closest_point(e.representative)
            got = sol.inequality if sol.inequality is not None else "contains_origin"
        except NotFree:
            got = "not_free"
        except NoNonnegativeSolution:
            got = "no_nonnegative_solution"
        check("closest-point", got == cp, f"recomputed {got}")

    ineqs = sampling_inequalities(e)
    rep_point = most_local(local_spectrum(e.representative))
    worst = min(
        (-float(q.value(rep_point)) for q in ineqs), default=0.0
    )
    check("representative-inside", worst >= -1e-10, f"min slack {worst:.2e}")

    rng_seeds = range(seed, seed + samples)
    worst = 0.0
    for s in rng_seeds:
        g = random_slocc(e.dims, seed=s)
        img = apply_slocc(g, e.representative)
        x = most_local(local_spectrum(img))
        for q in ineqs:
            worst = min(worst, -float(q.value(x)))
    check("slocc-sampling", worst >= -slack, f"{samples} samples, min slack {worst:.2e}")
    return report


def verify_all(samples: int = 20, seed: int = 0) -> list[dict]:
    return [verify_entry(e, samples=samples, seed=seed) for e in list_entries()]
