"""Semi-interactive polytope computation as a resumable state machine.

The loop alternates exact vertex enumeration of the current outer
approximation with gradient flows toward the expected vertices.  Reached
vertices move to the found set; an unreached vertex pauses the session so
an operator (or the auto policy) can round the emitted inequality and
submit it, after which the expected set is recomputed exactly.  The
session terminates when no vertices remain expected, at which point the
found set IS the vertex set of the approximation.

Every transition appends an event; replaying the event log rebuilds an
identical session without re-running any flow.
"""

from __future__ import annotations

import itertools
import json
import time
import uuid
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .convex import (
    HPolytope,
    RationalInequality,
    dedupe_inequalities,
    enumerate_vertices,
    local_constraints,
)
from .errors import (
    AutoRoundingFailed,
    CutsFoundVertex,
    DimsMismatch,
    DoesNotCutTarget,
    NotCompatibleWithClosestPoint,
    WrongStatus,
    ZeroState,
)
from .flow import FlowOptions, FlowOutcome, convert_to_lambdas, flow
from .serialize import inequality_from_dict, inequality_to_dict, parse_rational, state_from_dict, state_to_dict
from .states import Dims, PureState, most_local, normalize, random_unitary_tuple

FLOWING = "Flowing"
AWAITING = "AwaitingInequality"
DONE = "Done"
FAILED = "Failed"

CLOSEST_POINT_SLACK = 1e-6


@dataclass(frozen=True)
class SicEvent:
    seq: int
    kind: str
    payload: dict
    ts: float

    def to_dict(self) -> dict:
        return {"seq": self.seq, "kind": self.kind, "payload": self.payload, "ts": self.ts}


def _vert_key(v) -> tuple[str, ...]:
    return tuple(str(x) for x in v)


def _vert_parse(v) -> tuple[Fraction, ...]:
    return tuple(parse_rational(x) for x in v)


@dataclass
class SicSession:
    id: str
    initial_state: PureState
    dims: Dims
    flow_options: FlowOptions
    coadjoint_seed: int
    current_ineqs: list[RationalInequality] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    verts_expected: list[tuple[Fraction, ...]] = field(default_factory=list)
    verts_found: list[tuple[Fraction, ...]] = field(default_factory=list)
    found_audit: list[dict] = field(default_factory=list)
    status: str = FLOWING
    pending_vertex: tuple[Fraction, ...] | None = None
    last_outcome: FlowOutcome | None = None
    last_outcome_dict: dict | None = None
    events: list[SicEvent] = field(default_factory=list)
    flows_run: int = 0
    fail_reason: str | None = None

    # -- events ------------------------------------------------------------

    def _emit(self, kind: str, payload: dict) -> SicEvent:
        ev = SicEvent(seq=len(self.events), kind=kind, payload=payload, ts=time.time())
        self.events.append(ev)
        return ev

    # -- derived views -------------------------------------------------------

    def polytope(self) -> HPolytope:
        return HPolytope(self.current_ineqs, dims=self.dims.d)

    def _recompute_expected(self):
        verts = enumerate_vertices(self.polytope()).verts
        found = set(self.verts_found)
        kept, audit = [], []
        for v, a in zip(self.verts_found, self.found_audit):
            if v in set(verts):
                kept.append(v)
                audit.append(a)
        self.verts_found, self.found_audit = kept, audit
        found = set(self.verts_found)
        self.verts_expected = [v for v in verts if v not in found]

    def counts(self) -> dict:
        return {
            "expected": len(self.verts_expected),
            "found": len(self.verts_found),
            "inequalities": len(self.current_ineqs),
        }


def sic_start(psi: PureState, dims: Dims | Sequence[int] | None = None,
              opts: FlowOptions = FlowOptions(), seed: int = 0) -> SicSession:
    """New session seeded with the local Weyl-chamber/density constraints."""
    if dims is None:
        dims = psi.dims
    elif not isinstance(dims, Dims):
        dims = Dims(dims)
    if dims.d != psi.dims.d:
        raise DimsMismatch(f"state dims {psi.dims.d} != requested {dims.d}")
    psi = normalize(psi)
    s = SicSession(
        id=uuid.uuid4().hex[:12],
        initial_state=psi,
        dims=dims,
        flow_options=opts,
        coadjoint_seed=seed,
    )
    s.current_ineqs = list(local_constraints(dims.d))
    s.provenance = ["initial"] * len(s.current_ineqs)
    s._recompute_expected()
    s._emit("Started", {
        "state": state_to_dict(psi),
        "dims": list(dims.d),
        "seed": seed,
        "options": _options_dict(opts),
        "initial_inequalities": [inequality_to_dict(q) for q in s.current_ineqs],
        "expected": [_vert_key(v) for v in s.verts_expected],
    })
    return s


def _options_dict(o: FlowOptions) -> dict:
    return {
        "max_steps": o.max_steps, "min_progress": o.min_progress,
        "min_step": o.min_step, "initial_step": o.initial_step,
        "max_restarts": o.max_restarts, "target_precision": o.target_precision,
        "seed": o.seed,
    }


def add_generic_inequalities(s: SicSession, source=None) -> SicSession:
    """Union the generic-polytope system into the session and recompute.

    ``source`` may be a catalog id, an HPolytope, an iterable of
    inequalities, or None for the dims' recorded generic system.
    """
    from . import catalog as _catalog

    if source is None:
        p = _generic_for(s.dims.d)
        label = "generic"
    elif isinstance(source, HPolytope):
        p, label = source, "generic"
    elif isinstance(source, str):
        entry = _catalog.load(source)
        if tuple(entry.dims) != s.dims.d:
            raise DimsMismatch(f"{source} has dims {entry.dims}, session has {s.dims.d}")
        p = HPolytope(entry.generic_inequalities or entry.inequalities, dims=entry.dims)
        label = f"generic:{source}"
    else:
        p = HPolytope(list(source), dims=s.dims.d)
        label = "generic"
    if p.ambient_dim != s.dims.most_local_dim:
        raise DimsMismatch("generic system has the wrong ambient dimension")
    existing = set((q.coeffs, q.offset) for q in s.current_ineqs)
    added = []
    for q in p.ineqs:
        if (q.coeffs, q.offset) not in existing:
            s.current_ineqs.append(q)
            s.provenance.append(label)
            added.append(q)
    s._recompute_expected()
    s._emit("GenericAdded", {
        "source": label,
        "added": [inequality_to_dict(q) for q in added],
        "expected": [_vert_key(v) for v in s.verts_expected],
    })
    return s


def _generic_for(dims: tuple[int, ...]) -> HPolytope:
    from . import catalog as _catalog

    try:
        return _catalog.generic_system(dims)
    except Exception:
        if all(d == 2 for d in dims):
            return _catalog.qubit_generic_system(len(dims))
        raise


def sic_step(s: SicSession) -> SicSession:
    """Flow toward the first expected vertex (lexicographic order)."""
    if s.status != FLOWING:
        raise WrongStatus(f"sic_step requires status {FLOWING}, session is {s.status}")
    if not s.verts_expected:
        s.status = DONE
        s._emit("Finished", {"found": [_vert_key(v) for v in s.verts_found]})
        return s
    target = s.verts_expected.pop(0)
    lam = convert_to_lambdas(list(target), s.dims)
    u0 = random_unitary_tuple(s.dims, seed=(s.coadjoint_seed, s.flows_run))
    s.flows_run += 1
    out = flow(s.initial_state, u0, lam, s.dims, s.flow_options)
    s.last_outcome = out
    s.last_outcome_dict = out.to_dict()
    if out.reached:
        s.verts_found.append(target)
        s.found_audit.append({
            "vertex": list(_vert_key(target)),
            "distance": out.final_distance,
            "target_precision": s.flow_options.target_precision,
            "operator_asserted": False,
        })
        s._emit("VertexFound", {
            "vertex": _vert_key(target),
            "distance": out.final_distance,
            "steps": out.steps_taken,
        })
        if not s.verts_expected:
            s.status = DONE
            s._emit("Finished", {"found": [_vert_key(v) for v in s.verts_found]})
    else:
        s.pending_vertex = target
        s.status = AWAITING
        s._emit("VertexNotFound", {
            "vertex": _vert_key(target),
            "closest_point": [float(x) for x in most_local(out.final_spectrum)],
            "final_distance": out.final_distance,
            "raw_inequality": list(out.raw_inequality or []),
            "pretty_inequality": out.pretty_inequality,
            "suggested_inequality": list(out.suggested_inequality)
            if out.suggested_inequality else None,
            "exit_reason": out.exit_reason.value,
        })
    return s


def sic_add_inequality(s: SicSession, ineq, provenance: str = "operator") -> SicSession:
    """Add a separating inequality after a failed flow (or inject manually).

    Guards: the inequality must exclude the vertex the flow missed, must
    keep every found vertex (exact), and must hold at the last flow's
    closest point within 1e-6.
    """
    if s.status not in (AWAITING, FLOWING):
        raise WrongStatus(f"cannot add an inequality while {s.status}")
    if not isinstance(ineq, RationalInequality):
        seq = list(ineq)
        ineq = RationalInequality(seq[:-1], seq[-1])
    if len(ineq.coeffs) != s.dims.most_local_dim:
        raise DimsMismatch("inequality has the wrong ambient dimension")
    if s.status == AWAITING:
        assert s.pending_vertex is not None
        if ineq.value(s.pending_vertex) <= 0:
            raise DoesNotCutTarget(
                f"inequality keeps the unfound vertex {_vert_key(s.pending_vertex)}"
            )
    for v in s.verts_found:
        if ineq.value(v) > 0:
            raise CutsFoundVertex(f"inequality cuts the found vertex {_vert_key(v)}")
    p = None
    if s.last_outcome is not None:
        p = most_local(s.last_outcome.final_spectrum)
    elif s.last_outcome_dict is not None and s.last_outcome_dict.get("closest_point"):
        p = s.last_outcome_dict["closest_point"]
    if p is not None:
        val = sum(c * x for c, x in zip(ineq.coeffs, p)) + ineq.offset
        if val > CLOSEST_POINT_SLACK:
            raise NotCompatibleWithClosestPoint(
                f"inequality is violated by the last closest point by {float(val):.3g}"
            )
    s.current_ineqs.append(ineq)
    s.provenance.append(provenance)
    s.pending_vertex = None
    s.status = FLOWING
    s._recompute_expected()
    s._emit("InequalityAdded", {
        "inequality": inequality_to_dict(ineq),
        "provenance": provenance,
        "expected": [_vert_key(v) for v in s.verts_expected],
    })
    return s


def consider_found(s: SicSession) -> SicSession:
    """Operator assertion: move the contested vertex to the found set."""
    if s.status != AWAITING or s.pending_vertex is None:
        raise WrongStatus("consider_found requires a pending unfound vertex")
    v = s.pending_vertex
    s.verts_found.append(v)
    s.found_audit.append({
        "vertex": list(_vert_key(v)),
        "distance": s.last_outcome.final_distance if s.last_outcome else None,
        "target_precision": s.flow_options.target_precision,
        "operator_asserted": True,
    })
    s.pending_vertex = None
    s.status = FLOWING
    s._emit("ConsideredFound", {"vertex": _vert_key(v)})
    if not s.verts_expected:
        s.status = DONE
        s._emit("Finished", {"found": [_vert_key(v) for v in s.verts_found]})
    return s


ACCEPT_SUGGESTED = "AcceptSuggested"
FAIL_ON_UNRATED = "FailOnUnrated"


def sic_run_auto(s: SicSession, policy: str = ACCEPT_SUGGESTED,
                 max_flows: int = 500) -> SicSession:
    """Headless driver: step until done, auto-accepting suggested inequalities.

    A suggestion that is unrated (or rejected by a guard) fails the
    session; the guards are never overridden.
    """
    if s.status not in (FLOWING,):
        raise WrongStatus(f"auto run requires status {FLOWING}")
    flows = 0
    while s.status == FLOWING and flows < max_flows:
        sic_step(s)
        flows += 1
        if s.status == AWAITING:
            sug = s.last_outcome.suggested_inequality if s.last_outcome else None
            if sug is None:
                s.status = FAILED
                s.fail_reason = "flow produced an unrated inequality"
                s._emit("Failed", {"reason": s.fail_reason})
                if policy == FAIL_ON_UNRATED:
                    raise AutoRoundingFailed(s.fail_reason)
                return s
            try:
                sic_add_inequality(s, sug, provenance="auto")
            except (CutsFoundVertex, DoesNotCutTarget, NotCompatibleWithClosestPoint) as exc:
                s.status = FAILED
                s.fail_reason = f"suggested inequality rejected: {exc}"
                s._emit("Failed", {"reason": s.fail_reason})
                raise AutoRoundingFailed(s.fail_reason) from exc
    return s


def sic_report(s: SicSession) -> dict:
    """JSON-serializable summary of the session."""
    return {
        "id": s.id,
        "dims": list(s.dims.d),
        "status": s.status,
        "fail_reason": s.fail_reason,
        "counts": s.counts(),
        "vertices_found": [_vert_key(v) for v in s.verts_found],
        "vertices_expected": [_vert_key(v) for v in s.verts_expected],
        "found_audit": list(s.found_audit),
        "inequalities": [
            dict(inequality_to_dict(q), provenance=p)
            for q, p in zip(s.current_ineqs, s.provenance)
        ],
        "pending_vertex": _vert_key(s.pending_vertex) if s.pending_vertex else None,
        "last_outcome": s.last_outcome_dict,
        "events": len(s.events),
    }


# -- event-log persistence and replay ----------------------------------------

def save_events(s: SicSession, path) -> None:
    with open(path, "w") as fh:
        for ev in s.events:
            fh.write(json.dumps(ev.to_dict()) + "\n")


def load_events(path) -> list[SicEvent]:
    out = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            d = json.loads(line)
            out.append(SicEvent(seq=d["seq"], kind=d["kind"], payload=d["payload"], ts=d["ts"]))
    return out


def replay_events(events: Iterable[SicEvent]) -> SicSession:
    """Rebuild the session state from its event log, without re-flowing."""
    events = list(events)
    if not events or events[0].kind != "Started":
        raise ZeroState("event log must begin with a Started event")
    p0 = events[0].payload
    s = sic_start(
        state_from_dict(p0["state"]),
        p0["dims"],
        FlowOptions(**p0["options"]),
        seed=p0["seed"],
    )
    s.events = [events[0]]
    for ev in events[1:]:
        kind, pl = ev.kind, ev.payload
        if kind == "GenericAdded":
            for q in pl["added"]:
                s.current_ineqs.append(inequality_from_dict(q))
                s.provenance.append(pl["source"])
            s._recompute_expected()
        elif kind == "VertexFound":
            v = _vert_parse(pl["vertex"])
            if v in s.verts_expected:
                s.verts_expected.remove(v)
            s.verts_found.append(v)
            s.found_audit.append({
                "vertex": pl["vertex"],
                "distance": pl.get("distance"),
                "target_precision": s.flow_options.target_precision,
                "operator_asserted": False,
            })
            s.flows_run += 1
        elif kind == "VertexNotFound":
            v = _vert_parse(pl["vertex"])
            if v in s.verts_expected:
                s.verts_expected.remove(v)
            s.pending_vertex = v
            s.status = AWAITING
            s.last_outcome_dict = {
                "reached": False,
                "final_distance": pl["final_distance"],
                "closest_point": pl["closest_point"],
                "raw_inequality": pl["raw_inequality"],
                "pretty_inequality": pl["pretty_inequality"],
                "suggested_inequality": pl["suggested_inequality"],
                "exit_reason": pl.get("exit_reason"),
            }
            s.flows_run += 1
        elif kind == "InequalityAdded":
            s.current_ineqs.append(inequality_from_dict(pl["inequality"]))
            s.provenance.append(pl["provenance"])
            s.pending_vertex = None
            s.status = FLOWING
            s._recompute_expected()
        elif kind == "ConsideredFound":
            v = _vert_parse(pl["vertex"])
            s.verts_found.append(v)
            s.found_audit.append({
                "vertex": pl["vertex"],
                "distance": None,
                "target_precision": s.flow_options.target_precision,
                "operator_asserted": True,
            })
            s.pending_vertex = None
            s.status = FLOWING
        elif kind == "Finished":
            s.status = DONE
        elif kind == "Failed":
            s.status = FAILED
            s.fail_reason = pl.get("reason")
        s.events.append(ev)
    return s
