"""Command line for the entanglement-polytope toolkit.

Subcommands: eig, closest-point, flow, hull, venum, reduce, sic run,
verify, serve.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .convex import HPolytope, VPolytope, enumerate_vertices, facet_hull, remove_redundant
from .errors import PolyentError
from .flow import FlowOptions, flow_to_point
from .freestates import solve_closest_point
from .serialize import (
    inequality_to_dict,
    load_polytope,
    load_state,
    polytope_to_dict,
)
from .sic import (
    ACCEPT_SUGGESTED,
    add_generic_inequalities,
    sic_report,
    sic_run_auto,
    sic_start,
    save_events,
)
from .states import Dims, local_spectrum, most_local


def _parse_dims(text: str) -> Dims:
    return Dims(int(x) for x in text.split(","))


def _parse_point(text: str):
    return [Fraction(x) for x in text.split(",")]


def _load_checked_state(path: str, dims_text: str | None):
    psi = load_state(path)
    if dims_text is not None:
        dims = _parse_dims(dims_text)
        if dims.d != psi.dims.d:
            raise PolyentError(
                f"--dims {dims.d} does not match the state file's dims {psi.dims.d}"
            )
    return psi


def _emit(args, payload: dict, human: str):
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        print(human)


def cmd_eig(args):
    psi = _load_checked_state(args.state, args.dims)
    spec = local_spectrum(psi)
    ml = most_local(spec)
    _emit(args, {"spectrum": [list(p) for p in spec], "most_local": list(ml)},
          "spectrum:   " + "  ".join(str(tuple(round(x, 10) for x in p)) for p in spec)
          + f"\nmost local: {tuple(round(x, 10) for x in ml)}")
    return 0


def cmd_closest_point(args):
    psi = _load_checked_state(args.state, args.dims)
    sol = solve_closest_point(psi)
    payload = {
        "weights": [str(w) for w in sol.weights],
        "kets": [list(k) for k in sol.kets],
        "lambda": str(sol.lam),
        "point": [[str(x) for x in part] for part in sol.point],
        "contains_origin": sol.contains_origin,
        "inequality": None if sol.inequality is None
        else inequality_to_dict(sol.inequality, psi.dims.d),
    }
    if sol.contains_origin:
        human = "closest point is the origin (polytope contains the origin)"
    else:
        human = f"closest point {sol.point}\ninequality: {sol.inequality.pretty()}"
    _emit(args, payload, human)
    return 0


def cmd_flow(args):
    psi = _load_checked_state(args.state, args.dims)
    opts = FlowOptions.preset(args.preset, seed=args.seed,
                              target_precision=args.target_precision)
    out = flow_to_point(psi, _parse_point(args.target), opts=opts)
    payload = out.to_dict()
    human = (
        f"reached: {out.reached}\nfinal distance: {out.final_distance:.6f}\n"
        f"steps: {out.steps_taken}  restarts: {out.restarts_used}  "
        f"exit: {out.exit_reason.value}"
    )
    if not out.reached and out.raw_inequality:
        human += (
            f"\nraw inequality: {[round(x, 6) for x in out.raw_inequality]}"
            f"\npretty: {out.pretty_inequality}"
            f"\nsuggested: {list(out.suggested_inequality) if out.suggested_inequality else 'unrated'}"
        )
    _emit(args, payload, human)
    return 0


def cmd_venum(args):
    p = load_polytope(args.input)
    if not isinstance(p, HPolytope):
        raise PolyentError("venum expects an inequality file")
    v = enumerate_vertices(p)
    _emit(args, polytope_to_dict(v),
          "\n".join(str(tuple(str(x) for x in vert)) for vert in v.verts)
          + f"\n{len(v.verts)} vertices")
    return 0


def cmd_hull(args):
    p = load_polytope(args.input)
    if not isinstance(p, VPolytope):
        raise PolyentError("hull expects a vertex file")
    h = facet_hull(p)
    _emit(args, polytope_to_dict(h),
          "\n".join(q.pretty() for q in h.ineqs) + f"\n{len(h.ineqs)} inequalities")
    return 0


def cmd_reduce(args):
    p = load_polytope(args.input)
    if not isinstance(p, HPolytope):
        raise PolyentError("reduce expects an inequality file")
    r = remove_redundant(p)
    _emit(args, polytope_to_dict(r),
          "\n".join(q.pretty() for q in r.ineqs)
          + f"\n{len(r.ineqs)} of {len(p.ineqs)} inequalities kept")
    return 0


def cmd_sic_run(args):
    psi = _load_checked_state(args.state, args.dims)
    opts = FlowOptions.preset(args.preset, seed=args.seed)
    s = sic_start(psi, opts=opts, seed=args.seed or 0)
    if args.generic is not None:
        add_generic_inequalities(s, args.generic or None)
    if args.serve:
        import uvicorn

        from .server import create_app

        app = create_app()
        app.state.manager.create(s)
        print(f"session {s.id} created; serving on port {args.port}")
        uvicorn.run(app, host="127.0.0.1", port=args.port, log_level="warning")
        return 0
    if args.auto:
        try:
            sic_run_auto(s, policy=ACCEPT_SUGGESTED)
        except PolyentError as exc:
            print(f"auto run failed: {exc}", file=sys.stderr)
    else:
        from .sic import sic_step, FLOWING

        while s.status == FLOWING:
            sic_step(s)
    if args.events:
        save_events(s, args.events)
    report = sic_report(s)
    if args.json:
        print(json.dumps(report, indent=1))
    else:
        print(f"status: {report['status']}")
        print("vertices found:")
        for v in report["vertices_found"]:
            print("  " + "\t".join(v))
        extra = [q for q in report["inequalities"]
                 if q["provenance"] not in ("initial",) and not q["provenance"].startswith("generic")]
        if extra:
            print("accepted inequalities:")
            for q in extra:
                print(f"  {q['coeffs']} + {q['offset']} <= 0   [{q['provenance']}]")
        if report["status"] == "AwaitingInequality":
            lo = report["last_outcome"]
            print("awaiting inequality for vertex:", report["pending_vertex"])
            print("  raw:", lo["raw_inequality"])
            print("  suggested:", lo["suggested_inequality"])
    return 0


def cmd_verify(args):
    entries = [catalog.load(args.id)] if args.id else catalog.list_entries()
    ok = True
    reports = []
    for e in entries:
        r = catalog.verify_entry(e, samples=args.samples, seed=args.seed)
        reports.append(r)
        ok = ok and r["ok"]
        if not args.json:
            status = "ok " if r["ok"] else "FAIL"
            detail = ", ".join(
                f"{c['name']}:{'ok' if c['ok'] else 'FAIL'}" for c in r["checks"]
            )
            print(f"{status} {e.id:16s} {detail}")
    if args.json:
        print(json.dumps(reports, indent=1))
    return 0 if ok else 1


def cmd_serve(args):
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyent",
                                 description="entanglement polytope toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, dims=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if dims:
            p.add_argument("--dims", help="comma-separated local dimensions, e.g. 2,2,3")

    p = sub.add_parser("eig", help="local spectra and most-local coordinates")
    p.add_argument("--state", required=True)
    common(p)
    p.set_defaults(fn=cmd_eig)

    p = sub.add_parser("closest-point", help="exact closest point for a free state")
    p.add_argument("--state", required=True)
    common(p)
    p.set_defaults(fn=cmd_closest_point)

    p = sub.add_parser("flow", help="gradient-flow a state toward a rational point")
    p.add_argument("--state", required=True)
    p.add_argument("--target", required=True, help="most-local coordinates, e.g. 1/2,1/2,1/2")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--preset", choices=["default", "highdim"], default="default")
    p.add_argument("--target-precision", type=float, default=1e-2)
    common(p)
    p.set_defaults(fn=cmd_flow)

    p = sub.add_parser("venum", help="vertex enumeration of an inequality file")
    p.add_argument("--input", required=True)
    common(p, dims=False)
    p.set_defaults(fn=cmd_venum)

    p = sub.add_parser("hull", help="facet enumeration of a vertex file")
    p.add_argument("--input", required=True)
    common(p, dims=False)
    p.set_defaults(fn=cmd_hull)

    p = sub.add_parser("reduce", help="remove redundant inequalities")
    p.add_argument("--input", required=True)
    common(p, dims=False)
    p.set_defaults(fn=cmd_reduce)

    sic = sub.add_parser("sic", help="semi-interactive polytope computation")
    sic_sub = sic.add_subparsers(dest="sic_command", required=True)
    p = sic_sub.add_parser("run", help="run a SIC session")
    p.add_argument("--state", required=True)
    p.add_argument("--generic", nargs="?", const="", default=None,
                   help="add generic inequalities (optionally a catalog id)")
    p.add_argument("--auto", action="store_true", help="auto-accept suggested inequalities")
    p.add_argument("--serve", action="store_true",
                   help="hand the session to the API server instead of running here")
    p.add_argument("--port", type=int, default=8471)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--preset", choices=["default", "highdim"], default="default")
    p.add_argument("--events", help="write the event log (JSON lines) here")
    common(p)
    p.set_defaults(fn=cmd_sic_run)

    p = sub.add_parser("verify", help="verify catalog fixtures against the engines")
    p.add_argument("--id", help="verify a single entry")
    p.add_argument("--all", action="store_true", help="verify every entry (default)")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    common(p, dims=False)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="serve the SIC session API")
    p.add_argument("--port", type=int, default=8471)
    p.add_argument("--host", default="127.0.0.1")
    common(p, dims=False)
    p.set_defaults(fn=cmd_serve)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except PolyentError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
