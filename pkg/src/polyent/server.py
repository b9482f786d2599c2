"""Local HTTP service exposing SIC sessions to the operator console.

JSON over HTTP plus a server-sent-event stream per session; no
authentication (localhost tool).  Commands for one session are serialized
through a per-session lock; events carry monotone sequence numbers so a
client can resume the stream from the last sequence it saw.
"""

from __future__ import annotations

import asyncio
import json
import threading
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse

from . import catalog
from .errors import (
    AutoRoundingFailed,
    CutsFoundVertex,
    DoesNotCutTarget,
    NotCompatibleWithClosestPoint,
    PolyentError,
    UnknownId,
    WrongStatus,
)
from .flow import FlowOptions
from .serialize import state_from_dict, state_to_dict
from .sic import (
    ACCEPT_SUGGESTED,
    AWAITING,
    DONE,
    FAILED,
    FLOWING,
    SicSession,
    add_generic_inequalities,
    consider_found,
    sic_add_inequality,
    sic_report,
    sic_run_auto,
    sic_start,
    sic_step,
)

GUARD_ERRORS = (CutsFoundVertex, DoesNotCutTarget, NotCompatibleWithClosestPoint,
                WrongStatus, AutoRoundingFailed)


class SessionManager:
    def __init__(self):
        self._sessions: dict[str, SicSession] = {}
        self._locks: dict[str, threading.Lock] = {}

    def create(self, session: SicSession):
        self._sessions[session.id] = session
        self._locks[session.id] = threading.Lock()

    def get(self, sid: str) -> SicSession:
        try:
            return self._sessions[sid]
        except KeyError:
            raise UnknownId(sid) from None

    def lock(self, sid: str) -> threading.Lock:
        return self._locks[sid]

    def all(self):
        return list(self._sessions.values())


def _summary(s: SicSession) -> dict:
    return {
        "id": s.id,
        "dims": list(s.dims.d),
        "status": s.status,
        "counts": s.counts(),
        "last_seq": len(s.events) - 1,
    }


def _full_view(s: SicSession) -> dict:
    view = sic_report(s)
    view["last_seq"] = len(s.events) - 1
    view["initial_state"] = state_to_dict(s.initial_state)
    return view


def create_app() -> FastAPI:
    app = FastAPI(title="polyent session api")
    manager = SessionManager()
    app.state.manager = manager

    @app.exception_handler(PolyentError)
    async def _domain_error(request: Request, exc: PolyentError):
        name = type(exc).__name__
        if isinstance(exc, UnknownId):
            code = 404
        elif isinstance(exc, GUARD_ERRORS):
            code = 409
        else:
            code = 400
        return JSONResponse(status_code=code, content={"error": name, "detail": str(exc)})

    @app.get("/catalog")
    def catalog_list():
        return [
            {
                "id": e.id,
                "dims": list(e.dims),
                "class_name": e.class_name,
                "generic": e.generic,
                "state": state_to_dict(e.representative),
            }
            for e in catalog.list_entries()
        ]

    @app.post("/sessions", status_code=201)
    async def create_session(body: dict):
        psi = state_from_dict(body["state"])
        opts = FlowOptions(**body.get("options", {}))
        seed = int(body.get("seed", 0))
        s = sic_start(psi, body.get("dims"), opts, seed=seed)
        generic = body.get("generic_id", body.get("add_generic"))
        if generic:
            add_generic_inequalities(s, generic if isinstance(generic, str) else None)
        manager.create(s)
        return _summary(s)

    @app.get("/sessions")
    def list_sessions():
        return [_summary(s) for s in manager.all()]

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        return _full_view(manager.get(sid))

    def _locked(sid: str, fn):
        s = manager.get(sid)
        with manager.lock(sid):
            fn(s)
        return _full_view(s)

    @app.post("/sessions/{sid}/step")
    async def step(sid: str):
        return await asyncio.to_thread(_locked, sid, sic_step)

    @app.post("/sessions/{sid}/auto")
    async def auto(sid: str):
        def run(s):
            try:
                sic_run_auto(s, policy=ACCEPT_SUGGESTED)
            except AutoRoundingFailed:
                pass  # recorded in the session as Failed
        return await asyncio.to_thread(_locked, sid, run)

    @app.post("/sessions/{sid}/consider-found")
    async def consider(sid: str):
        return await asyncio.to_thread(_locked, sid, consider_found)

    @app.post("/sessions/{sid}/inequality")
    async def add_ineq(sid: str, body: dict):
        coeffs = [c for c in body["coeffs"]]
        offset = body["offset"]
        def run(s):
            sic_add_inequality(s, list(coeffs) + [offset], provenance="operator")
        return await asyncio.to_thread(_locked, sid, run)

    @app.get("/sessions/{sid}/events")
    async def events(sid: str, since: int = -1, follow: bool = True):
        s = manager.get(sid)

        async def stream():
            sent = since
            while True:
                while sent + 1 < len(s.events):
                    sent += 1
                    ev = s.events[sent]
                    yield f"id: {ev.seq}\nevent: {ev.kind}\ndata: {json.dumps(ev.to_dict())}\n\n"
                if s.status in (DONE, FAILED) or not follow:
                    break
                await asyncio.sleep(0.05)

        return StreamingResponse(stream(), media_type="text/event-stream")

    return app
