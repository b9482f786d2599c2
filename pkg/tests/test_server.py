import json

import pytest
from fastapi.testclient import TestClient

from polyent.serialize import state_to_dict
from polyent.server import create_app
from polyent.states import ghz_state, w_state


@pytest.fixture()
def client():
    return TestClient(create_app())


def _w_session(client, auto_generic=True):
    body = {"state": state_to_dict(w_state()), "seed": 7}
    if auto_generic:
        body["generic_id"] = "222-generic"
    r = client.post("/sessions", json=body)
    assert r.status_code == 201
    return r.json()


def test_create_and_list(client):
    s = _w_session(client)
    assert s["status"] == "Flowing" and s["counts"]["expected"] == 5
    listed = client.get("/sessions").json()
    assert [x["id"] for x in listed] == [s["id"]]
    full = client.get(f"/sessions/{s['id']}").json()
    assert full["counts"] == s["counts"]
    assert full["initial_state"]["dims"] == [2, 2, 2]


def test_unknown_session_404(client):
    assert client.get("/sessions/nope").status_code == 404


def test_malformed_body_400(client):
    r = client.post("/sessions", json={"state": {"dims": [2, 2]}})
    assert r.status_code == 400


def test_step_until_awaiting_then_inequality(client):
    s = _w_session(client)
    sid = s["id"]
    view = client.post(f"/sessions/{sid}/step").json()
    assert view["status"] == "AwaitingInequality"
    assert view["last_outcome"]["suggested_inequality"] == [-1, -1, -1, 2]

    # guard: cutting a found vertex is refused with a machine-readable name
    # (no vertex found yet, so first exercise DoesNotCutTarget)
    r = client.post(f"/sessions/{sid}/inequality",
                    json={"coeffs": [-1, -1, -1], "offset": 1})
    assert r.status_code == 409 and r.json()["error"] == "DoesNotCutTarget"

    r = client.post(f"/sessions/{sid}/inequality",
                    json={"coeffs": [-1, -1, -1], "offset": 2})
    assert r.status_code == 200 and r.json()["status"] == "Flowing"

    # run to completion
    view = client.post(f"/sessions/{sid}/auto").json()
    assert view["status"] == "Done"
    assert len(view["vertices_found"]) == 4

    # guard now fires on found vertices
    r = client.post(f"/sessions/{sid}/inequality",
                    json={"coeffs": [1, 1, 1], "offset": "-5/2"})
    assert r.status_code == 409 and r.json()["error"] in (
        "CutsFoundVertex", "WrongStatus"
    )


def test_auto_endpoint_w(client):
    s = _w_session(client)
    view = client.post(f"/sessions/{s['id']}/auto").json()
    assert view["status"] == "Done" and len(view["vertices_found"]) == 4
    autos = [q for q in view["inequalities"] if q["provenance"] == "auto"]
    assert [(q["coeffs"], q["offset"]) for q in autos] == [(["-1", "-1", "-1"], "2")]


def test_consider_found_endpoint(client):
    s = _w_session(client)
    sid = s["id"]
    client.post(f"/sessions/{sid}/step")
    r = client.post(f"/sessions/{sid}/consider-found")
    assert r.status_code == 200 and r.json()["status"] == "Flowing"
    r = client.post(f"/sessions/{sid}/consider-found")
    assert r.status_code == 409 and r.json()["error"] == "WrongStatus"


def test_event_stream_replayable(client):
    s = _w_session(client)
    sid = s["id"]
    client.post(f"/sessions/{sid}/auto")
    with client.stream("GET", f"/sessions/{sid}/events?since=-1") as r:
        text = "".join(chunk for chunk in r.iter_text())
    events = [json.loads(line[len("data: "):])
              for line in text.splitlines() if line.startswith("data: ")]
    assert events[0]["kind"] == "Started"
    assert events[-1]["kind"] == "Finished"
    seqs = [e["seq"] for e in events]
    assert seqs == list(range(len(seqs)))

    # resume from the middle yields exactly the missing suffix
    mid = seqs[len(seqs) // 2]
    with client.stream("GET", f"/sessions/{sid}/events?since={mid}") as r:
        text2 = "".join(chunk for chunk in r.iter_text())
    events2 = [json.loads(line[len("data: "):])
               for line in text2.splitlines() if line.startswith("data: ")]
    assert [e["seq"] for e in events2] == seqs[len(seqs) // 2 + 1:]

    # replaying the event payloads reconstructs the API-visible state
    from polyent.sic import SicEvent, replay_events, sic_report

    replayed = replay_events([SicEvent(seq=e["seq"], kind=e["kind"],
                                       payload=e["payload"], ts=e["ts"])
                              for e in events])
    view = client.get(f"/sessions/{sid}").json()
    rep = sic_report(replayed)
    assert rep["vertices_found"] == [tuple(v) for v in view["vertices_found"]] or [
        list(v) for v in rep["vertices_found"]
    ] == view["vertices_found"]
    assert rep["status"] == view["status"]


def test_catalog_endpoint(client):
    entries = client.get("/catalog").json()
    ids = {e["id"] for e in entries}
    assert "222-generic" in ids and "233-psi4" in ids
    ghz = next(e for e in entries if e["id"] == "222-generic")
    assert ghz["state"]["dims"] == [2, 2, 2]


def test_ghz_auto_via_api(client):
    body = {"state": state_to_dict(ghz_state()), "generic_id": "222-generic", "seed": 5}
    s = client.post("/sessions", json=body).json()
    view = client.post(f"/sessions/{s['id']}/auto").json()
    assert view["status"] == "Done" and len(view["vertices_found"]) == 5
    assert not [q for q in view["inequalities"] if q["provenance"] == "auto"]
