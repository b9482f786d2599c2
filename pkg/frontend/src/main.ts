/**
 * Operator console for semi-interactive polytope computation.
 *
 * All state shown here is rebuilt from the server's event log (see
 * model.ts); every mutation goes through the session API.  The inequality
 * editor mirrors the server guards in exact arithmetic so bad roundings
 * are flagged inline before submission, and the server's verdict is final.
 */

import { ApiError, CatalogItem, SessionApi, SicEventJson } from "./api.js";
import { checkInequality, prettyInequality } from "./guards.js";
import { ConsoleModel, applyEvent, coordinateNames, emptyModel, suggestedCoefficients } from "./model.js";
import { pickTriple, project3, toPixels } from "./projection.js";

const api = new SessionApi("");

let model: ConsoleModel = emptyModel();
let events: SicEventJson[] = [];
let streamAbort: AbortController | null = null;
let catalogItems: CatalogItem[] = [];

const $ = <T extends HTMLElement>(id: string) => document.getElementById(id) as T;

async function refreshSessionList() {
  const sessions = await api.listSessions();
  const box = $("session-list");
  box.innerHTML = "";
  for (const s of sessions) {
    const row = document.createElement("div");
    row.className = "session-row" + (s.id === model.sessionId ? " active" : "");
    row.innerHTML =
      `<span class="mono">${s.id}</span> <span class="dims">${s.dims.join("x")}</span>` +
      ` <span class="badge st-${s.status}">${s.status}</span>` +
      ` <span class="counts">${s.counts.found}/${s.counts.found + s.counts.expected} vertices</span>`;
    row.onclick = () => openSession(s.id);
    box.appendChild(row);
  }
}

async function openSession(id: string) {
  streamAbort?.abort();
  events = [];
  model = { ...emptyModel(), sessionId: id };
  render();
  subscribe(id, -1);
}

function subscribe(id: string, since: number) {
  streamAbort = new AbortController();
  const signal = streamAbort.signal;
  let last = since;
  const loop = async (retry = 0): Promise<void> => {
    try {
      last = await api.streamEvents(
        id,
        last,
        (ev) => {
          events.push(ev);
          model = applyEvent(model, ev);
          render();
        },
        signal,
      );
      if (model.status === "Done" || model.status === "Failed") return;
      setTimeout(() => loop(0), 300);
    } catch (err) {
      if (signal.aborted) return;
      const backoff = Math.min(5000, 250 * 2 ** retry);
      setTimeout(() => loop(retry + 1), backoff);
    }
  };
  void loop();
}

// -- rendering ---------------------------------------------------------------

function render() {
  $("status-line").innerHTML = model.sessionId
    ? `session <span class="mono">${model.sessionId}</span> — ` +
      `<span class="badge st-${model.status}">${model.status}</span>` +
      (model.failReason ? ` <span class="fail">${model.failReason}</span>` : "")
    : "no session selected";

  renderVertices();
  renderInequalities();
  renderTelemetry();
  renderEditor();
  renderProjection();
  void refreshSessionList();
}

function vertexRow(v: string[], cls: string, note = ""): string {
  return `<tr class="${cls}"><td class="mono">(${v.join(", ")})</td><td>${note}</td></tr>`;
}

function renderVertices() {
  const rows: string[] = [];
  for (const f of model.found) {
    rows.push(vertexRow(f.vertex, "found", f.operatorAsserted ? "operator-asserted" : "found"));
  }
  if (model.pendingVertex) {
    rows.push(vertexRow(model.pendingVertex, "pending", "not found — awaiting inequality"));
  }
  for (const v of model.expected) {
    rows.push(vertexRow(v, "expected", "expected"));
  }
  $("vertex-table").innerHTML = rows.join("") || "<tr><td>—</td></tr>";
}

function renderInequalities() {
  const names = coordinateNames(model.dims);
  const rows = model.inequalities.map(
    (q) =>
      `<tr><td class="mono">${prettyInequality(q.coeffs, q.offset, names)}</td>` +
      `<td><span class="badge prov-${(q.provenance ?? "initial").split(":")[0]}">` +
      `${q.provenance ?? "initial"}</span></td></tr>`,
  );
  $("ineq-table").innerHTML = rows.join("") || "<tr><td>—</td></tr>";
}

function renderTelemetry() {
  const rows = model.telemetry.map(
    (t) =>
      `<tr class="${t.reached ? "found" : "pending"}">` +
      `<td>#${t.flowIndex}</td><td class="mono">(${t.vertex.join(", ")})</td>` +
      `<td>${t.reached ? "VERTEX FOUND" : "VERTEX NOT FOUND"}</td>` +
      `<td>${t.distance === null ? "" : t.distance.toExponential(2)}</td>` +
      `<td>${t.steps ?? ""}</td></tr>`,
  );
  $("telemetry-table").innerHTML = rows.join("") || "<tr><td>no flows yet</td></tr>";
}

function renderEditor() {
  const panel = $("editor-panel");
  if (model.status !== "AwaitingInequality") {
    panel.classList.add("disabled");
    $("editor-context").textContent =
      model.status === "Done"
        ? "session finished — no more vertices expected"
        : "editor activates when a flow fails to reach a vertex";
    return;
  }
  panel.classList.remove("disabled");
  const lo = model.lastOutcome;
  $("editor-context").innerHTML =
    `target <span class="mono">(${model.pendingVertex!.join(", ")})</span> not reached; ` +
    `closest point <span class="mono">(${(lo?.closest_point ?? [])
      .map((x) => x.toFixed(6))
      .join(", ")})</span><br>` +
    `raw: <span class="mono">[${(lo?.raw_inequality ?? []).map((x) => x.toFixed(6)).join(", ")}]</span>` +
    (lo?.pretty_inequality ? `<br>pretty: <span class="mono">${lo.pretty_inequality}</span>` : "");
  const { coeffs, offset } = suggestedCoefficients(model);
  const coeffInputs = $("coeff-inputs");
  const names = coordinateNames(model.dims);
  coeffInputs.innerHTML = "";
  coeffs.forEach((c, i) => {
    const label = document.createElement("label");
    label.innerHTML = `${names[i] ?? `x${i + 1}`} <input data-idx="${i}" value="${c}">`;
    coeffInputs.appendChild(label);
  });
  ($("offset-input") as HTMLInputElement).value = offset;
  validateEditor();
  for (const input of coeffInputs.querySelectorAll("input")) {
    input.addEventListener("input", validateEditor);
  }
  $("offset-input").addEventListener("input", validateEditor);
}

function editorValues(): { coeffs: string[]; offset: string } {
  const coeffs = Array.from($("coeff-inputs").querySelectorAll("input")).map(
    (i) => (i as HTMLInputElement).value,
  );
  return { coeffs, offset: ($("offset-input") as HTMLInputElement).value };
}

function validateEditor() {
  const { coeffs, offset } = editorValues();
  const verdict = checkInequality({
    coeffs,
    offset,
    pendingVertex: model.pendingVertex,
    foundVertices: model.found.map((f) => f.vertex),
    closestPoint: model.lastOutcome?.closest_point ?? null,
  });
  const msg = $("guard-message");
  const submit = $("submit-ineq") as HTMLButtonElement;
  if (verdict.ok) {
    msg.textContent = "passes local guard checks";
    msg.className = "guard ok";
    submit.disabled = false;
  } else {
    msg.textContent = `${verdict.error}: ${verdict.detail}`;
    msg.className = "guard bad";
    submit.disabled = true;
  }
}

function renderProjection() {
  const canvas = $("projection") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const dmost = model.dims.reduce((acc, d) => acc + d - 1, 0);
  if (!model.dims.length) return;
  const triple = dmost <= 3 ? [0, 1, 2] : readTriple(dmost);
  const pts = [
    ...model.found.map((f) => ({ v: f.vertex.map(fracToNum), kind: "found" as const })),
    ...model.expected.map((v) => ({ v: v.map(fracToNum), kind: "expected" as const })),
    ...(model.pendingVertex
      ? [{ v: model.pendingVertex.map(fracToNum), kind: "pending" as const }]
      : []),
  ];
  const traj = (model.lastOutcome?.trajectory ?? []).map((x) => pickTriple(x, triple));
  const projected = [
    ...pts.map((p) => project3(pickTriple(p.v, triple))),
    ...traj.map(project3),
  ];
  const pixels = toPixels(projected, { width: canvas.width, height: canvas.height, pad: 18 });
  const colors = { found: "#3fb950", expected: "#8b949e", pending: "#f0883e" };
  pts.forEach((p, i) => {
    const px = pixels[i]!;
    ctx.fillStyle = colors[p.kind];
    ctx.beginPath();
    ctx.arc(px.x, px.y, p.kind === "pending" ? 6 : 4, 0, Math.PI * 2);
    ctx.fill();
  });
  ctx.strokeStyle = "#58a6ff";
  ctx.beginPath();
  for (let i = pts.length; i < pixels.length; i++) {
    const px = pixels[i]!;
    if (i === pts.length) ctx.moveTo(px.x, px.y);
    else ctx.lineTo(px.x, px.y);
  }
  ctx.stroke();
}

function fracToNum(s: string): number {
  const slash = s.indexOf("/");
  return slash >= 0 ? Number(s.slice(0, slash)) / Number(s.slice(slash + 1)) : Number(s);
}

function readTriple(dmost: number): number[] {
  const text = ($("triple-input") as HTMLInputElement).value || "1,2,3";
  const triple = text
    .split(",")
    .map((x) => parseInt(x.trim(), 10) - 1)
    .filter((i) => Number.isInteger(i) && i >= 0 && i < dmost);
  while (triple.length < 3) triple.push(triple.length);
  return triple.slice(0, 3);
}

// -- actions ------------------------------------------------------------------

async function createSession() {
  const pick = ($("catalog-pick") as HTMLSelectElement).value;
  const uploaded = ($("state-json") as HTMLTextAreaElement).value.trim();
  const addGeneric = ($("generic-check") as HTMLInputElement).checked;
  let state;
  if (uploaded) {
    state = JSON.parse(uploaded);
  } else if (pick) {
    state = catalogItems.find((c) => c.id === pick)?.state;
  }
  if (!state) {
    alert("pick a catalog representative or paste a state JSON");
    return;
  }
  const dimsKey = (state.dims as number[]).join("x");
  const genericId = catalogItems.find((c) => c.generic && c.dims.join("x") === dimsKey)?.id;
  const summary = await api.createSession({
    state,
    seed: Number(($("seed-input") as HTMLInputElement).value || "0"),
    generic_id: addGeneric ? (genericId ?? true) : undefined,
  });
  await openSession(summary.id);
}

async function guardedCall(fn: () => Promise<unknown>) {
  try {
    await fn();
  } catch (err) {
    if (err instanceof ApiError) {
      const msg = $("guard-message");
      msg.textContent = `server: ${err.message}`;
      msg.className = "guard bad";
    } else {
      throw err;
    }
  }
}

function exportReport() {
  const blob = new Blob(
    [JSON.stringify({ session: model.sessionId, events }, null, 1)],
    { type: "application/json" },
  );
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = `sic-${model.sessionId}.json`;
  a.click();
}

export async function boot() {
  catalogItems = await api.catalog();
  const pick = $("catalog-pick") as HTMLSelectElement;
  pick.innerHTML =
    `<option value="">— choose representative —</option>` +
    catalogItems
      .map((c) => `<option value="${c.id}">${c.id} (${c.class_name})</option>`)
      .join("");

  $("create-session").onclick = () => void createSession();
  $("step-btn").onclick = () => void guardedCall(() => api.step(model.sessionId!));
  $("auto-btn").onclick = () => void guardedCall(() => api.auto(model.sessionId!));
  $("consider-btn").onclick = () => {
    if (confirm("Assert the pending vertex as found? This is recorded in the audit trail.")) {
      void guardedCall(() => api.considerFound(model.sessionId!));
    }
  };
  $("submit-ineq").onclick = () => {
    const { coeffs, offset } = editorValues();
    void guardedCall(() => api.submitInequality(model.sessionId!, coeffs, offset));
  };
  $("export-btn").onclick = exportReport;
  ($("triple-input") as HTMLInputElement).oninput = renderProjection;
  render();
}

if (typeof document !== "undefined" && document.getElementById("session-list")) {
  void boot();
}
