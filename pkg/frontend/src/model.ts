/**
 * Console view-model, rebuilt purely from the session event log.
 *
 * The server is the single source of truth; the model folds its ordered
 * events into exactly the state the views render (vertex sets, inequality
 * table with provenance, flow telemetry, pending editor context), so a
 * reload that replays the same events reproduces the same view.
 */

import { FlowOutcomeJson, InequalityJson, SicEventJson } from "./api.js";

export interface TelemetryPoint {
  flowIndex: number;
  vertex: string[];
  reached: boolean;
  distance: number | null;
  steps: number | null;
}

export interface ConsoleModel {
  sessionId: string | null;
  dims: number[];
  status: "Flowing" | "AwaitingInequality" | "Done" | "Failed" | "Unknown";
  expected: string[][];
  found: { vertex: string[]; operatorAsserted: boolean }[];
  inequalities: InequalityJson[];
  pendingVertex: string[] | null;
  lastOutcome: FlowOutcomeJson | null;
  telemetry: TelemetryPoint[];
  failReason: string | null;
  lastSeq: number;
}

export function emptyModel(): ConsoleModel {
  return {
    sessionId: null,
    dims: [],
    status: "Unknown",
    expected: [],
    found: [],
    inequalities: [],
    pendingVertex: null,
    lastOutcome: null,
    telemetry: [],
    failReason: null,
    lastSeq: -1,
  };
}

const sameVertex = (a: string[], b: string[]) =>
  a.length === b.length && a.every((x, i) => x === b[i]);

export function applyEvent(m: ConsoleModel, ev: SicEventJson): ConsoleModel {
  const out: ConsoleModel = {
    ...m,
    expected: m.expected.slice(),
    found: m.found.slice(),
    inequalities: m.inequalities.slice(),
    telemetry: m.telemetry.slice(),
    lastSeq: ev.seq,
  };
  const p = ev.payload as any;
  switch (ev.kind) {
    case "Started":
      out.dims = p.dims as number[];
      out.status = "Flowing";
      for (const q of (p.initial_inequalities ?? []) as InequalityJson[]) {
        out.inequalities.push({ ...q, provenance: "initial" });
      }
      out.expected = ((p.expected ?? []) as string[][]).slice();
      break;
    case "GenericAdded":
      for (const q of p.added as InequalityJson[]) {
        out.inequalities.push({ ...q, provenance: p.source ?? "generic" });
      }
      out.expected = (p.expected as string[][]).slice();
      break;
    case "VertexFound":
      out.expected = out.expected.filter((v) => !sameVertex(v, p.vertex));
      out.found.push({ vertex: p.vertex, operatorAsserted: false });
      out.telemetry.push({
        flowIndex: out.telemetry.length,
        vertex: p.vertex,
        reached: true,
        distance: p.distance ?? null,
        steps: p.steps ?? null,
      });
      out.status = "Flowing";
      break;
    case "VertexNotFound":
      out.expected = out.expected.filter((v) => !sameVertex(v, p.vertex));
      out.pendingVertex = p.vertex;
      out.status = "AwaitingInequality";
      out.lastOutcome = {
        reached: false,
        final_distance: p.final_distance,
        closest_point: p.closest_point,
        raw_inequality: p.raw_inequality,
        pretty_inequality: p.pretty_inequality,
        suggested_inequality: p.suggested_inequality,
        exit_reason: p.exit_reason,
      };
      out.telemetry.push({
        flowIndex: out.telemetry.length,
        vertex: p.vertex,
        reached: false,
        distance: p.final_distance ?? null,
        steps: null,
      });
      break;
    case "InequalityAdded":
      out.inequalities.push({ ...(p.inequality as InequalityJson), provenance: p.provenance });
      out.expected = (p.expected as string[][]).slice();
      out.pendingVertex = null;
      out.status = "Flowing";
      break;
    case "ConsideredFound":
      out.found.push({ vertex: p.vertex, operatorAsserted: true });
      out.pendingVertex = null;
      out.status = "Flowing";
      break;
    case "Finished":
      out.status = "Done";
      break;
    case "Failed":
      out.status = "Failed";
      out.failReason = p.reason ?? null;
      break;
  }
  return out;
}

export function replay(events: SicEventJson[], sessionId: string | null = null): ConsoleModel {
  let m = emptyModel();
  m = { ...m, sessionId };
  for (const ev of events) m = applyEvent(m, ev);
  return m;
}

/** Editor prefill: the flow's suggested integers, or empty strings. */
export function suggestedCoefficients(m: ConsoleModel): { coeffs: string[]; offset: string } {
  const width = m.dims.reduce((acc, d) => acc + d - 1, 0);
  const sug = m.lastOutcome?.suggested_inequality;
  if (sug && sug.length === width + 1) {
    return { coeffs: sug.slice(0, width).map(String), offset: String(sug[sug.length - 1]) };
  }
  return { coeffs: Array(width).fill(""), offset: "" };
}

export function coordinateNames(dims: number[]): string[] {
  const names: string[] = [];
  dims.forEach((d, i) => {
    for (let j = 1; j < d; j++) names.push(`x${i + 1},${j}`);
  });
  return names;
}
