import { describe, expect, it } from "vitest";

import { SicEventJson } from "../src/api.js";
import { applyEvent, coordinateNames, emptyModel, replay, suggestedCoefficients } from "../src/model.js";

function ev(seq: number, kind: string, payload: Record<string, unknown>): SicEventJson {
  return { seq, kind, payload, ts: seq };
}

const wEvents: SicEventJson[] = [
  ev(0, "Started", { dims: [2, 2, 2], seed: 7 }),
  ev(1, "GenericAdded", {
    source: "generic:222-generic",
    added: [{ coeffs: ["-1", "-1", "1"], offset: "-1" }],
    expected: [
      ["1/2", "1/2", "1/2"], ["1/2", "1/2", "1"], ["1/2", "1", "1/2"],
      ["1", "1/2", "1/2"], ["1", "1", "1"],
    ],
  }),
  ev(2, "VertexNotFound", {
    vertex: ["1/2", "1/2", "1/2"],
    closest_point: [0.666667, 0.666667, 0.666667],
    final_distance: 0.408248,
    raw_inequality: [-0.816497, -0.816497, -0.816497, 1.632993],
    pretty_inequality: "1 x1,1 +1 x2,1 +1 x3,1 >= 2",
    suggested_inequality: [-1, -1, -1, 2],
  }),
  ev(3, "InequalityAdded", {
    inequality: { coeffs: ["-1", "-1", "-1"], offset: "2" },
    provenance: "operator",
    expected: [["1/2", "1/2", "1"], ["1/2", "1", "1/2"], ["1", "1/2", "1/2"], ["1", "1", "1"]],
  }),
  ev(4, "VertexFound", { vertex: ["1/2", "1/2", "1"], distance: 0.004, steps: 31 }),
  ev(5, "VertexFound", { vertex: ["1/2", "1", "1/2"], distance: 0.006, steps: 28 }),
  ev(6, "VertexFound", { vertex: ["1", "1/2", "1/2"], distance: 0.005, steps: 30 }),
  ev(7, "VertexFound", { vertex: ["1", "1", "1"], distance: 0.002, steps: 25 }),
  ev(8, "Finished", { found: [] }),
];

describe("console model", () => {
  it("replays the W walkthrough to Done with 4 vertices", () => {
    const m = replay(wEvents, "abc");
    expect(m.status).toBe("Done");
    expect(m.found.map((f) => f.vertex)).toEqual([
      ["1/2", "1/2", "1"], ["1/2", "1", "1/2"], ["1", "1/2", "1/2"], ["1", "1", "1"],
    ]);
    expect(m.expected).toEqual([]);
    expect(m.inequalities).toHaveLength(2);
    expect(m.inequalities[1]?.provenance).toBe("operator");
    expect(m.lastSeq).toBe(8);
  });

  it("pauses with editor context on VertexNotFound", () => {
    const m = replay(wEvents.slice(0, 3));
    expect(m.status).toBe("AwaitingInequality");
    expect(m.pendingVertex).toEqual(["1/2", "1/2", "1/2"]);
    expect(m.lastOutcome?.suggested_inequality).toEqual([-1, -1, -1, 2]);
    const prefill = suggestedCoefficients(m);
    expect(prefill).toEqual({ coeffs: ["-1", "-1", "-1"], offset: "2" });
  });

  it("is insensitive to replay granularity (incremental == batch)", () => {
    let inc = emptyModel();
    for (const e of wEvents) inc = applyEvent(inc, e);
    const batch = replay(wEvents);
    expect(inc).toEqual({ ...batch, sessionId: inc.sessionId });
  });

  it("tracks operator-asserted vertices distinctly", () => {
    const m = replay([
      wEvents[0]!, wEvents[1]!, wEvents[2]!,
      ev(3, "ConsideredFound", { vertex: ["1/2", "1/2", "1/2"] }),
    ]);
    expect(m.found[0]).toEqual({ vertex: ["1/2", "1/2", "1/2"], operatorAsserted: true });
    expect(m.status).toBe("Flowing");
  });

  it("records telemetry rows per flow", () => {
    const m = replay(wEvents);
    expect(m.telemetry).toHaveLength(5);
    expect(m.telemetry[0]?.reached).toBe(false);
    expect(m.telemetry.filter((t) => t.reached)).toHaveLength(4);
  });

  it("names most-local coordinates per system", () => {
    expect(coordinateNames([2, 2, 3])).toEqual(["x1,1", "x2,1", "x3,1", "x3,2"]);
  });
});
