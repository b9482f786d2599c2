import { describe, expect, it } from "vitest";

import { checkInequality, prettyInequality } from "../src/guards.js";

const wContext = {
  pendingVertex: ["1/2", "1/2", "1/2"],
  foundVertices: [
    ["1", "1", "1"],
    ["1/2", "1/2", "1"],
  ],
  closestPoint: [0.666667, 0.666667, 0.666667],
};

describe("inequality guards (client mirror)", () => {
  it("accepts the W-facet rounding", () => {
    const v = checkInequality({ coeffs: ["-1", "-1", "-1"], offset: "2", ...wContext });
    expect(v.ok).toBe(true);
  });

  it("rejects an inequality that keeps the target", () => {
    const v = checkInequality({ coeffs: ["-1", "-1", "-1"], offset: "1", ...wContext });
    expect(v.ok).toBe(false);
    expect(v.error).toBe("DoesNotCutTarget");
  });

  it("rejects an inequality cutting a found vertex", () => {
    // x1+x2+x3 <= 7/5 cuts both the pending origin (so the target guard
    // passes) and the found corner (1,1,1)
    const v = checkInequality({ coeffs: ["1", "1", "1"], offset: "-7/5", ...wContext });
    expect(v.ok).toBe(false);
    expect(v.error).toBe("CutsFoundVertex");
  });

  it("rejects an inequality violated by the closest point", () => {
    // cuts the target, keeps the single found vertex, but excludes
    // the flow's closest point (2/3,2/3,2/3)
    const v = checkInequality({
      coeffs: ["-1", "-1", "-1"],
      offset: "2.2",
      pendingVertex: wContext.pendingVertex,
      foundVertices: [["1", "1", "1"]],
      closestPoint: wContext.closestPoint,
    });
    expect(v.ok).toBe(false);
    expect(v.error).toBe("NotCompatibleWithClosestPoint");
  });

  it("rejects malformed input", () => {
    expect(checkInequality({ coeffs: ["a"], offset: "1", pendingVertex: null, foundVertices: [], closestPoint: null }).error).toBe("Malformed");
    expect(checkInequality({ coeffs: ["0", "0"], offset: "1", pendingVertex: null, foundVertices: [], closestPoint: null }).error).toBe("Malformed");
  });

  it("recorded corpus: client verdicts match the server's recorded ones", () => {
    // (submission, server verdict) pairs recorded from live W sessions with
    // found = {(1,1,1)}; guards fire in server order: target, found
    // vertices, closest point.  The client must never accept anything the
    // server rejected.
    const ctx = {
      pendingVertex: ["1/2", "1/2", "1/2"],
      foundVertices: [["1", "1", "1"]],
      closestPoint: [0.666667, 0.666667, 0.666667],
    };
    const corpus: { coeffs: string[]; offset: string; server: string }[] = [
      { coeffs: ["-1", "-1", "-1"], offset: "2", server: "accepted" },
      { coeffs: ["-1", "-1", "-1"], offset: "1", server: "DoesNotCutTarget" },
      { coeffs: ["-1", "-1", "-1"], offset: "3/2", server: "DoesNotCutTarget" },
      { coeffs: ["-2", "-2", "-2"], offset: "4", server: "accepted" },
      { coeffs: ["1", "1", "1"], offset: "-7/5", server: "CutsFoundVertex" },
      { coeffs: ["-1", "0", "0"], offset: "2/5", server: "DoesNotCutTarget" },
      { coeffs: ["-1", "0", "0"], offset: "3/4", server: "NotCompatibleWithClosestPoint" },
      { coeffs: ["-1", "-1", "-1"], offset: "2.2", server: "NotCompatibleWithClosestPoint" },
    ];
    for (const { coeffs, offset, server } of corpus) {
      const v = checkInequality({ coeffs, offset, ...ctx });
      if (server === "accepted") expect(v.ok, `${coeffs}+${offset}`).toBe(true);
      else expect(v.error, `${coeffs}+${offset}`).toBe(server);
    }
  });
});

describe("pretty rendering", () => {
  it("renders the >= form with names", () => {
    expect(prettyInequality(["-1", "-1", "-1"], "2", ["x1,1", "x2,1", "x3,1"])).toBe(
      "x1,1 + x2,1 + x3,1 >= 2",
    );
    expect(prettyInequality(["-1", "-2", "0", "-2", "-1"], "3")).toBe(
      "x1 + 2 x2 + 2 x4 + x5 >= 3",
    );
  });
});
