import { describe, expect, it } from "vitest";

import { add, cmp, evaluate, format, mul, parseRational, rat, toNumber, ZERO } from "../src/rational.js";

describe("rational", () => {
  it("parses integers, fractions, and decimals", () => {
    expect(parseRational("2")).toEqual({ num: 2n, den: 1n });
    expect(parseRational("-1")).toEqual({ num: -1n, den: 1n });
    expect(parseRational("1/3")).toEqual({ num: 1n, den: 3n });
    expect(parseRational("-2/4")).toEqual({ num: -1n, den: 2n });
    expect(parseRational("0.5")).toEqual({ num: 1n, den: 2n });
    expect(parseRational("-0.25")).toEqual({ num: -1n, den: 4n });
  });

  it("normalizes signs and gcd", () => {
    expect(rat(2n, -4n)).toEqual({ num: -1n, den: 2n });
  });

  it("does exact arithmetic", () => {
    const third = parseRational("1/3");
    const sixth = parseRational("1/6");
    expect(add(third, sixth)).toEqual({ num: 1n, den: 2n });
    expect(mul(third, rat(3n))).toEqual({ num: 1n, den: 1n });
    expect(cmp(third, sixth)).toBe(1);
    expect(cmp(third, parseRational("2/6"))).toBe(0);
  });

  it("evaluates inequalities exactly at vertices", () => {
    // -x1 - x2 - x3 + 2 at (1/2,1/2,1/2) = 1/2 (the W-facet violation)
    const coeffs = ["-1", "-1", "-1"].map(parseRational);
    const x = ["1/2", "1/2", "1/2"].map(parseRational);
    const v = evaluate(coeffs, parseRational("2"), x);
    expect(format(v)).toBe("1/2");
    expect(cmp(v, ZERO)).toBe(1);
    // and exactly zero at a tight vertex
    const tight = evaluate(coeffs, parseRational("2"), ["1", "1/2", "1/2"].map(parseRational));
    expect(cmp(tight, ZERO)).toBe(0);
  });

  it("round-trips numbers", () => {
    expect(toNumber(parseRational("3/4"))).toBeCloseTo(0.75, 12);
  });
});
