/**
 * Client-side mirror of the server's inequality guards, evaluated in exact
 * rational arithmetic so the editor can flag a bad rounding before it is
 * submitted.  The server remains authoritative; these must never accept
 * something the server would reject.
 */

import { Rational, ZERO, cmp, evaluate, parseRational, rat } from "./rational.js";

export interface GuardInput {
  coeffs: string[];
  offset: string;
  pendingVertex: string[] | null;
  foundVertices: string[][];
  closestPoint: number[] | null;
}

export interface GuardVerdict {
  ok: boolean;
  error?: "DoesNotCutTarget" | "CutsFoundVertex" | "NotCompatibleWithClosestPoint" | "Malformed";
  detail?: string;
}

const CLOSEST_POINT_SLACK = 1e-6;

export function checkInequality(input: GuardInput): GuardVerdict {
  let coeffs: Rational[];
  let offset: Rational;
  try {
    coeffs = input.coeffs.map(parseRational);
    offset = parseRational(input.offset);
  } catch (err) {
    return { ok: false, error: "Malformed", detail: String(err) };
  }
  if (coeffs.every((c) => c.num === 0n)) {
    return { ok: false, error: "Malformed", detail: "all coefficients are zero" };
  }

  if (input.pendingVertex) {
    const v = input.pendingVertex.map(parseRational);
    if (cmp(evaluate(coeffs, offset, v), ZERO) <= 0) {
      return {
        ok: false,
        error: "DoesNotCutTarget",
        detail: `keeps the unfound vertex (${input.pendingVertex.join(", ")})`,
      };
    }
  }
  for (const vert of input.foundVertices) {
    const v = vert.map(parseRational);
    if (cmp(evaluate(coeffs, offset, v), ZERO) > 0) {
      return {
        ok: false,
        error: "CutsFoundVertex",
        detail: `cuts the found vertex (${vert.join(", ")})`,
      };
    }
  }
  if (input.closestPoint) {
    let value = 0;
    for (let i = 0; i < coeffs.length; i++) {
      value += (Number(coeffs[i]!.num) / Number(coeffs[i]!.den)) * (input.closestPoint[i] ?? 0);
    }
    value += Number(offset.num) / Number(offset.den);
    if (value > CLOSEST_POINT_SLACK) {
      return {
        ok: false,
        error: "NotCompatibleWithClosestPoint",
        detail: `violated by the flow's closest point by ${value.toExponential(2)}`,
      };
    }
  }
  return { ok: true };
}

/** Render an inequality in the human >= form used throughout the console. */
export function prettyInequality(coeffs: string[], offset: string, names?: string[]): string {
  const terms: string[] = [];
  coeffs.forEach((c, i) => {
    const r = parseRational(c);
    if (r.num === 0n) return;
    const mag = rat(-r.num, r.den);
    const name = names?.[i] ?? `x${i + 1}`;
    const magStr =
      mag.num === 1n && mag.den === 1n
        ? ""
        : mag.num === -1n && mag.den === 1n
          ? "-"
          : `${mag.num < 0n ? "-" : ""}${(mag.num < 0n ? -mag.num : mag.num).toString()}${mag.den === 1n ? "" : "/" + mag.den} `;
    terms.push(`${terms.length && !magStr.startsWith("-") ? "+ " : ""}${magStr}${name}`);
  });
  return `${terms.join(" ")} >= ${offset}`;
}
