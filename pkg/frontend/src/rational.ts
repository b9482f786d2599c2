/**
 * Exact rational arithmetic on bigints, enough to evaluate polytope
 * inequalities at exact vertices the way the server does.  Values arrive
 * from the API as strings like "2", "-1", or "1/3".
 */

export interface Rational {
  readonly num: bigint;
  readonly den: bigint; // always > 0
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rat(num: bigint | number | string, den: bigint = 1n): Rational {
  if (typeof num === "string") return parseRational(num);
  let n = BigInt(num);
  let d = den;
  if (d === 0n) throw new Error("zero denominator");
  if (d < 0n) {
    n = -n;
    d = -d;
  }
  const g = gcd(n, d) || 1n;
  return { num: n / g, den: d / g };
}

export function parseRational(text: string): Rational {
  const s = text.trim();
  const slash = s.indexOf("/");
  if (slash >= 0) {
    return rat(BigInt(s.slice(0, slash)), BigInt(s.slice(slash + 1)));
  }
  const dot = s.indexOf(".");
  if (dot >= 0) {
    const frac = s.slice(dot + 1);
    const scale = 10n ** BigInt(frac.length);
    const whole = BigInt(s.slice(0, dot) || "0");
    const sign = s.startsWith("-") ? -1n : 1n;
    return rat(whole * scale + sign * BigInt(frac), scale);
  }
  return rat(BigInt(s));
}

export function add(a: Rational, b: Rational): Rational {
  return rat(a.num * b.den + b.num * a.den, a.den * b.den);
}

export function mul(a: Rational, b: Rational): Rational {
  return rat(a.num * b.num, a.den * b.den);
}

export function neg(a: Rational): Rational {
  return { num: -a.num, den: a.den };
}

export function cmp(a: Rational, b: Rational): number {
  const lhs = a.num * b.den;
  const rhs = b.num * a.den;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

export const ZERO: Rational = { num: 0n, den: 1n };

export function toNumber(a: Rational): number {
  return Number(a.num) / Number(a.den);
}

export function format(a: Rational): string {
  return a.den === 1n ? a.num.toString() : `${a.num}/${a.den}`;
}

/** coeffs . x + offset over exact rationals. */
export function evaluate(coeffs: Rational[], offset: Rational, x: Rational[]): Rational {
  let acc = offset;
  for (let i = 0; i < coeffs.length; i++) {
    acc = add(acc, mul(coeffs[i]!, x[i] ?? ZERO));
  }
  return acc;
}
