"""Exact rational convex geometry: vertex and facet enumeration.

Inequalities follow the qhull convention: (coeffs, offset) means
coeffs . x + offset <= 0 on the feasible side.  All computations run in
exact integer/Fraction arithmetic, so the rational vertices of moment
polytopes come out exactly, with no rounding step.

Vertex enumeration uses the double description method on the homogenized
cone {(x0, x) : x0 >= 0, A x <= b x0}; facet enumeration of a point set
dualizes to the same machinery.  Sized for D <= ~9 and a few dozen
inequalities, which covers every system in the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimsMismatch, Empty, Unbounded, UnsupportedDim
from .ratlinalg import frac_matrix, invert, nullspace, rank, rref, scale_to_coprime_ints


@dataclass(frozen=True)
class RationalInequality:
    """A halfspace coeffs . x + offset <= 0 with coprime integer data."""

    coeffs: tuple[int, ...]
    offset: int

    def __init__(self, coeffs: Sequence, offset):
        scaled = scale_to_coprime_ints(list(coeffs) + [offset])
        if all(c == 0 for c in scaled[:-1]):
            raise ValueError("inequality must have a nonzero normal vector")
        object.__setattr__(self, "coeffs", tuple(scaled[:-1]))
        object.__setattr__(self, "offset", scaled[-1])

    def value(self, x: Sequence) -> Fraction:
        """coeffs . x + offset; <= 0 means satisfied."""
        return sum(Fraction(c) * Fraction(v) for c, v in zip(self.coeffs, x)) + self.offset

    def satisfied(self, x: Sequence, slack=0) -> bool:
        return self.value(x) <= slack

    @classmethod
    def geq(cls, coeffs: Sequence, rhs) -> "RationalInequality":
        """Build from the human-readable form coeffs . x >= rhs."""
        return cls([-Fraction(c) for c in coeffs], Fraction(rhs))

    def pretty(self, names: Sequence[str] | None = None) -> str:
        """Render as 'sum of terms >= rhs'."""
        terms = []
        for idx, c in enumerate(self.coeffs):
            if c == 0:
                continue
            name = names[idx] if names else f"x{idx + 1}"
            mag = -c
            if mag == 1:
                terms.append(f"+ {name}")
            elif mag == -1:
                terms.append(f"- {name}")
            elif mag > 0:
                terms.append(f"+ {mag} {name}")
            else:
                terms.append(f"- {-mag} {name}")
        lhs = " ".join(terms).lstrip("+ ") or "0"
        return f"{lhs} >= {self.offset}"


@dataclass(frozen=True)
class HPolytope:
    """Halfspace representation: a finite list of rational inequalities."""

    ineqs: tuple[RationalInequality, ...]
    dims: tuple[int, ...] | None = None

    def __init__(self, ineqs: Iterable[RationalInequality], dims=None):
        ineqs = tuple(ineqs)
        if not ineqs:
            raise ValueError("an HPolytope needs at least one inequality")
        width = len(ineqs[0].coeffs)
        if any(len(q.coeffs) != width for q in ineqs):
            raise DimsMismatch("all inequalities must share the ambient dimension")
        object.__setattr__(self, "ineqs", ineqs)
        object.__setattr__(self, "dims", tuple(dims) if dims is not None else None)

    @property
    def ambient_dim(self) -> int:
        return len(self.ineqs[0].coeffs)

    def with_extra(self, extra: Iterable[RationalInequality]) -> "HPolytope":
        merged = dedupe_inequalities(list(self.ineqs) + list(extra))
        return HPolytope(merged, dims=self.dims)


@dataclass(frozen=True)
class VPolytope:
    """Vertex representation: exact rational extreme points."""

    verts: tuple[tuple[Fraction, ...], ...]
    dims: tuple[int, ...] | None = None

    def __init__(self, verts, dims=None):
        vv = tuple(sorted({tuple(Fraction(x) for x in v) for v in verts}))
        object.__setattr__(self, "verts", vv)
        object.__setattr__(self, "dims", tuple(dims) if dims is not None else None)

    @property
    def ambient_dim(self) -> int:
        return len(self.verts[0]) if self.verts else 0


def dedupe_inequalities(ineqs: Iterable[RationalInequality]) -> list[RationalInequality]:
    seen, out = set(), []
    for q in ineqs:
        key = (q.coeffs, q.offset)
        if key not in seen:
            seen.add(key)
            out.append(q)
    return out


# -- double description core ------------------------------------------------

def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(vec)
    return tuple(x // g for x in vec)


def _dd_extreme_rays(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {y : row . y >= 0 for all rows}.

    Standard double description with incremental insertion; rays are kept
    as primitive integer vectors and zero sets as bitmasks over the rows
    processed so far.
    """
    d = len(rows[0])
    if rank(rows) < d:
        raise Unbounded("halfspace system admits a recession direction or line")

    # Seed with d linearly independent rows; their simplicial cone has the
    # columns of the inverse as extreme rays.
    basis_idx: list[int] = []
    for i, row in enumerate(rows):
        if rank([rows[j] for j in basis_idx] + [row]) > len(basis_idx):
            basis_idx.append(i)
        if len(basis_idx) == d:
            break
    basis = [rows[i] for i in basis_idx]
    inv = invert(basis)
    assert inv is not None
    rays = [_primitive(scale_to_coprime_ints([inv[r][c] for r in range(d)])) for c in range(d)]

    processed = list(basis_idx)
    masks = []
    for ray in rays:
        m = 0
        for pos, ri in enumerate(processed):
            if _idot(rows[ri], ray) == 0:
                m |= 1 << pos
        masks.append(m)

    remaining = sorted((i for i in range(len(rows)) if i not in basis_idx), key=lambda i: rows[i])
    for ri in remaining:
        row = rows[ri]
        vals = [_idot(row, ray) for ray in rays]
        if all(v >= 0 for v in vals):
            pos = len(processed)
            processed.append(ri)
            masks = [m | (1 << pos) if v == 0 else m for m, v in zip(masks, vals)]
            continue
        keep_idx = [i for i, v in enumerate(vals) if v >= 0]
        plus = [i for i, v in enumerate(vals) if v > 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        new_rays: list[tuple[int, ...]] = []
        for ip in plus:
            for im in minus:
                if not _adjacent(masks, ip, im, d):
                    continue
                w = _primitive(
                    tuple(vals[ip] * rays[im][k] - vals[im] * rays[ip][k] for k in range(d))
                )
                new_rays.append(w)
        pos = len(processed)
        processed.append(ri)
        kept_rays = [rays[i] for i in keep_idx]
        kept_masks = [
            masks[i] | (1 << pos) if vals[i] == 0 else masks[i] for i in keep_idx
        ]
        for w in new_rays:
            m = 0
            for p, rj in enumerate(processed):
                if _idot(rows[rj], w) == 0:
                    m |= 1 << p
            kept_rays.append(w)
            kept_masks.append(m)
        rays, masks = _dedupe_rays(kept_rays, kept_masks)
    return rays


def _idot(row: Sequence[int], ray: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(row, ray))


def _adjacent(masks: list[int], i: int, j: int, d: int) -> bool:
    """Combinatorial adjacency: no third ray's active set contains the pair's."""
    m = masks[i] & masks[j]
    if bin(m).count("1") < d - 2:
        return False
    for k, mk in enumerate(masks):
        if k != i and k != j and (m & mk) == m:
            return False
    return True


def _adjacent_rank(rows, processed, masks, i, j, d) -> bool:
    """Algebraic-rank adjacency test; used as a cross-check in tests."""
    m = masks[i] & masks[j]
    active = [rows[processed[p]] for p in range(len(processed)) if (m >> p) & 1]
    return rank(active) == d - 2


def _dedupe_rays(rays, masks):
    seen = {}
    for ray, m in zip(rays, masks):
        if ray not in seen:
            seen[ray] = m
    return list(seen.keys()), list(seen.values())


def _homogenized_rows(p: HPolytope) -> list[tuple[int, ...]]:
    rows = [tuple([1] + [0] * p.ambient_dim)]  # x0 >= 0
    for q in dedupe_inequalities(p.ineqs):
        rows.append(tuple([-q.offset] + [-c for c in q.coeffs]))
    return rows


def enumerate_vertices(p: HPolytope) -> VPolytope:
    """Exact vertex list of a bounded halfspace intersection.

    Raises Unbounded when a recession direction exists and Empty when the
    system is infeasible.
    """
    rays = _dd_extreme_rays(_homogenized_rows(p))
    verts = []
    for ray in rays:
        if ray[0] > 0:
            y0 = Fraction(ray[0])
            verts.append(tuple(Fraction(c) / y0 for c in ray[1:]))
        elif any(ray[1:]):
            raise Unbounded(f"recession direction {ray[1:]}")
    if not verts:
        raise Empty("the inequality system is infeasible")
    return VPolytope(verts, dims=p.dims)


def facet_hull(v: VPolytope) -> HPolytope:
    """Irredundant facet description of conv(verts).

    Lower-dimensional hulls are described inside their affine hull: the
    result contains the facet inequalities plus an equation pair
    (<= and >=) for every affine-hull constraint.
    """
    if not v.verts:
        raise ValueError("need at least one point")
    pts = [list(p) for p in v.verts]
    n = len(pts[0])
    p0 = pts[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in pts[1:]]

    # Affine-hull basis (rows) and its orthogonal equations.
    red, pivots = rref(diffs) if diffs else ([], [])
    basis = [red[i] for i in range(len(pivots))]
    r = len(basis)
    eqs: list[RationalInequality] = []
    for normal in nullspace(basis) if r else [
        [Fraction(int(i == j)) for j in range(n)] for i in range(n)
    ]:
        rhs = sum(a * b for a, b in zip(normal, p0))
        eqs.append(RationalInequality(normal, -rhs))
        eqs.append(RationalInequality([-a for a in normal], rhs))

    if r == 0:
        return HPolytope(dedupe_inequalities(eqs), dims=v.dims)

    # Coordinates of each point inside the affine hull: y = D (x - p0)
    # where D is a left inverse of the basis written as columns.
    bt = [[basis[i][j] for i in range(r)] for j in range(n)]  # n x r, columns = basis
    gram = [[sum(bt[k][i] * bt[k][j] for k in range(n)) for j in range(r)] for i in range(r)]
    gram_inv = invert(gram)
    assert gram_inv is not None
    dmat = [
        [sum(gram_inv[i][k] * bt[j][k] for k in range(r)) for j in range(n)] for i in range(r)
    ]  # r x n
    ys = [[sum(dmat[i][j] * d[j] for j in range(n)) for i in range(r)] for d in [
        [x - y for x, y in zip(p, p0)] for p in pts
    ]]

    # Facets of conv(ys) = extreme rays of the dual cone {z : z.(1,y) >= 0}.
    rows = [tuple(scale_to_coprime_ints([Fraction(1)] + y)) for y in ys]
    rays = _dd_extreme_rays(rows)

    out = list(eqs)
    for ray in rays:
        z0, z = ray[0], ray[1:]
        # z . y + z0 >= 0 on the hull; map back via y = D(x - p0).
        coeffs = [-sum(Fraction(z[i]) * dmat[i][j] for i in range(r)) for j in range(n)]
        offset = -Fraction(z0) + sum(
            Fraction(z[i]) * sum(dmat[i][j] * p0[j] for j in range(n)) for i in range(r)
        )
        out.append(RationalInequality(coeffs, offset))
    return HPolytope(dedupe_inequalities(out), dims=v.dims)


def remove_redundant(p: HPolytope) -> HPolytope:
    """Minimal sub-list of inequalities describing the same feasible set.

    An inequality is dropped when every vertex of the remaining system
    still satisfies it (exact check); the polytope must be bounded and
    feasible.
    """
    ineqs = dedupe_inequalities(p.ineqs)
    enumerate_vertices(HPolytope(ineqs, dims=p.dims))  # raises Empty/Unbounded up front
    keep = list(ineqs)
    i = 0
    while i < len(keep):
        cand = keep[:i] + keep[i + 1 :]
        if not cand:
            break
        try:
            verts = enumerate_vertices(HPolytope(cand, dims=p.dims)).verts
        except Unbounded:
            i += 1
            continue
        if all(keep[i].satisfied(v) for v in verts):
            keep = cand
        else:
            i += 1
    return HPolytope(keep, dims=p.dims)


def contains(p: HPolytope, x: Sequence, slack=0) -> tuple[bool, list[RationalInequality]]:
    """Exact membership test; returns (inside, violated inequalities)."""
    x = list(x)
    if len(x) != p.ambient_dim:
        raise DimsMismatch(
            f"point of length {len(x)} vs ambient dimension {p.ambient_dim}"
        )
    slack = Fraction(slack) if not isinstance(slack, float) else slack
    violated = [q for q in p.ineqs if not q.satisfied(x, slack)]
    return (not violated, violated)


def vertex_sets_equal(a: HPolytope, b: HPolytope) -> bool:
    return enumerate_vertices(a).verts == enumerate_vertices(b).verts


# -- spectrum-polytope constraint builders ----------------------------------

def local_constraints(dims: Sequence[int]) -> list[RationalInequality]:
    """Weyl-chamber and density-operator constraints in most-local coordinates.

    Per system with local dimension d: the kept eigenvalues are weakly
    decreasing, the reconstructed smallest one is nonnegative and below
    the kept ones, and the largest is between 1/d and 1.
    """
    dims = tuple(int(d) for d in dims)
    total = sum(d - 1 for d in dims)
    out: list[RationalInequality] = []
    pos = 0
    for d in dims:
        k = d - 1
        if k == 0:
            continue
        def unit(j, val=1):
            v = [0] * total
            v[pos + j] = val
            return v
        out.append(RationalInequality(unit(0), -1))              # x_{i,1} <= 1
        out.append(RationalInequality(unit(0, -d), 1))           # d x_{i,1} >= 1
        for j in range(k - 1):                                    # chain
            v = [0] * total
            v[pos + j] = -1
            v[pos + j + 1] = 1
            out.append(RationalInequality(v, 0))
        v = [0] * total                                           # last >= reconstructed
        for j in range(k):
            v[pos + j] = -1
        v[pos + k - 1] = -2
        out.append(RationalInequality(v, 1))
        v = [0] * total                                           # reconstructed >= 0
        for j in range(k):
            v[pos + j] = 1
        out.append(RationalInequality(v, -1))
        pos += k
    return dedupe_inequalities(out)


def _var_index(dims: Sequence[int], system: int, j: int) -> int:
    """Flat index of x_{system,j} (both 1-based) in most-local coordinates."""
    return sum(d - 1 for d in dims[: system - 1]) + (j - 1)


def ineq_geq(dims: Sequence[int], terms: dict[tuple[int, int], int], rhs) -> RationalInequality:
    """Shorthand: sum of c * x_{i,j} >= rhs in most-local coordinates."""
    total = sum(d - 1 for d in dims)
    v = [Fraction(0)] * total
    for (i, j), c in terms.items():
        v[_var_index(dims, i, j)] += Fraction(c)
    return RationalInequality([-x for x in v], Fraction(rhs))


def bravyi_inequalities(n: int) -> HPolytope:
    """Generic-polytope system for 2 x 2 x n from the two-qubit marginal
    inequalities, absolute values and minima expanded to linear form,
    plus the local Weyl-chamber and density constraints."""
    if n not in (3, 4):
        raise UnsupportedDim("Bravyi systems are available for 2x2x3 and 2x2x4 only")
    dims = (2, 2, n)
    out = list(local_constraints(dims))
    A, B = (1, 1), (2, 1)
    if n == 4:
        l1, l2, l3 = (3, 1), (3, 2), (3, 3)
        out.append(ineq_geq(dims, {l1: 1, l2: 1, A: -1}, 0))
        out.append(ineq_geq(dims, {l1: 1, l2: 1, B: -1}, 0))
        out.append(ineq_geq(dims, {l1: 2, l2: 1, l3: 1, A: -1, B: -1}, 0))
        for s in (1, -1):
            out.append(ineq_geq(dims, {l1: 1, l3: -1, A: -s, B: s}, 0))
            out.append(ineq_geq(dims, {l1: 1, l2: 2, l3: 1, A: -s, B: s}, 1))
    else:
        l1, l2 = (3, 1), (3, 2)
        out.append(ineq_geq(dims, {l1: 1, l2: 1, A: -1}, 0))
        out.append(ineq_geq(dims, {l1: 1, l2: 1, B: -1}, 0))
        out.append(ineq_geq(dims, {l1: 1, A: -1, B: -1}, -1))
        for s in (1, -1):
            out.append(ineq_geq(dims, {l2: 1, A: -s, B: s}, 0))
            out.append(ineq_geq(dims, {l1: 2, l2: 1, A: -s, B: s}, 1))
    return HPolytope(dedupe_inequalities(out), dims=dims)
