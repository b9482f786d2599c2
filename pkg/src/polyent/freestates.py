"""Free states and the exact closest-point machinery.

A state is free when every two support kets differ in at least two tensor
slots; its marginals are then diagonal in the computational basis, and the
point of its entanglement polytope closest to the origin is characterized
by an integer eigenvalue system A a = lambda 1 on the squared amplitudes.
Solving that system in exact rationals yields the closest point, the
witnessing state, and an integer separating inequality, with no numerics
involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import ratlinalg as rl
from .convex import HPolytope, RationalInequality, enumerate_vertices
from .errors import (
    Empty,
    NoNonnegativeSolution,
    NotFree,
    NotSubset,
    Unbounded,
    UnderdeterminedOrInconsistent,
)
from .states import (
    Dims,
    PureState,
    SloccOperator,
    marginals,
    normalize,
)

SUPPORT_TOL = 1e-9


def support(psi: PureState, tol: float = SUPPORT_TOL) -> tuple[tuple[int, ...], ...]:
    """Support kets (|amplitude| > tol), ordered lexicographically."""
    dims = psi.dims
    kets = [dims.ket_of(i) for i, a in enumerate(psi.amp) if abs(a) > tol]
    return tuple(sorted(kets))


def differing_slots(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def is_free(kets: Sequence[Sequence[int]]) -> bool:
    """True iff every pair of kets differs in at least two slots."""
    kets = list(kets)
    for i in range(len(kets)):
        for k in range(i + 1, len(kets)):
            if differing_slots(kets[i], kets[k]) < 2:
                return False
    return True


def closest_point_matrix(kets: Sequence[Sequence[int]], dims: Dims | Sequence[int]) -> list[list[int]]:
    """A(i,k) = number of slots in which support kets i and k coincide."""
    n = len(dims.d if isinstance(dims, Dims) else tuple(dims))
    m = len(kets)
    return [
        [n - differing_slots(kets[i], kets[k]) for k in range(m)] for i in range(m)
    ]


def free_marginal_diagonals(
    kets: Sequence[Sequence[int]], weights: Sequence[Fraction], dims: Dims | Sequence[int]
) -> list[list[Fraction]]:
    """Diagonal marginal entries of the free state with given |amp|^2 weights."""
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    out = []
    for i, d in enumerate(dims.d):
        diag = [Fraction(0)] * d
        for ket, w in zip(kets, weights):
            diag[ket[i]] += Fraction(w)
        out.append(diag)
    return out


def _sorted_spectrum(diags: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(sorted(diag, reverse=True)) for diag in diags)


def origin_point(dims: Dims | Sequence[int]) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    return tuple(tuple(Fraction(1, d) for _ in range(d)) for d in dims.d)


def separating_inequality(
    point: Sequence[Sequence[Fraction]], dims: Dims | Sequence[int]
) -> RationalInequality | None:
    """Halfspace <x - O, p - O> >= <p - O, p - O> in most-local coordinates.

    Returns None when p = O (the polytope contains the origin, so there is
    no separating hyperplane).  The result is scaled to coprime integers
    in the qhull convention coeffs . x + offset <= 0.
    """
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    origin = origin_point(dims)
    n = [
        [Fraction(x) - o for x, o in zip(part, opart)]
        for part, opart in zip(point, origin)
    ]
    if all(all(x == 0 for x in part) for part in n):
        return None
    norm_sq = sum(x * x for part in n for x in part)
    # <n, x> >= <n, p> in full coordinates; substitute the last entry of
    # each system to land in most-local coordinates.
    rhs = sum(
        nx * Fraction(px) for npart, ppart in zip(n, point) for nx, px in zip(npart, ppart)
    )
    coeffs: list[Fraction] = []
    for npart in n:
        last = npart[-1]
        coeffs.extend(x - last for x in npart[:-1])
        rhs -= last
    del norm_sq  # rhs = <n,p> is the tight form; kept name for clarity
    return RationalInequality([-c for c in coeffs], rhs)


@dataclass(frozen=True)
class ClosestPointSolution:
    """Exact output of the closest-point solve on a free support."""

    kets: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    lam: Fraction
    point: tuple[tuple[Fraction, ...], ...]
    inequality: RationalInequality | None
    state: PureState

    @property
    def contains_origin(self) -> bool:
        return self.inequality is None


def _nonneg_solution_on_slice(
    a_mat: list[list[Fraction]], x0: list[Fraction], basis: list[list[Fraction]]
) -> list[Fraction] | None:
    """A nonnegative point of {x0 + sum t_k basis_k : all coords >= 0}, or None."""
    if not basis:
        return x0 if all(x >= 0 for x in x0) else None
    m = len(x0)
    k = len(basis)
    ineqs = []
    for i in range(m):
        coeffs = [-basis[b][i] for b in range(k)]
        if all(c == 0 for c in coeffs):
            if x0[i] < 0:
                return None
            continue
        ineqs.append(RationalInequality(coeffs, -x0[i]))
    if not ineqs:
        return x0
    try:
        verts = enumerate_vertices(HPolytope(ineqs)).verts
    except (Empty, Unbounded):
        return None
    # Average of the vertices is a relative-interior feasible parameter.
    t = [sum(v[b] for v in verts) / len(verts) for b in range(k)]
    return [x0[i] + sum(t[b] * basis[b][i] for b in range(k)) for i in range(m)]


def solve_closest_point(psi: PureState, dims: Dims | Sequence[int] | None = None,
                        tol: float = SUPPORT_TOL) -> ClosestPointSolution:
    """Exact closest point to the origin for a state with a free support.

    Solves A a = lambda 1 over the rationals, normalized to sum(a) = 1
    with every weight nonnegative; builds the witness state with
    amplitudes sqrt(a_l), its exact sorted spectrum, and the separating
    inequality (or a contains-origin marker when the point is the origin).

    Raises NotFree when the support is not free and NoNonnegativeSolution
    when the eigenvalue system has no probability-vector solution.
    """
    if dims is None:
        dims = psi.dims
    elif not isinstance(dims, Dims):
        dims = Dims(dims)
    kets = support(psi, tol)
    if not is_free(kets):
        raise NotFree(f"support {kets} has two kets differing in fewer than two slots")
    m = len(kets)
    a_int = closest_point_matrix(kets, dims)
    a_mat = rl.frac_matrix(a_int)

    # Solve [A | -1] (a, lam)^T = 0 together with sum(a) = 1.
    rows = [list(row) + [Fraction(-1)] for row in a_mat]
    rows.append([Fraction(1)] * m + [Fraction(0)])
    rhs = [Fraction(0)] * m + [Fraction(1)]
    sol = rl.solve(rows, rhs)
    if sol is None:
        raise NoNonnegativeSolution("A a = lambda 1 admits no solution with sum(a) = 1")
    kernel = rl.nullspace(rows)

    weights = sol[:m]
    if kernel:
        cand = _nonneg_solution_on_slice(a_mat, weights, [v[:m] for v in kernel])
        if cand is None:
            raise NoNonnegativeSolution(
                "A a = lambda 1 has no probability-vector solution on this support"
            )
        weights = cand
    elif any(w < 0 for w in weights):
        raise NoNonnegativeSolution(
            "the unique solution of A a = lambda 1 has a negative weight"
        )
    lam = rl.dot(a_mat[0], weights) if m else Fraction(0)

    diags = free_marginal_diagonals(kets, weights, dims)
    point = _sorted_spectrum(diags)
    ineq = separating_inequality(point, dims)
    amp = np.zeros(dims.hilbert_dim, dtype=complex)
    for ket, w in zip(kets, weights):
        amp[dims.index_of(ket)] = math.sqrt(float(w))
    state = PureState(dims, amp)
    return ClosestPointSolution(
        kets=tuple(kets),
        weights=tuple(weights),
        lam=lam,
        point=point,
        inequality=ineq,
        state=state,
    )


def x_rho_apply(psi: PureState) -> np.ndarray:
    """Apply X_rho = sum_i (1 x ... x rho_i x ... x 1) to the normalized state."""
    psin = normalize(psi)
    dims = psin.dims
    total = np.zeros_like(psin.amp)
    for i, rho in enumerate(marginals(psin), start=1):
        before = math.prod(dims.d[: i - 1])
        after = math.prod(dims.d[i:])
        m = psin.amp.reshape(before, dims.d[i - 1], after)
        total += np.einsum("de,aeb->adb", rho, m).reshape(-1)
    return total


def eigenvector_defect(psi: PureState, dims=None) -> float:
    """|| X_rho psi - <psi|X_rho|psi> psi || for the normalized state.

    Zero exactly when psi is an eigenvector of X_rho, i.e. when its
    spectrum is the closest point to the origin of its own polytope.
    """
    psin = normalize(psi)
    img = x_rho_apply(psin)
    mean = np.vdot(psin.amp, img)
    return float(np.linalg.norm(img - mean * psin.amp))


def torus_match(source: PureState, target_coeffs: Sequence[float],
                tol: float = 1e-9) -> SloccOperator:
    """Diagonal positive tuple t with t . source proportional to the target.

    ``target_coeffs`` are amplitudes on the lexicographically ordered
    support of ``source``; both sides must be positive there.  Solves the
    log-linear system from the torus-transitivity theorem; raises
    UnderdeterminedOrInconsistent when the system has no solution.
    """
    dims = source.dims
    kets = support(source)
    if not is_free(kets):
        raise NotFree("torus matching requires a free support")
    target = [float(x) for x in target_coeffs]
    if len(target) != len(kets):
        raise UnderdeterminedOrInconsistent(
            f"expected {len(kets)} target coefficients, got {len(target)}"
        )
    src = [abs(source.amp[dims.index_of(k)]) for k in kets]
    if any(x <= 0 for x in src) or any(x <= 0 for x in target):
        raise UnderdeterminedOrInconsistent("coefficients must be positive on the support")

    # Unknowns: log t^{(i)}_l for every system level, plus log(lambda).
    offsets = [0]
    for d in dims.d:
        offsets.append(offsets[-1] + d)
    nvar = offsets[-1] + 1
    rows, rhs = [], []
    for ket, s, t in zip(kets, src, target):
        row = np.zeros(nvar)
        for i, l in enumerate(ket):
            row[offsets[i] + l] = 1.0
        row[-1] = -1.0
        rows.append(row)
        rhs.append(math.log(t / s))
    sol, residual, *_ = np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)
    if np.linalg.norm(np.array(rows) @ sol - np.array(rhs)) > 1e-9:
        raise UnderdeterminedOrInconsistent("log-linear system is inconsistent")
    factors = []
    for i, d in enumerate(dims.d):
        factors.append(np.diag(np.exp(sol[offsets[i] : offsets[i] + d])))
    return SloccOperator(tuple(factors))


def substate(psi: PureState, keep: Sequence[Sequence[int]],
             tol: float = SUPPORT_TOL) -> PureState:
    """Normalized restriction of a free state to a subset of its support.

    By torus transitivity, the result lies in the orbit closure of the
    input; it witnesses a degeneration between SLOCC classes.
    """
    dims = psi.dims
    sup = set(support(psi, tol))
    if not is_free(sorted(sup)):
        raise NotFree("substate degeneration requires a free support")
    keep_kets = [tuple(int(j) for j in ket) for ket in keep]
    if not set(keep_kets) <= sup:
        raise NotSubset(f"{set(keep_kets) - sup} not contained in the support")
    amp = np.zeros(dims.hilbert_dim, dtype=complex)
    for ket in keep_kets:
        idx = dims.index_of(ket)
        amp[idx] = psi.amp[idx]
    return normalize(PureState(dims, amp))


def eigenvalue_bound_rhs(psi: PureState, sites: Sequence[int],
                         vectors: Sequence[Sequence[complex]],
                         weights: Sequence[float]) -> float:
    """Lower bound witness for sum_j a_j lambda_max^{(site_j)}.

    Evaluates <psi| sum_j a_j (1 x |Phi_j><Phi_j| x 1) |psi>; by the
    min-max principle this never exceeds the weighted sum of largest
    local eigenvalues.
    """
    from .states import site_projector_expectation

    return site_projector_expectation(psi, sites, vectors, weights)
