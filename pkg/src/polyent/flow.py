"""Gradient flow of the extended moment map toward rational targets.

To flow a state toward an arbitrary rational chamber point lambda/k, the
moment map is extended by a coadjoint-orbit term: at (psi, U) the value is

    xi_i = k (rho_i - 1/d_i) + U_i diag(lambda*_i) U_i^dagger,

with lambda* the reversed-negated shift of lambda that makes each block
traceless.  One discrete step acts with exp(-h xi) on the state and moves
the orbit point by the Q factor of the QR decomposition; steps are
accepted only when ||xi|| drops, with the usual grow/shrink step-size
schedule and restarts.  A run that does not reach the target emits the
separating inequality normal to (closest point - target).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DegenerateDirection, DimsMismatch, IrrationalTarget, NotInChamber
from .ratlinalg import scale_to_coprime_ints
from .states import (
    Dims,
    PureState,
    SloccOperator,
    apply_factor,
    full_distance,
    lift,
    local_spectrum,
    marginals,
    most_local,
    normalize,
    random_unitary_tuple,
    tuple_norm,
)

GROW = 1.1
SHRINK = 0.5
STALL_TRIALS = 50
# largest allowed |h * eigenvalue| inside exp(-h xi); keeps the local factors
# well-conditioned so late-flow states near the orbit boundary stay accurate
EXP_CAP = 30.0


@dataclass(frozen=True)
class YoungTuple:
    """Integer weight tuple (one weakly decreasing vector per system) with a
    common box count k; lambda/k is the target chamber point."""

    lambdas: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        counts = {sum(lam) for lam in self.lambdas}
        if counts != {self.k}:
            raise NotInChamber(f"box counts {counts} differ from k={self.k}")
        for lam in self.lambdas:
            if any(a < b for a, b in zip(lam, lam[1:])) or any(x < 0 for x in lam):
                raise NotInChamber(f"{lam} is not a weakly decreasing nonnegative vector")

    def target_spectrum(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(x, self.k) for x in lam) for lam in self.lambdas)


def convert_to_lambdas(target: Sequence, dims: Dims | Sequence[int],
                       most_local_coords: bool | None = None) -> YoungTuple:
    """Young-diagram tuple for a rational chamber point.

    Accepts either most-local coordinates (length sum(d_i - 1)) or a full
    spectrum (per-system sequences).  k is the lcm of all denominators of
    the full coordinates; lambda_i = k * (spectrum of system i).
    """
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    if target and isinstance(target[0], (list, tuple)):
        spec = [list(part) for part in target]
        if tuple(len(p) for p in spec) != dims.d:
            raise DimsMismatch("spectrum shape does not match dims")
    else:
        flat = list(target)
        if most_local_coords is False:
            raise DimsMismatch("flat input is interpreted as most-local coordinates")
        spec = [list(part) for part in lift(flat, dims, check=False)]
    try:
        frac = [[Fraction(x).limit_denominator(1000) if isinstance(x, float) else Fraction(x)
                 for x in part] for part in spec]
    except (TypeError, ValueError) as exc:
        raise IrrationalTarget(str(exc)) from exc
    for fpart, spart in zip(frac, spec):
        for f, s in zip(fpart, spart):
            # floats are snapped to denominators <= 1000; anything that is
            # not within 1e-9 of such a rational is rejected
            if isinstance(s, float) and abs(float(f) - s) > 1e-9:
                raise IrrationalTarget(f"{s} is not recognizably rational")
    for part in frac:
        if any(a < b for a, b in zip(part, part[1:])):
            raise NotInChamber(f"{tuple(part)} is not weakly decreasing")
        if any(x < 0 or x > 1 for x in part):
            raise NotInChamber(f"{tuple(part)} is not a probability vector")
        if sum(part) != 1:
            raise NotInChamber(f"{tuple(part)} does not sum to 1")
    k = 1
    for part in frac:
        for x in part:
            k = k * x.denominator // math.gcd(k, x.denominator)
    lambdas = tuple(tuple(int(x * k) for x in part) for part in frac)
    return YoungTuple(lambdas=lambdas, k=k)


def lambda_star(lam: YoungTuple, dims: Dims | Sequence[int]) -> tuple[tuple[Fraction, ...], ...]:
    """Traceless dual shift: per factor, negate, reverse, and add k/d_i."""
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    out = []
    for d, part in zip(dims.d, lam.lambdas):
        shifted = tuple(Fraction(-x) + Fraction(lam.k, d) for x in reversed(part))
        assert sum(shifted) == 0
        out.append(shifted)
    return tuple(out)


def extended_moment(psi: PureState, U: SloccOperator,
                    lamstar: Sequence[Sequence[Fraction]], k: int) -> list[np.ndarray]:
    """xi_i = k (rho_i - 1/d_i) + U_i diag(lambda*_i) U_i^dagger."""
    out = []
    for rho, u, star, d in zip(marginals(psi), U.factors, lamstar, psi.dims.d):
        diag = np.diag(np.array([float(x) for x in star]))
        out.append(k * (rho - np.eye(d) / d) + u @ diag @ u.conj().T)
    return out


class ExitReason(enum.Enum):
    REACHED = "Reached"
    STEP_TOO_SMALL = "StepTooSmall"
    MAX_STEPS_EXCEEDED = "MaxStepsExceeded"
    RESTARTS_EXHAUSTED = "RestartsExhausted"


@dataclass(frozen=True)
class FlowOptions:
    max_steps: int | None = None
    min_progress: float = 1e-6
    min_step: float = 1e-6
    initial_step: float = 1.0
    max_restarts: int = 5
    target_precision: float = 1e-2
    seed: int | None = None

    @classmethod
    def preset(cls, name: str = "default", **over) -> "FlowOptions":
        if name == "default":
            base = cls()
        elif name == "highdim":
            base = cls(min_progress=1e-10)
        else:
            raise ValueError(f"unknown preset {name!r}")
        return replace(base, **over) if over else base


@dataclass
class FlowOutcome:
    reached: bool
    final_state: PureState
    final_spectrum: tuple[tuple[float, ...], ...]
    final_distance: float
    trajectory: list[tuple[float, ...]]
    raw_inequality: tuple[float, ...] | None
    pretty_inequality: str | None
    suggested_inequality: tuple[int, ...] | None
    steps_taken: int
    restarts_used: int
    exit_reason: ExitReason
    xi_norms: list[float] = field(default_factory=list)
    accumulated: SloccOperator | None = None
    final_coadjoint: SloccOperator | None = None

    def to_dict(self) -> dict:
        return {
            "reached": self.reached,
            "final_spectrum": [list(p) for p in self.final_spectrum],
            "closest_point": list(most_local(self.final_spectrum)),
            "final_distance": self.final_distance,
            "trajectory": [list(p) for p in self.trajectory],
            "raw_inequality": list(self.raw_inequality) if self.raw_inequality else None,
            "pretty_inequality": self.pretty_inequality,
            "suggested_inequality": list(self.suggested_inequality)
            if self.suggested_inequality
            else None,
            "steps_taken": self.steps_taken,
            "restarts_used": self.restarts_used,
            "exit_reason": self.exit_reason.value,
        }


def _coord_names(dims: Dims) -> list[str]:
    names = []
    for i, d in enumerate(dims.d, start=1):
        names.extend(f"x{i},{j}" for j in range(1, d))
    return names


def extract_inequality(final_spectrum: Sequence[Sequence[float]],
                       target: Sequence[Sequence[float]],
                       dims: Dims | Sequence[int]):
    """Separating data from a closest point p and unreachable target p'.

    The halfspace <x - p', p - p'> >= <p - p', p - p'> is reduced to
    most-local coordinates; ``raw`` carries it in the qhull convention
    (coeffs..., offset), scaled by 1/||p - p'|| in full coordinates;
    ``pretty`` renders the >= form; ``suggested`` is the integer
    rationalization of raw (None when no small multiplier works).
    """
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    n = [
        [float(x) - float(y) for x, y in zip(pp, tp)]
        for pp, tp in zip(final_spectrum, target)
    ]
    norm = math.sqrt(sum(x * x for part in n for x in part))
    if norm < 1e-12:
        raise DegenerateDirection("closest point coincides with the target")
    rhs = sum(
        nx * float(px) for npart, ppart in zip(n, final_spectrum) for nx, px in zip(npart, ppart)
    )
    coeffs: list[float] = []
    for npart in n:
        last = npart[-1]
        coeffs.extend(x - last for x in npart[:-1])
        rhs -= last
    raw = tuple(-c / norm for c in coeffs) + (rhs / norm,)
    # Render like the raw form divided by its smallest nonzero coefficient,
    # so clean cases read "1. x1,1 + 1. x2,1 + ... >= 2."
    scale = min((abs(c) for c in coeffs if abs(c) > 1e-9), default=1.0)
    pretty_terms = []
    names = _coord_names(dims)
    for c, name in zip(coeffs, names):
        if abs(c) > 1e-9:
            pretty_terms.append(f"{c / scale:+.6g} {name}")
    pretty = " ".join(pretty_terms).lstrip("+") + f" >= {rhs / scale:.6g}"
    suggested = suggest_integer(raw)
    return raw, pretty, suggested


def suggest_integer(raw: Sequence[float], tol: float = 0.05,
                    max_mult: int = 60) -> tuple[int, ...] | None:
    """Integer rationalization of a raw inequality vector.

    Divides by the smallest nonzero |entry|, then looks for the first
    multiplier m <= max_mult putting every entry within tol of an
    integer; returns coprime integers, or None (unrated) on failure.
    """
    vals = [float(x) for x in raw]
    nonzero = [abs(x) for x in vals if abs(x) > 1e-9]
    if not nonzero:
        return None
    base = [x / min(nonzero) for x in vals]
    for m in range(1, max_mult + 1):
        scaled = [m * x for x in base]
        if all(abs(x - round(x)) <= tol for x in scaled):
            ints = [int(round(x)) for x in scaled]
            if all(x == 0 for x in ints):
                return None
            return tuple(scale_to_coprime_ints([Fraction(x) for x in ints]))
    return None


def _exp_herm(h: float, xi: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(0.5 * (xi + xi.conj().T))
    return (v * np.exp(-h * w)) @ v.conj().T


def _step_factors(h: float, xi: list[np.ndarray]) -> list[np.ndarray]:
    """exp(-h_eff xi_i) per factor, with h_eff capped so no exponent
    exceeds EXP_CAP in magnitude."""
    eigs = [np.linalg.eigh(0.5 * (x + x.conj().T)) for x in xi]
    wmax = max((float(np.max(np.abs(w))) for w, _ in eigs), default=0.0)
    h_eff = h if wmax * h <= EXP_CAP else EXP_CAP / wmax
    return [(v * np.exp(-h_eff * w)) @ v.conj().T for w, v in eigs]


def _qr_positive(m: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(m)
    ph = np.diag(r).copy()
    with np.errstate(invalid="ignore", divide="ignore"):
        ph = np.where(np.abs(ph) < 1e-300, 1.0, ph / np.where(np.abs(ph) == 0, 1.0, np.abs(ph)))
    return q * ph.conj()


def flow(psi: PureState, U0: SloccOperator | None, lam: YoungTuple,
         dims: Dims | Sequence[int] | None = None,
         opts: FlowOptions = FlowOptions(),
         on_step=None) -> FlowOutcome:
    """Run the discretized flow of psi toward the chamber point lambda/k.

    The state is updated incrementally by the newest exp(-h xi) factor and
    renormalized; the coadjoint point follows through the QR projection.
    Step acceptance requires ||xi|| to drop by at least min_progress;
    accepted steps grow h by 1.1, rejections halve it; when h falls below
    min_step (or 50 consecutive trials stall) the schedule restarts with
    the state kept, up to max_restarts times.

    ``on_step(step, xi_norm, point)`` is called after every accepted step;
    the callback is owned by the caller and exceptions propagate.
    """
    if dims is None:
        dims = psi.dims
    elif not isinstance(dims, Dims):
        dims = Dims(dims)
    if tuple(len(l) for l in lam.lambdas) != dims.d:
        raise DimsMismatch("Young tuple shape does not match dims")
    if U0 is None:
        U0 = random_unitary_tuple(dims, seed=opts.seed)
    star = lambda_star(lam, dims)
    target = lam.target_spectrum()
    target_f = tuple(tuple(float(x) for x in part) for part in target)

    psi = normalize(psi)
    U = U0
    acc = SloccOperator.identity(dims)
    xi = extended_moment(psi, U, star, lam.k)
    xi_norm = tuple_norm(xi)
    spec = local_spectrum(psi)
    trajectory = [most_local(spec)]
    xi_norms = [xi_norm]
    h = opts.initial_step
    steps = 0
    restarts = 0
    stall = 0
    reason = ExitReason.RESTARTS_EXHAUSTED

    def reached_now(s):
        return full_distance(s, target_f) < opts.target_precision

    if reached_now(spec):
        reason = ExitReason.REACHED
    else:
        while True:
            if opts.max_steps is not None and steps >= opts.max_steps:
                reason = ExitReason.MAX_STEPS_EXCEEDED
                break
            gs = _step_factors(h, xi)
            amp = psi.amp
            for i, g in enumerate(gs, start=1):
                amp = apply_factor(PureState(dims, amp), i, g)
            finite = np.isfinite(amp).all() and np.linalg.norm(amp) > 0
            if finite:
                cand_psi = normalize(PureState(dims, amp))
                cand_U = SloccOperator(
                    tuple(_qr_positive(g @ u) for g, u in zip(gs, U.factors))
                )
                cand_xi = extended_moment(cand_psi, cand_U, star, lam.k)
                cand_norm = tuple_norm(cand_xi)
                finite = np.isfinite(cand_norm)
            if finite and cand_norm - xi_norm < -opts.min_progress:
                psi, U, xi, xi_norm = cand_psi, cand_U, cand_xi, cand_norm
                acc = SloccOperator(tuple(
                    (g @ a) / max(np.linalg.norm(g @ a), 1e-300)
                    for g, a in zip(gs, acc.factors)
                ))
                spec = local_spectrum(psi)
                trajectory.append(most_local(spec))
                xi_norms.append(xi_norm)
                steps += 1
                stall = 0
                h *= GROW
                if on_step is not None:
                    on_step(steps, xi_norm, trajectory[-1])
                if reached_now(spec):
                    reason = ExitReason.REACHED
                    break
            else:
                h *= SHRINK
                stall += 1
            if h < opts.min_step or stall >= STALL_TRIALS:
                if restarts >= opts.max_restarts:
                    reason = (
                        ExitReason.STEP_TOO_SMALL if h < opts.min_step
                        else ExitReason.RESTARTS_EXHAUSTED
                    )
                    break
                restarts += 1
                h = opts.initial_step
                stall = 0

    final_distance = full_distance(spec, target_f)
    reached = final_distance < opts.target_precision
    raw = pretty = suggested = None
    if not reached:
        try:
            raw, pretty, suggested = extract_inequality(spec, target_f, dims)
        except DegenerateDirection:
            pass
    return FlowOutcome(
        reached=reached,
        final_state=psi,
        final_spectrum=spec,
        final_distance=final_distance,
        trajectory=trajectory,
        raw_inequality=raw,
        pretty_inequality=pretty,
        suggested_inequality=suggested,
        steps_taken=steps,
        restarts_used=restarts,
        exit_reason=reason,
        xi_norms=xi_norms,
        accumulated=acc,
        final_coadjoint=U,
    )


def flow_to_point(psi: PureState, point: Sequence, dims=None,
                  opts: FlowOptions = FlowOptions(),
                  U0: SloccOperator | None = None) -> FlowOutcome:
    """Convenience wrapper: convert a rational point and flow toward it."""
    if dims is None:
        dims = psi.dims
    lam = convert_to_lambdas(point, dims)
    return flow(psi, U0, lam, dims, opts)
