"""Tensor-product Hilbert space algebra for multipartite pure states.

States live on H = C^{d_1} x ... x C^{d_N} with amplitudes stored densely
over the computational product basis in row-major (lexicographic) order.
The module provides the local reductions (marginals, spectra), the two
coordinate systems used for polytope points (full local spectra and the
"most local" truncation that drops the smallest eigenvalue per system),
the SLOCC / local-unitary group action, and the trace-shifted moment map
whose origin is the tuple of maximally mixed marginals.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadVectorNorm,
    DimsMismatch,
    IndexOutOfRange,
    InvalidPoint,
    SingularOperator,
    ZeroState,
)

HERMITICITY_TOL = 1e-12
PSD_FLOOR = -1e-10


@dataclass(frozen=True)
class Dims:
    """Local dimensions (d_1, ..., d_N) of a tensor product space."""

    d: tuple[int, ...]

    def __init__(self, d: Iterable[int]):
        d = tuple(int(x) for x in d)
        if len(d) < 1 or any(x < 1 for x in d):
            raise ValueError(f"invalid local dimensions {d}")
        object.__setattr__(self, "d", d)

    @property
    def n_systems(self) -> int:
        return len(self.d)

    @property
    def hilbert_dim(self) -> int:
        return math.prod(self.d)

    @property
    def full_dim(self) -> int:
        """Number of coordinates when every local eigenvalue is kept."""
        return sum(self.d)

    @property
    def most_local_dim(self) -> int:
        """Number of coordinates after dropping one eigenvalue per system."""
        return sum(x - 1 for x in self.d)

    def index_of(self, ket: Sequence[int]) -> int:
        """Row-major position of the product ket |j_1 ... j_N>."""
        if len(ket) != len(self.d):
            raise IndexOutOfRange(f"ket {tuple(ket)} has wrong length for dims {self.d}")
        idx = 0
        for j, dj in zip(ket, self.d):
            if not 0 <= j < dj:
                raise IndexOutOfRange(f"ket index {tuple(ket)} out of range for dims {self.d}")
            idx = idx * dj + j
        return idx

    def ket_of(self, index: int) -> tuple[int, ...]:
        ket = []
        for dj in reversed(self.d):
            index, r = divmod(index, dj)
            ket.append(r)
        return tuple(reversed(ket))

    def all_kets(self):
        return itertools.product(*(range(dj) for dj in self.d))

    def __iter__(self):
        return iter(self.d)

    def __len__(self):
        return len(self.d)

    def __getitem__(self, i):
        return self.d[i]


class PureState:
    """A pure state: dims plus a dense complex amplitude vector.

    The vector need not be normalized; operations that depend only on the
    ray normalize internally.  At least one amplitude must be nonzero.
    """

    __slots__ = ("dims", "amp")

    def __init__(self, dims: Dims | Iterable[int], amp):
        if not isinstance(dims, Dims):
            dims = Dims(dims)
        amp = np.asarray(amp, dtype=complex).reshape(-1)
        if amp.shape[0] != dims.hilbert_dim:
            raise DimsMismatch(
                f"amplitude vector of length {amp.shape[0]} does not match dims {dims.d}"
            )
        nrm = np.linalg.norm(amp)
        if not np.isfinite(nrm) or nrm == 0.0:
            raise ZeroState("state must have positive finite norm")
        self.dims = dims
        self.amp = amp

    @classmethod
    def from_terms(cls, dims: Dims | Iterable[int], terms) -> "PureState":
        """Build a state from a sparse term list [(ket, coefficient), ...]."""
        if not isinstance(dims, Dims):
            dims = Dims(dims)
        amp = np.zeros(dims.hilbert_dim, dtype=complex)
        for ket, coeff in terms:
            amp[dims.index_of(ket)] += coeff
        return cls(dims, amp)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amp))

    def tensor(self) -> np.ndarray:
        return self.amp.reshape(self.dims.d)

    def __repr__(self):
        return f"PureState(dims={self.dims.d}, amp={np.round(self.amp, 6)!r})"


def basis_ket(ket: Sequence[int], dims: Dims | Iterable[int]) -> PureState:
    """Unit vector with a single 1 at the lexicographic slot of ``ket``."""
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    amp = np.zeros(dims.hilbert_dim, dtype=complex)
    amp[dims.index_of(ket)] = 1.0
    return PureState(dims, amp)


def normalize(psi: PureState) -> PureState:
    """Scale to unit Euclidean norm, keeping the ray."""
    n = psi.norm()
    if n == 0.0:
        raise ZeroState("cannot normalize the zero state")
    return PureState(psi.dims, psi.amp / n)


def reduced_density_matrix(psi: PureState, dims: Dims | None = None, i: int = 1) -> np.ndarray:
    """One-body reduced density matrix of system ``i`` (1-based).

    Traces out all other systems by direct summation over the
    complementary indices; the result is Hermitian with unit trace.
    """
    if dims is None:
        dims = psi.dims
    elif not isinstance(dims, Dims):
        dims = Dims(dims)
    if dims.d != psi.dims.d:
        raise DimsMismatch(f"dims {dims.d} do not match state dims {psi.dims.d}")
    n = dims.n_systems
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"system index {i} out of range 1..{n}")
    amp = normalize(psi).amp
    before = math.prod(dims.d[: i - 1])
    di = dims.d[i - 1]
    after = math.prod(dims.d[i:])
    m = amp.reshape(before, di, after)
    rho = np.einsum("adb,aeb->de", m, m.conj())
    return 0.5 * (rho + rho.conj().T)


def marginals(psi: PureState) -> list[np.ndarray]:
    """All one-body reduced density matrices, in system order."""
    return [reduced_density_matrix(psi, psi.dims, i) for i in range(1, psi.dims.n_systems + 1)]


def local_spectrum(psi: PureState, dims: Dims | None = None) -> tuple[tuple[float, ...], ...]:
    """Ordered local spectra: per system, the marginal eigenvalues sorted
    weakly decreasing."""
    if dims is not None and not isinstance(dims, Dims):
        dims = Dims(dims)
    if dims is not None and dims.d != psi.dims.d:
        raise DimsMismatch(f"dims {dims.d} do not match state dims {psi.dims.d}")
    out = []
    for rho in marginals(psi):
        w = np.linalg.eigvalsh(rho)
        out.append(tuple(float(x) for x in w[::-1]))
    return tuple(out)


def spectrum_to_vector(spec: Sequence[Sequence]) -> list:
    """Flatten a per-system spectrum into one coordinate vector."""
    return [x for part in spec for x in part]


def full_distance(a: Sequence[Sequence], b: Sequence[Sequence]) -> float:
    """Euclidean distance between two spectrum points using all Σ d_i entries."""
    shapes_a = tuple(len(p) for p in a)
    shapes_b = tuple(len(p) for p in b)
    if shapes_a != shapes_b:
        raise DimsMismatch(f"spectrum shapes differ: {shapes_a} vs {shapes_b}")
    va = np.array(spectrum_to_vector(a), dtype=float)
    vb = np.array(spectrum_to_vector(b), dtype=float)
    return float(np.linalg.norm(va - vb))


def most_local(spec: Sequence[Sequence]) -> tuple:
    """Drop the last (smallest) entry of each system's spectrum."""
    out = []
    for part in spec:
        out.extend(part[:-1])
    return tuple(out)


def lift(x: Sequence, dims: Dims | Iterable[int], check: bool = True) -> tuple:
    """Reconstruct a full spectrum point from most-local coordinates.

    The last entry per system is one minus the sum of the kept ones.
    Exact for Fraction inputs.  Raises InvalidPoint when a reconstructed
    entry leaves [0, 1].
    """
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    x = list(x)
    if len(x) != dims.most_local_dim:
        raise DimsMismatch(
            f"point of length {len(x)} does not match most-local dim {dims.most_local_dim}"
        )
    out = []
    pos = 0
    for dj in dims.d:
        part = list(x[pos : pos + dj - 1])
        pos += dj - 1
        one = Fraction(1) if any(isinstance(v, Fraction) for v in part) or not part else 1.0
        last = one - sum(part) if part else one
        if check:
            lo, hi = -1e-12, 1 + 1e-12
            if isinstance(last, Fraction):
                lo, hi = 0, 1
            if not lo <= last <= hi:
                raise InvalidPoint(f"reconstructed entry {last} outside [0, 1]")
        out.append(tuple(part) + (last,))
    return tuple(out)


@dataclass(frozen=True)
class SloccOperator:
    """Tuple of invertible local operators g = (g_1, ..., g_N)."""

    factors: tuple[np.ndarray, ...]

    def __init__(self, factors):
        factors = tuple(np.asarray(f, dtype=complex) for f in factors)
        for f in factors:
            if f.ndim != 2 or f.shape[0] != f.shape[1]:
                raise DimsMismatch("each SLOCC factor must be a square matrix")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def identity(cls, dims: Dims | Iterable[int]) -> "SloccOperator":
        if not isinstance(dims, Dims):
            dims = Dims(dims)
        return cls(tuple(np.eye(dj, dtype=complex) for dj in dims.d))

    def is_unitary(self, tol: float = 1e-12) -> bool:
        return all(
            np.linalg.norm(f.conj().T @ f - np.eye(f.shape[0])) <= tol * max(1, f.shape[0])
            for f in self.factors
        )

    def unit_determinant(self) -> "SloccOperator":
        """Rescale each factor to determinant one (same ILO up to phase)."""
        out = []
        for f in self.factors:
            det = np.linalg.det(f)
            if det == 0:
                raise SingularOperator("factor has zero determinant")
            out.append(f / det ** (1.0 / f.shape[0]))
        return SloccOperator(tuple(out))


def apply_factor(psi: PureState, i: int, g: np.ndarray) -> np.ndarray:
    """Apply a single local operator on system i (1-based); returns raw amplitudes."""
    dims = psi.dims
    before = math.prod(dims.d[: i - 1])
    di = dims.d[i - 1]
    after = math.prod(dims.d[i:])
    m = psi.amp.reshape(before, di, after)
    return np.einsum("de,aeb->adb", g, m).reshape(-1)


def apply_slocc(g: SloccOperator, psi: PureState) -> PureState:
    """Normalized image (g_1 x ... x g_N)|psi> / ||...||."""
    if len(g.factors) != psi.dims.n_systems:
        raise DimsMismatch("operator tuple length does not match number of systems")
    amp = psi.amp
    cur = PureState(psi.dims, amp)
    for i, f in enumerate(g.factors, start=1):
        if f.shape[0] != psi.dims.d[i - 1]:
            raise DimsMismatch(f"factor {i} has size {f.shape[0]}, expected {psi.dims.d[i-1]}")
        if abs(np.linalg.det(f)) < 1e-300:
            raise SingularOperator(f"factor {i} is singular")
        cur = PureState(psi.dims, apply_factor(cur, i, f))
    return normalize(cur)


def moment_map(psi: PureState, dims: Dims | None = None) -> list[np.ndarray]:
    """Trace-shifted moment map: the tuple (rho_i - 1/d_i * I).

    Each component is Hermitian and traceless; the zero tuple is the
    tuple of maximally mixed marginals.
    """
    if dims is not None and not isinstance(dims, Dims):
        dims = Dims(dims)
    if dims is not None and dims.d != psi.dims.d:
        raise DimsMismatch(f"dims {dims.d} do not match state dims {psi.dims.d}")
    out = []
    for dj, rho in zip(psi.dims.d, marginals(psi)):
        out.append(rho - np.eye(dj) / dj)
    return out


def tuple_norm(xs: Iterable[np.ndarray]) -> float:
    """Frobenius norm of a tuple of matrices (the Lie-algebra norm)."""
    return math.sqrt(sum(float(np.linalg.norm(x)) ** 2 for x in xs))


def random_unitary_tuple(dims: Dims | Iterable[int], seed=None) -> SloccOperator:
    """Haar-random tuple of local unitaries (QR of a Ginibre matrix with
    the R diagonal phase-fixed); deterministic given ``seed``."""
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    rng = np.random.default_rng(seed)
    factors = []
    for dj in dims.d:
        z = rng.standard_normal((dj, dj)) + 1j * rng.standard_normal((dj, dj))
        q, r = np.linalg.qr(z)
        ph = np.diag(r).copy()
        ph = ph / np.abs(ph)
        factors.append(q * ph)
    return SloccOperator(tuple(factors))


def random_state(dims: Dims | Iterable[int], seed=None) -> PureState:
    """Haar-random pure state."""
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    rng = np.random.default_rng(seed)
    amp = rng.standard_normal(dims.hilbert_dim) + 1j * rng.standard_normal(dims.hilbert_dim)
    return normalize(PureState(dims, amp))


def random_slocc(dims: Dims | Iterable[int], seed=None, max_condition: float = 100.0) -> SloccOperator:
    """Random invertible local operator tuple with bounded condition number."""
    if not isinstance(dims, Dims):
        dims = Dims(dims)
    rng = np.random.default_rng(seed)
    factors = []
    for dj in dims.d:
        while True:
            z = rng.standard_normal((dj, dj)) + 1j * rng.standard_normal((dj, dj))
            if np.linalg.cond(z) <= max_condition:
                factors.append(z)
                break
    return SloccOperator(tuple(factors))


def expectation(psi: PureState, sites: Sequence[int], ops: Sequence[np.ndarray]) -> float:
    """<psi| sum_j (1 ⊗ op_j at site_j ⊗ 1) |psi> for a normalized psi."""
    amp = normalize(psi).amp
    total = 0.0
    for i, op in zip(sites, ops):
        img = apply_factor(PureState(psi.dims, amp), i, np.asarray(op, dtype=complex))
        total += float(np.real(np.vdot(amp, img)))
    return total


def site_projector_expectation(
    psi: PureState,
    sites: Sequence[int],
    vectors: Sequence[Sequence[complex]],
    weights: Sequence[float],
) -> float:
    """Weighted sum of projector expectations a_j <psi|(1 ⊗ |Φ_j><Φ_j| ⊗ 1)|psi>.

    Each Φ_j must be a unit vector on its site.  The value is bounded by
    Σ_j a_j λ_max^{(site_j)} (min-max principle).
    """
    dims = psi.dims
    ops = []
    for i, v, a in zip(sites, vectors, weights):
        if not 1 <= i <= dims.n_systems:
            raise IndexOutOfRange(f"site {i} out of range")
        v = np.asarray(v, dtype=complex).reshape(-1)
        if v.shape[0] != dims.d[i - 1]:
            raise DimsMismatch(f"vector at site {i} has wrong dimension")
        if abs(np.linalg.norm(v) - 1.0) > 1e-9:
            raise BadVectorNorm(f"vector at site {i} is not unit norm")
        ops.append(a * np.outer(v, v.conj()))
    return expectation(psi, sites, ops)


# Named example states used throughout the paper's transcripts.

def ghz_state(n_qubits: int = 3) -> PureState:
    dims = Dims([2] * n_qubits)
    return normalize(
        PureState.from_terms(dims, [((0,) * n_qubits, 1.0), ((1,) * n_qubits, 1.0)])
    )


def w_state(n_qubits: int = 3) -> PureState:
    dims = Dims([2] * n_qubits)
    terms = []
    for i in range(n_qubits):
        ket = [0] * n_qubits
        ket[i] = 1
        terms.append((tuple(ket), 1.0))
    return normalize(PureState.from_terms(dims, terms))
