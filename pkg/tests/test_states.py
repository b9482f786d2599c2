import numpy as np
import pytest
from fractions import Fraction as F

from polyent.errors import DimsMismatch, IndexOutOfRange, InvalidPoint, ZeroState
from polyent.states import (
    Dims,
    PureState,
    SloccOperator,
    apply_slocc,
    basis_ket,
    full_distance,
    ghz_state,
    lift,
    local_spectrum,
    marginals,
    moment_map,
    most_local,
    normalize,
    random_state,
    random_unitary_tuple,
    reduced_density_matrix,
    w_state,
)


def test_basis_ket_ghz_slot():
    # Out[1] of the package docs: a single 1 in the first slot
    psi = basis_ket((0, 0, 0), (2, 2, 2))
    assert psi.amp[0] == 1.0 and np.count_nonzero(psi.amp) == 1


def test_basis_ket_last_slot():
    psi = basis_ket((1, 1), (2, 2))
    assert np.argmax(np.abs(psi.amp)) == 3


def test_basis_ket_row_major():
    psi = basis_ket((0, 2), (2, 3))
    assert np.argmax(np.abs(psi.amp)) == 2


def test_basis_ket_out_of_range():
    with pytest.raises(IndexOutOfRange):
        basis_ket((0, 3), (2, 3))


def test_normalize_ghz():
    psi = PureState.from_terms((2, 2), [((0, 0), 1.0), ((1, 1), 1.0)])
    n = normalize(psi)
    assert np.allclose(np.abs(n.amp[[0, 3]]), 1 / np.sqrt(2))


def test_normalize_idempotent():
    psi = random_state((2, 3), seed=1)
    assert np.allclose(normalize(psi).amp, psi.amp)


def test_normalize_three_four_five():
    psi = PureState((2,), [3.0, 4.0])
    assert np.allclose(normalize(psi).amp, [0.6, 0.8])


def test_zero_state_rejected():
    with pytest.raises(ZeroState):
        PureState((2, 2), np.zeros(4))


def test_rdm_w_state():
    # RDM[Rho[W],{2,2,2},1] = {{2/3,0},{0,1/3}}
    rho = reduced_density_matrix(w_state(), (2, 2, 2), 1)
    assert np.allclose(rho, np.diag([2 / 3, 1 / 3]), atol=1e-12)


def test_rdm_product_state():
    rho = reduced_density_matrix(basis_ket((0, 0, 0), (2, 2, 2)), i=2)
    assert np.allclose(rho, np.diag([1.0, 0.0]), atol=1e-14)


def test_rdm_ghz():
    rho = reduced_density_matrix(ghz_state(), i=2)
    assert np.allclose(rho, np.eye(2) / 2, atol=1e-12)


def test_local_spectrum_ghz():
    spec = local_spectrum(ghz_state())
    assert np.allclose(spec, [[0.5, 0.5]] * 3, atol=1e-12)


def test_local_spectrum_w_most_local():
    assert np.allclose(most_local(local_spectrum(w_state())), [2 / 3] * 3, atol=1e-12)


def test_local_spectrum_product():
    assert np.allclose(local_spectrum(basis_ket((0, 0, 0), (2, 2, 2))),
                       [[1, 0]] * 3, atol=1e-12)


def test_most_local_ghz_coordinates():
    assert most_local(((F(1, 2), F(1, 2)),) * 3) == (F(1, 2), F(1, 2), F(1, 2))


def test_lift_product_point():
    assert lift((1, 1, 1), (2, 2, 2)) == ((1, 0), (1, 0), (1, 0))


def test_lift_reconstructs_third_system():
    full = lift((F(2, 3), F(2, 3), F(1, 3), F(1, 3)), (2, 2, 3))
    assert full[2] == (F(1, 3), F(1, 3), F(1, 3))


def test_lift_rejects_invalid():
    with pytest.raises(InvalidPoint):
        lift((F(3, 2),), (2,))  # reconstructed entry would be -1/2


def test_roundtrip_exact_rational():
    spec = ((F(2, 3), F(1, 3)), (F(3, 5), F(1, 5), F(1, 5)))
    assert lift(most_local(spec), (2, 3)) == spec


def test_apply_slocc_identity():
    psi = random_state((2, 2, 3), seed=3)
    out = apply_slocc(SloccOperator.identity((2, 2, 3)), psi)
    assert np.allclose(out.amp, normalize(psi).amp)


def test_apply_slocc_unitary_isospectral():
    psi = random_state((2, 3, 2), seed=4)
    u = random_unitary_tuple((2, 3, 2), seed=5)
    assert full_distance(local_spectrum(apply_slocc(u, psi)), local_spectrum(psi)) < 1e-10


def test_apply_slocc_ghz_degeneration():
    # diag(1, eps) x 1 x 1 on GHZ approaches |000>
    eps = 1e-6
    g = SloccOperator((np.diag([1.0, eps]), np.eye(2), np.eye(2)))
    out = apply_slocc(g, ghz_state())
    assert abs(abs(out.amp[0]) - 1.0) < 1e-11


def test_moment_map_ghz_origin():
    assert all(np.allclose(x, 0, atol=1e-12) for x in moment_map(ghz_state()))


def test_moment_map_w():
    xs = moment_map(w_state())
    for x in xs:
        assert np.allclose(x, np.diag([1 / 6, -1 / 6]), atol=1e-12)


def test_moment_map_product():
    xs = moment_map(basis_ket((0, 0, 0), (2, 2, 2)))
    for x in xs:
        assert np.allclose(x, np.diag([0.5, -0.5]), atol=1e-14)


def test_full_distance_w_to_origin():
    # FinalDistance -> 0.408248 in the flow transcript
    d = full_distance(local_spectrum(w_state()), ((0.5, 0.5),) * 3)
    assert abs(d - np.sqrt(1 / 6)) < 1e-12


def test_full_distance_zero_and_mismatch():
    p = ((0.5, 0.5),)
    assert full_distance(p, p) == 0.0
    with pytest.raises(DimsMismatch):
        full_distance(((1, 0),), ((1, 0, 0),))


def test_random_unitary_tuple_properties():
    u = random_unitary_tuple((2, 3, 4), seed=9)
    for f in u.factors:
        assert np.allclose(f.conj().T @ f, np.eye(f.shape[0]), atol=1e-12)
    u2 = random_unitary_tuple((2, 3, 4), seed=9)
    for a, b in zip(u.factors, u2.factors):
        assert np.array_equal(a, b)
    assert random_unitary_tuple((1,), seed=0).factors[0].shape == (1, 1)


def test_partial_trace_consistency_random():
    for seed in range(5):
        psi = random_state((2, 3, 3), seed=seed)
        for i, rho in enumerate(marginals(psi), start=1):
            assert abs(np.trace(rho).real - 1.0) < 1e-12
            assert np.linalg.eigvalsh(rho).min() > -1e-10


def test_purity_bound():
    for seed in range(5):
        psi = random_state((2, 3, 4), seed=seed + 10)
        for d, spec in zip((2, 3, 4), local_spectrum(psi)):
            assert spec[0] >= 1 / d - 1e-12


def test_moment_map_equivariance():
    psi = random_state((2, 2, 3), seed=21)
    u = random_unitary_tuple((2, 2, 3), seed=22)
    lhs = moment_map(apply_slocc(u, psi))
    rhs = [f @ x @ f.conj().T for f, x in zip(u.factors, moment_map(psi))]
    for a, b in zip(lhs, rhs):
        assert np.allclose(a, b, atol=1e-10)


def test_bipartite_spectra_agree():
    psi = random_state((3, 3), seed=33)
    s1, s2 = local_spectrum(psi)
    assert np.allclose(s1, s2, atol=1e-10)
