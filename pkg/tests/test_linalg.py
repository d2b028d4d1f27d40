import numpy as np
import pytest

from conftest import random_density, random_hermitian
from qboundary import linalg
from qboundary.errors import (
    DimensionCapError,
    DimMismatchError,
    NotHermitianError,
)
from qboundary.linalg import (
    hermitian_eig,
    is_psd,
    tensor,
    trace_distance,
    trace_norm,
)
from qboundary.states import DensityMatrix, basis_ket, thermal_qubit

OVERLAP_MATRIX = np.array(
    [[5, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]], dtype=complex
) / 8.0


def test_eig_overlap_mixture_spectrum():
    sd = hermitian_eig(OVERLAP_MATRIX)
    assert np.allclose(sd.eigenvalues, [0.75, 0.25, 0.0, 0.0], atol=1e-12)


def test_eig_identity():
    sd = hermitian_eig(np.eye(5, dtype=complex))
    assert np.array_equal(sd.eigenvalues, np.ones(5))
    assert np.array_equal(sd.eigenvectors, np.eye(5, dtype=complex))


def test_eig_reconstruction_seeded():
    rng = np.random.default_rng(7)
    worst = 0.0
    for d in (2, 3, 4, 6, 8, 9, 16):
        for _ in range(20):
            h = random_hermitian(rng, d)
            sd = hermitian_eig(h)
            nrm = max(1.0, np.linalg.norm(h))
            worst = max(worst, np.linalg.norm(sd.reconstruct() - h) / nrm)
            gram = sd.eigenvectors.conj().T @ sd.eigenvectors
            worst = max(worst, np.abs(gram - np.eye(d)).max())
    assert worst <= 1e-9


def test_eig_descending_order_and_phase_convention():
    rng = np.random.default_rng(8)
    h = random_hermitian(rng, 10)
    sd = hermitian_eig(h)
    assert np.all(np.diff(sd.eigenvalues) <= 1e-15)
    for j in range(10):
        col = sd.eigenvectors[:, j]
        k = int(np.argmax(np.abs(col)))
        assert col[k].imag == 0.0
        assert col[k].real >= 0.0


def test_eig_deterministic():
    rng = np.random.default_rng(9)
    h = random_hermitian(rng, 8)
    a, b = hermitian_eig(h), hermitian_eig(h)
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_eig_diagonal_fast_path_sorts():
    sd = hermitian_eig(np.diag([0.1, 0.7, 0.2]).astype(complex))
    assert np.array_equal(sd.eigenvalues, [0.7, 0.2, 0.1])
    # eigenvector columns are the matching standard basis vectors
    assert np.array_equal(sd.eigenvectors[:, 0], basis_ket([1], [3]))


def test_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        hermitian_eig(np.array([[0, 1], [0, 0]], dtype=complex))


def test_eig_rejects_non_square_and_cap():
    with pytest.raises(DimMismatchError):
        hermitian_eig(np.zeros((2, 3)))
    big = np.zeros((513, 513), dtype=complex)
    big[0, 1] = big[1, 0] = 1.0  # not diagonal, so the dense cap applies
    with pytest.raises(DimensionCapError):
        hermitian_eig(big)


def test_trace_norm_values():
    op = np.eye(4, dtype=complex) / 4.0
    op[3, 3] -= 1.0
    assert abs(trace_norm(op) - 1.5) < 1e-12
    assert trace_norm(np.zeros((3, 3))) == 0.0
    rng = np.random.default_rng(10)
    rho = random_density(rng, 6)
    assert abs(trace_norm(rho.mat) - 1.0) < 1e-10


def test_trace_norm_matches_independent_eigensum():
    rng = np.random.default_rng(11)
    for d in (2, 5, 9):
        h = random_hermitian(rng, d)
        ref = float(np.sum(np.abs(np.linalg.eigvalsh(h))))
        assert abs(trace_norm(h) - ref) <= 1e-10


def test_trace_distance_values():
    third = np.diag([1 / 3, 1 / 3, 1 / 3, 0]).astype(complex)
    assert abs(trace_distance(np.eye(4, dtype=complex) / 4, third) - 0.25) < 1e-12
    rho = np.diag([1.0, 0.0]).astype(complex)
    sigma = np.diag([0.0, 1.0]).astype(complex)
    assert trace_distance(rho, rho) == 0.0
    assert abs(trace_distance(rho, sigma) - 1.0) < 1e-12


def test_trace_distance_metric_properties():
    rng = np.random.default_rng(12)
    for _ in range(10):
        a, b, c = (random_density(rng, 4).mat for _ in range(3))
        dab, dba = trace_distance(a, b), trace_distance(b, a)
        assert abs(dab - dba) < 1e-12
        assert 0.0 <= dab <= 1.0 + 1e-12
        assert trace_distance(a, c) <= dab + trace_distance(b, c) + 1e-12


def test_trace_distance_dim_mismatch():
    with pytest.raises(DimMismatchError):
        trace_distance(np.eye(2) / 2, np.eye(3) / 3)


def test_tensor_basis_and_diagonal():
    e1 = np.array([[0, 0], [0, 1]], dtype=complex)
    out = tensor(e1, e1)
    expected = np.zeros((4, 4), dtype=complex)
    expected[3, 3] = 1.0
    assert np.array_equal(out, expected)
    assert np.allclose(
        tensor(np.diag([2.0, 3.0]), np.diag([5.0, 7.0])),
        np.diag([10.0, 14.0, 15.0, 21.0]),
    )


def test_tensor_thermal_pair_entries():
    eta = 0.4
    pair = tensor(thermal_qubit(eta).mat, thermal_qubit(eta).mat)
    up, down = (1 + eta) / 2, (1 - eta) / 2
    assert np.allclose(np.diagonal(pair), [up * up, up * down, down * up, down * down])


def test_tensor_associative_up_to_relabeling():
    rng = np.random.default_rng(13)
    a = random_hermitian(rng, 2)
    b = random_hermitian(rng, 3)
    c = random_hermitian(rng, 2)
    assert np.allclose(tensor(tensor(a, b), c), tensor(a, tensor(b, c)), atol=1e-14)


def test_is_psd():
    rng = np.random.default_rng(14)
    assert is_psd(random_density(rng, 5).mat)
    t = -0.1
    line = (1 - t) * np.diag([1.0, 0.0]) + t * np.diag([0.0, 1.0])
    assert not is_psd(line.astype(complex))


def test_is_psd_rejects_pt_of_flip_mixture():
    eps = 0.1
    mat = np.zeros((4, 4), dtype=complex)
    mat[1, 1] = mat[2, 2] = 0.5
    mat[1, 2] = mat[2, 1] = eps / 2
    pt = mat.reshape(2, 2, 2, 2).transpose(2, 1, 0, 3).reshape(4, 4)
    assert not is_psd(pt)


def test_as_matrix_accepts_wrappers():
    rng = np.random.default_rng(15)
    dm = random_density(rng, 3)
    assert np.array_equal(linalg.as_matrix(dm), dm.mat)
    assert abs(trace_distance(dm, dm)) == 0.0
