import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_density
from qboundary.errors import (
    DegenerateLineError,
    DimMismatchError,
    ImmediateBoundaryError,
    NotPSDError,
    OutOfRangeError,
)
from qboundary.geometry import (
    StateLine,
    epsilon_mix,
    find_boundary,
    line_state,
    void_degree,
)
from qboundary.linalg import ZERO_EIG_TOL, hermitian_eig, is_psd, min_eigenvalue, trace_distance
from qboundary.states import DensityMatrix, basis_ket, maximally_mixed, thermal_n


def _proj_dm(labels, dims):
    return DensityMatrix.from_vector(basis_ket(labels, dims), tuple(dims))


def test_line_state_endpoints_and_extrapolation_identity():
    rng = np.random.default_rng(31)
    line = StateLine(random_density(rng, 4, (2, 2)), random_density(rng, 4, (2, 2)))
    assert np.allclose(line_state(line, 0.0).mat, line.rho0.mat, atol=1e-15)
    assert np.allclose(line_state(line, 1.0).mat, line.rho1.mat, atol=1e-15)
    t = -0.37
    direct = (1 + abs(t)) * line.rho0.mat - abs(t) * line.rho1.mat
    assert np.allclose(line_state(line, t).mat, direct, atol=1e-14)
    assert abs(line_state(line, t).trace - 1.0) < 1e-12


def test_line_state_pseudo_pure_point():
    line = StateLine(maximally_mixed((2, 2)), _proj_dm([1, 1], [2, 2]))
    out = line_state(line, -1.0 / 3.0)
    assert np.allclose(out.mat, np.diag([1 / 3, 1 / 3, 1 / 3, 0]), atol=1e-15)


def test_line_interpolation_stays_psd():
    rng = np.random.default_rng(32)
    line = StateLine(random_density(rng, 6, (2, 3)), random_density(rng, 6, (2, 3)))
    for t in np.linspace(0.0, 1.0, 7):
        assert is_psd(line_state(line, float(t)).mat)


def test_find_boundary_uniform_line():
    bp = find_boundary(StateLine(maximally_mixed((2, 2)), _proj_dm([1, 1], [2, 2])))
    assert abs(bp.t_b - (-1.0 / 3.0)) <= 1e-11
    assert bp.void_degree == 1
    assert np.allclose(bp.state.mat, np.diag([1 / 3, 1 / 3, 1 / 3, 0]), atol=1e-11)


def test_find_boundary_thermal_closed_form():
    for n, eta in ((2, 1 / 3), (3, 0.5)):
        lam = ((1 - eta) / 2) ** n
        bp = find_boundary(StateLine(thermal_n(eta, n), _proj_dm([1] * n, [2] * n)))
        assert abs(bp.t_b - (-lam / (1 - lam))) <= 1e-11


def test_find_boundary_two_qubit_thermal_condition():
    bp = find_boundary(StateLine(thermal_n(1 / 3, 2), _proj_dm([1, 1], [2, 2])))
    assert abs(bp.t_b - (-1.0 / 8.0)) <= 1e-11
    p = abs(bp.t_b)
    assert abs((1 - 1 / 3) ** 2 * (p + 1) - 4 * p) <= 1e-10


def test_find_boundary_immediate():
    with pytest.raises(ImmediateBoundaryError):
        find_boundary(StateLine(_proj_dm([0], [2]), _proj_dm([1], [2])))


def test_find_boundary_degenerate_line():
    rho = maximally_mixed((2, 2))
    with pytest.raises(DegenerateLineError):
        find_boundary(StateLine(rho, maximally_mixed((2, 2))))


def test_find_boundary_eigenprojector_closed_form_seeded():
    rng = np.random.default_rng(33)
    tol_t = 1e-12
    for _ in range(15):
        rho0 = random_density(rng, 5)
        sd = hermitian_eig(rho0.mat)
        k = int(rng.integers(0, 5))
        lam = float(sd.eigenvalues[k])
        rho1 = DensityMatrix.from_vector(sd.eigenvectors[:, k])
        bp = find_boundary(StateLine(rho0, rho1), tol_t)
        assert abs(bp.t_b - (-lam / (1 - lam))) <= 10 * tol_t


def test_find_boundary_two_sided_band():
    # at coarse tol_t the found point is within the zero band while a step of
    # 10*tol_t below it is measurably outside; eigenprojector directions keep
    # the crossing eigenvalue slope 1 - lambda close to 1
    rng = np.random.default_rng(34)
    tol_t = 5e-9
    for _ in range(5):
        rho0 = random_density(rng, 4, (2, 2))
        sd = hermitian_eig(rho0.mat)
        rho1 = DensityMatrix.from_vector(sd.eigenvectors[:, -1], (2, 2))
        line = StateLine(rho0, rho1)
        bp = find_boundary(line, tol_t)
        thresh = ZERO_EIG_TOL * max(1.0, float(np.linalg.norm(bp.state.mat)))
        assert abs(min_eigenvalue(bp.state.mat)) <= thresh
        below = line_state(line, bp.t_b - 10 * tol_t)
        assert min_eigenvalue(below.mat) < -thresh


def test_void_degree_counts():
    assert void_degree(np.diag([1 / 3, 1 / 3, 1 / 3, 0]).astype(complex)) == 1
    two = np.zeros((4, 4), dtype=complex)
    two[1, 1] = two[2, 2] = 0.5
    assert void_degree(two) == 2
    assert void_degree(_proj_dm([0, 1], [2, 2]).mat) == 3
    with pytest.raises(NotPSDError):
        void_degree(np.diag([1.2, -0.2]).astype(complex))


def test_epsilon_mix_endpoints_and_errors():
    rng = np.random.default_rng(35)
    a = random_density(rng, 4, (2, 2))
    b = random_density(rng, 4, (2, 2))
    assert np.array_equal(epsilon_mix(a, b, 0.0).mat, a.mat)
    assert np.allclose(epsilon_mix(a, b, 1.0).mat, b.mat, atol=1e-15)
    with pytest.raises(OutOfRangeError):
        epsilon_mix(a, b, 1.5)
    with pytest.raises(DimMismatchError):
        epsilon_mix(a, random_density(rng, 6, (2, 3)), 0.5)


def test_epsilon_mix_orthogonal_supports_max_distance():
    a = _proj_dm([0, 0], [2, 2])
    b = _proj_dm([1, 1], [2, 2])
    eps = 0.2
    assert abs(trace_distance(epsilon_mix(a, b, eps), a) - eps) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(
    eps=st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)
def test_epsilon_mix_distance_identity(eps, seed):
    rng = np.random.default_rng(seed)
    rho_b = random_density(rng, 4, (2, 2))
    rho = random_density(rng, 4, (2, 2))
    tau = epsilon_mix(rho_b, rho, eps)
    lhs = trace_distance(tau, rho_b)
    rhs = eps * trace_distance(rho, rho_b)
    assert abs(lhs - rhs) <= 1e-9
