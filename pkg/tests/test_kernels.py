"""Both Jacobi kernels (compiled and pure) against the numpy oracle."""

import numpy as np

from conftest import random_hermitian
from qboundary import _kernel


def _run(kernel, h):
    d = h.shape[0]
    work = np.ascontiguousarray(h.astype(np.complex128))
    vecs = np.eye(d, dtype=np.complex128)
    sweeps = kernel.jacobi_eigh(work, vecs, float(np.linalg.norm(h)), 1e-12, 100)
    assert sweeps >= 0
    return np.diagonal(work).real, vecs


def test_kernel_matches_numpy_eigvalsh(kernel):
    rng = np.random.default_rng(101)
    for d in (2, 3, 5, 8, 16):
        h = random_hermitian(rng, d)
        w, _ = _run(kernel, h)
        ref = np.linalg.eigvalsh(h)
        assert np.allclose(np.sort(w), ref, atol=1e-11)


def test_kernel_diagonalizes_and_preserves_vectors(kernel):
    rng = np.random.default_rng(202)
    h = random_hermitian(rng, 12)
    w, v = _run(kernel, h)
    assert np.allclose(v.conj().T @ v, np.eye(12), atol=1e-12)
    assert np.allclose((v * w) @ v.conj().T, h, atol=1e-11)


def test_kernel_deterministic(kernel):
    rng = np.random.default_rng(303)
    h = random_hermitian(rng, 9)
    w1, v1 = _run(kernel, h)
    w2, v2 = _run(kernel, h)
    assert np.array_equal(w1, w2)
    assert np.array_equal(v1, v2)


def test_kernel_trivial_sizes(kernel):
    w, v = _run(kernel, np.zeros((3, 3), dtype=complex))
    assert np.array_equal(w, np.zeros(3))
    one = np.array([[2.5]], dtype=complex)
    w, _ = _run(kernel, one)
    assert w[0] == 2.5


def test_kernels_agree_with_each_other():
    import qboundary._jacobi_py as pure

    try:
        import qboundary._jacobi as compiled
    except ImportError:
        return
    rng = np.random.default_rng(404)
    for d in (4, 7, 13):
        h = random_hermitian(rng, d)
        wp, _ = _run(pure, h)
        wc, _ = _run(compiled, h)
        assert np.allclose(np.sort(wp), np.sort(wc), atol=1e-12)


def test_selected_kernel_exposed():
    assert _kernel.KERNEL_NAME in ("compiled", "pure-python")
    assert callable(_kernel.jacobi_eigh)
