import numpy as np
import pytest

from qboundary.states import DensityMatrix


def random_hermitian(rng, d):
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (a + a.conj().T) / 2.0


def random_density(rng, d, dims=None, rank=None):
    g = rng.normal(size=(d, rank or d)) + 1j * rng.normal(size=(d, rank or d))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real, dims)


def random_unitary(rng, d):
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def _kernel_params():
    from qboundary import _jacobi_py

    params = [pytest.param(_jacobi_py, id="pure")]
    try:
        from qboundary import _jacobi

        params.insert(0, pytest.param(_jacobi, id="compiled"))
    except ImportError:
        pass
    return params


@pytest.fixture(params=_kernel_params())
def kernel(request):
    return request.param
