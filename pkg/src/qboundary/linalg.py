"""Dense complex Hermitian linear algebra: deterministic eigendecomposition,
trace norm and distance, Kronecker products, PSD tests.

All certificate logic in the package funnels through :func:`hermitian_eig`,
a cyclic Jacobi solver with a fixed sweep order and a fixed eigenvector
phase convention, so repeated runs give identical output. Exactly diagonal
matrices (the multi-qubit diagonal families) bypass the solver and read
eigenvalues off the diagonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernel import jacobi_eigh
from .errors import (
    ConvergenceError,
    DimensionCapError,
    DimMismatchError,
    NotHermitianError,
)

# Default tolerances. Hermiticity/PSD checks are relative to max(1, ||H||_F);
# the zero-eigenvalue threshold feeds void counting.
HERM_TOL = 1e-9
PSD_TOL = 1e-9
ZERO_EIG_TOL = 1e-8
DENSE_CAP = 512

_JACOBI_CONV = 1e-12
_MAX_SWEEPS = 100


def as_matrix(op) -> np.ndarray:
    """Coerce an operator-like argument (ndarray, or anything with a ``.mat``
    attribute such as DensityMatrix) to a complex ndarray."""
    mat = getattr(op, "mat", op)
    arr = np.asarray(mat, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimMismatchError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def frobenius_norm(op) -> float:
    return float(np.linalg.norm(as_matrix(op)))


def _is_exactly_diagonal(mat: np.ndarray) -> bool:
    # no off-diagonal nonzeros iff the total nonzero count matches the
    # diagonal's; avoids materializing d x d temporaries on the big
    # multi-qubit diagonal families
    return np.count_nonzero(mat) == np.count_nonzero(np.diagonal(mat))


def _check_hermitian(mat: np.ndarray, tol: float) -> float:
    """Return ||mat||_F, raising NotHermitianError when mat is not Hermitian
    within tol * max(1, ||mat||_F)."""
    if _is_exactly_diagonal(mat):
        diag = np.diagonal(mat)
        norm = float(np.linalg.norm(diag))
        dev = 2.0 * float(np.linalg.norm(diag.imag))
    else:
        norm = float(np.linalg.norm(mat))
        dev = float(np.linalg.norm(mat - mat.conj().T))
    if dev > tol * max(1.0, norm):
        raise NotHermitianError(
            f"matrix deviates from Hermitian by {dev:.3e} (norm {norm:.3e})"
        )
    return norm


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues sorted descending with matching orthonormal eigenvector
    columns. Phases are fixed: in each column the first component of largest
    modulus is real and nonnegative."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def max_eigenvalue(self) -> float:
        return float(self.eigenvalues[0])

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _fix_phases(vecs: np.ndarray) -> np.ndarray:
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        k = int(np.argmax(np.abs(col)))
        z = col[k]
        az = abs(z)
        if az > 0.0:
            vecs[:, j] = col * (z.conjugate() / az)
            vecs[k, j] = vecs[k, j].real
    return vecs


def hermitian_eig(op, tol: float = HERM_TOL) -> SpectralDecomposition:
    """Deterministic eigendecomposition of a Hermitian matrix.

    Cyclic Jacobi with fixed sweep order; converges when the off-diagonal
    Frobenius mass falls below 1e-12 * ||H||_F. Diagonal input is returned
    directly. Dense (non-diagonal) input is capped at dimension 512.
    """
    mat = as_matrix(op)
    norm = _check_hermitian(mat, tol)
    d = mat.shape[0]

    if _is_exactly_diagonal(mat):
        w = np.diagonal(mat).real.copy()
        order = np.argsort(-w, kind="stable")
        vecs = np.eye(d, dtype=np.complex128)[:, order]
        return SpectralDecomposition(_readonly(w[order]), _readonly(vecs))

    if d > DENSE_CAP:
        raise DimensionCapError(f"dense eigensolve capped at d={DENSE_CAP}, got {d}")

    work = np.ascontiguousarray((mat + mat.conj().T) / 2.0)
    vecs = np.eye(d, dtype=np.complex128)
    sweeps = jacobi_eigh(work, vecs, norm, _JACOBI_CONV, _MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi sweeps exhausted at d={d}")
    w = np.diagonal(work).real.copy()
    order = np.argsort(-w, kind="stable")
    vecs = _fix_phases(np.ascontiguousarray(vecs[:, order]))
    return SpectralDecomposition(_readonly(w[order]), _readonly(vecs))


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def eigenvalues(op, tol: float = HERM_TOL) -> np.ndarray:
    return hermitian_eig(op, tol).eigenvalues


def min_eigenvalue(op, tol: float = HERM_TOL) -> float:
    return hermitian_eig(op, tol).min_eigenvalue


def trace_norm(op, tol: float = HERM_TOL) -> float:
    """Tr|H| = sum of |eigenvalues| for Hermitian H."""
    return float(np.sum(np.abs(eigenvalues(op, tol))))


def trace_distance(a, b, tol: float = HERM_TOL) -> float:
    """delta(rho, sigma) = 1/2 Tr|rho - sigma|."""
    ma = as_matrix(a)
    mb = as_matrix(b)
    if ma.shape != mb.shape:
        raise DimMismatchError(f"shape mismatch {ma.shape} vs {mb.shape}")
    return 0.5 * trace_norm(ma - mb, tol)


def tensor(a, b) -> np.ndarray:
    """Kronecker product in row-major (lexicographic) product-basis order:
    index of |i>|j> is i * dim_b + j."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def is_psd(op, tol: float = PSD_TOL) -> bool:
    """True iff the smallest eigenvalue is >= -tol * max(1, ||H||_F)."""
    mat = as_matrix(op)
    norm = float(np.linalg.norm(mat))
    return min_eigenvalue(mat, tol) >= -tol * max(1.0, norm)
