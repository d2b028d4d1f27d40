"""State types and constructors for the named families used throughout the
package, plus tensor-structure utilities (partial trace, subsystem swap).

Conventions: product-basis labels are ordered lexicographically, the index
of |i>|j> being i * dim_B + j; |+->-style kets always mean (|a> +- |b>)/sqrt(2)
with real coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from . import linalg
from .errors import (
    DimMismatchError,
    InvalidFormError,
    NotPSDError,
    OutOfRangeError,
)

TRACE_TOL = 1e-9


def _as_dims(dims, d: int) -> tuple[int, ...]:
    if dims is None:
        dims = (d,)
    dims = tuple(int(x) for x in dims)
    if any(x <= 0 for x in dims):
        raise DimMismatchError(f"subsystem dims must be positive, got {dims}")
    prod = 1
    for x in dims:
        prod *= x
    if prod != d:
        raise DimMismatchError(f"dims {dims} do not multiply to matrix dim {d}")
    return dims


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Square Hermitian matrix with declared subsystem dimensions.

    Trace and positivity are unconstrained; this is the carrier for partial
    transposes and extrapolated operators that may fail to be states.
    """

    mat: np.ndarray
    dims: tuple[int, ...] = field(default=None)  # type: ignore[assignment]
    tol: float = linalg.HERM_TOL

    def __post_init__(self):
        mat = linalg.as_matrix(self.mat)
        linalg._check_hermitian(mat, self.tol)
        if linalg._is_exactly_diagonal(mat):
            mat = np.ascontiguousarray(mat).copy()
            np.fill_diagonal(mat, np.diagonal(mat).real)
        else:
            mat = np.ascontiguousarray((mat + mat.conj().T) / 2.0)
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "dims", _as_dims(self.dims, mat.shape[0]))

    @property
    def d(self) -> int:
        return self.mat.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.mat).real)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.mat, dtype=dtype)


@dataclass(frozen=True, eq=False)
class DensityMatrix(HermitianOperator):
    """HermitianOperator further validated as trace-1 and PSD."""

    def __post_init__(self):
        super().__post_init__()
        tr = float(np.trace(self.mat).real)
        if abs(tr - 1.0) > max(TRACE_TOL, self.tol):
            raise OutOfRangeError(f"trace {tr!r} is not 1 within tolerance")
        if not linalg.is_psd(self.mat, max(linalg.PSD_TOL, self.tol)):
            raise NotPSDError("matrix has a negative eigenvalue beyond tolerance")

    @classmethod
    def from_vector(cls, vec, dims=None) -> "DensityMatrix":
        """Projector |v><v| onto a (normalized) pure state."""
        v = np.asarray(vec, dtype=np.complex128).ravel()
        n = np.linalg.norm(v)
        if n == 0:
            raise OutOfRangeError("zero vector has no projector")
        v = v / n
        return cls(np.outer(v, v.conj()), dims)


def basis_ket(labels, dims) -> np.ndarray:
    """Standard product-basis unit vector |l0 l1 ...> at lexicographic index."""
    labels = [int(x) for x in np.atleast_1d(labels)]
    dims = [int(x) for x in np.atleast_1d(dims)]
    if len(labels) != len(dims):
        raise DimMismatchError("one label per subsystem required")
    idx = 0
    for lab, dim in zip(labels, dims):
        if not 0 <= lab < dim:
            raise OutOfRangeError(f"label {lab} out of range for dim {dim}")
        idx = idx * dim + lab
    total = int(np.prod(dims))
    vec = np.zeros(total, dtype=np.complex128)
    vec[idx] = 1.0
    return vec


def _pm(a: int, b: int, dim: int, sign: int = +1) -> np.ndarray:
    """(|a> +- |b>)/sqrt(2) in one subsystem of dimension dim."""
    v = np.zeros(dim, dtype=np.complex128)
    v[a] = 1.0 / np.sqrt(2.0)
    v[b] = sign / np.sqrt(2.0)
    return v


def bell_state(kind: str) -> np.ndarray:
    """Bell kets: phi+- = (|00> +- |11>)/sqrt2, psi+- = (|01> +- |10>)/sqrt2."""
    s = {"phi+": (0, 3, +1), "phi-": (0, 3, -1), "psi+": (1, 2, +1), "psi-": (1, 2, -1)}
    if kind not in s:
        raise OutOfRangeError(f"unknown Bell state {kind!r}")
    i, j, sign = s[kind]
    v = np.zeros(4, dtype=np.complex128)
    v[i] = 1.0 / np.sqrt(2.0)
    v[j] = sign / np.sqrt(2.0)
    return v


def maximally_mixed(dims) -> DensityMatrix:
    dims = tuple(int(x) for x in np.atleast_1d(dims))
    d = int(np.prod(dims))
    return DensityMatrix(np.eye(d, dtype=np.complex128) / d, dims)


def werner(lam: float) -> DensityMatrix:
    """Bell-diagonal mixture (lam/3)(psi+ + phi+ + phi-) + (1-lam) psi-."""
    if not 0.0 <= lam <= 1.0:
        raise OutOfRangeError(f"lambda {lam} outside [0, 1]")
    mat = (1.0 - lam) * _proj(bell_state("psi-"))
    for kind in ("psi+", "phi+", "phi-"):
        mat = mat + (lam / 3.0) * _proj(bell_state(kind))
    return DensityMatrix(mat, (2, 2))


def _proj(v: np.ndarray) -> np.ndarray:
    return np.outer(v, v.conj())


def pseudo_pure(t: float, target: DensityMatrix) -> HermitianOperator:
    """(1-t) I/2^N + t * target on N qubits.

    Returned as a HermitianOperator: for t outside the physical window the
    result is a legitimate trace-1 Hermitian operator but not a state.
    """
    if any(x != 2 for x in target.dims):
        raise DimMismatchError(f"pseudo-pure family is qubit-only, got dims {target.dims}")
    d = target.d
    mat = (1.0 - t) * np.eye(d, dtype=np.complex128) / d + t * target.mat
    return HermitianOperator(mat, target.dims)


def thermal_qubit(eta: float) -> DensityMatrix:
    """diag((1+eta)/2, (1-eta)/2)."""
    if not 0.0 <= eta <= 1.0:
        raise OutOfRangeError(f"eta {eta} outside [0, 1]")
    return DensityMatrix(np.diag([(1.0 + eta) / 2.0, (1.0 - eta) / 2.0]).astype(np.complex128), (2,))


def thermal_weights(eta: float, n: int) -> np.ndarray:
    """Eigenvalues of the N-qubit thermal product state in lexicographic
    order: ((1+eta)/2)^(N-w) ((1-eta)/2)^w for Hamming weight w.

    Computed without materializing the 2^N x 2^N matrix, so it stays usable
    for N well beyond the dense cap.
    """
    if not 0.0 <= eta <= 1.0:
        raise OutOfRangeError(f"eta {eta} outside [0, 1]")
    if n < 1:
        raise OutOfRangeError("need at least one qubit")
    up = (1.0 + eta) / 2.0
    down = (1.0 - eta) / 2.0
    w = np.array([1.0], dtype=np.float64)
    for _ in range(n):
        w = np.concatenate([up * w, down * w])
    return w


def thermal_n(eta: float, n: int) -> DensityMatrix:
    """N-qubit thermal state as a dense diagonal matrix, dims (2,)*N."""
    return DensityMatrix(np.diag(thermal_weights(eta, n)).astype(np.complex128), (2,) * n)


def nine_qutrit_states() -> list[np.ndarray]:
    """The nine pairwise-orthogonal two-qutrit product vectors

        |1>|1>, |0>|0+1>, |0>|0-1>, |2>|1+2>, |2>|1-2>,
        |1+2>|0>, |1-2>|0>, |0+1>|2>, |0-1>|2>

    in dims (3, 3). They form an orthonormal basis of product states that
    cannot be distinguished by local operations.
    """
    e = [basis_ket([k], [3]) for k in range(3)]
    specs = [
        (e[1], e[1]),
        (e[0], _pm(0, 1, 3)),
        (e[0], _pm(0, 1, 3, -1)),
        (e[2], _pm(1, 2, 3)),
        (e[2], _pm(1, 2, 3, -1)),
        (_pm(1, 2, 3), e[0]),
        (_pm(1, 2, 3, -1), e[0]),
        (_pm(0, 1, 3), e[2]),
        (_pm(0, 1, 3, -1), e[2]),
    ]
    return [np.kron(a, b) for a, b in specs]


def nine_state_mixture() -> DensityMatrix:
    """Uniform mixture of the last eight of the nine qutrit product vectors:
    a separable two-qutrit state with |11> as exact zero eigenvector."""
    vecs = nine_qutrit_states()
    mat = np.zeros((9, 9), dtype=np.complex128)
    for v in vecs[1:]:
        mat += _proj(v) / 8.0
    return DensityMatrix(mat, (3, 3))


def zero_plus_mixture() -> DensityMatrix:
    """Equal mixture of |00><00| and |++><++| on two qubits.

    Entrywise equal to (1/8)[[5,1,1,1],[1,1,1,1],[1,1,1,1],[1,1,1,1]]; its
    eigenbasis contains entangled vectors although the state is separable.
    """
    v00 = basis_ket([0, 0], [2, 2])
    plus = _pm(0, 1, 2)
    vpp = np.kron(plus, plus)
    return DensityMatrix(0.5 * _proj(v00) + 0.5 * _proj(vpp), (2, 2))


def cq_state(lambdas) -> DensityMatrix:
    """Classical-quantum two-qubit state
    l0 |00><00| + l1 |01><01| + l2 |1+><1+| + l3 |1-><1->."""
    lam = np.asarray(lambdas, dtype=np.float64).ravel()
    if lam.shape != (4,) or np.any(lam < -1e-12) or abs(lam.sum() - 1.0) > 1e-9:
        raise OutOfRangeError("need 4 nonnegative weights summing to 1")
    one = basis_ket([1], [2])
    kets = [
        basis_ket([0, 0], [2, 2]),
        basis_ket([0, 1], [2, 2]),
        np.kron(one, _pm(0, 1, 2)),
        np.kron(one, _pm(0, 1, 2, -1)),
    ]
    mat = sum(w * _proj(k) for w, k in zip(lam, kets))
    return DensityMatrix(mat, (2, 2))


@dataclass(frozen=True, eq=False)
class ClassicalForm:
    """Explicit decomposition sum_ij mu_ij |i><i| (x) U_i |j><j| U_i^dag.

    ``basis_a`` holds the A-side kets |i> as columns; ``unitaries_b`` is one
    B-side unitary per A branch. Any state realized from such a form is
    classical with respect to A by construction.
    """

    mu: np.ndarray
    basis_a: np.ndarray = field(default=None)  # type: ignore[assignment]
    unitaries_b: tuple[np.ndarray, ...] = field(default=None)  # type: ignore[assignment]
    tol: float = 1e-9

    def __post_init__(self):
        mu = np.asarray(self.mu, dtype=np.float64)
        if mu.ndim != 2:
            raise InvalidFormError("mu must be a 2-D weight matrix")
        if np.any(mu < -self.tol):
            raise InvalidFormError("negative weight in mu")
        if abs(mu.sum() - 1.0) > max(1e-9, self.tol):
            raise InvalidFormError(f"weights sum to {mu.sum()!r}, expected 1")
        da, db = mu.shape
        basis_a = self.basis_a
        if basis_a is None:
            basis_a = np.eye(da, dtype=np.complex128)
        basis_a = np.asarray(basis_a, dtype=np.complex128)
        if basis_a.shape != (da, da):
            raise InvalidFormError(f"basis_a must be {da}x{da}")
        if np.linalg.norm(basis_a.conj().T @ basis_a - np.eye(da)) > max(1e-8, self.tol):
            raise InvalidFormError("basis_a columns are not orthonormal")
        us = self.unitaries_b
        if us is None:
            us = tuple(np.eye(db, dtype=np.complex128) for _ in range(da))
        us = tuple(np.asarray(u, dtype=np.complex128) for u in us)
        if len(us) != da or any(u.shape != (db, db) for u in us):
            raise InvalidFormError(f"need {da} unitaries of shape {db}x{db}")
        for u in us:
            if np.linalg.norm(u.conj().T @ u - np.eye(db)) > max(1e-8, self.tol):
                raise InvalidFormError("non-unitary B-side operator")
        mu = mu.copy()
        mu.setflags(write=False)
        basis_a = basis_a.copy()
        basis_a.setflags(write=False)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "basis_a", basis_a)
        object.__setattr__(self, "unitaries_b", us)

    @property
    def dims(self) -> tuple[int, int]:
        return self.mu.shape  # type: ignore[return-value]


def realize_classical(form: ClassicalForm) -> DensityMatrix:
    """Assemble the state described by a ClassicalForm."""
    da, db = form.dims
    mat = np.zeros((da * db, da * db), dtype=np.complex128)
    for i in range(da):
        pa = _proj(form.basis_a[:, i])
        u = form.unitaries_b[i]
        for j in range(db):
            if form.mu[i, j] == 0.0:
                continue
            pb = _proj(u[:, j])
            mat += form.mu[i, j] * np.kron(pa, pb)
    return DensityMatrix(mat, (da, db))


def _require_bipartite(rho) -> tuple[int, int]:
    if len(rho.dims) != 2:
        raise DimMismatchError(
            f"operation needs a bipartite state, got dims {rho.dims}; regroup with bipartition()"
        )
    return rho.dims  # type: ignore[return-value]


def partial_trace(rho, keep) -> DensityMatrix:
    """Marginal on one subsystem of a bipartite state; keep is 0/'A' or 1/'B'."""
    da, db = _require_bipartite(rho)
    keep = {0: 0, 1: 1, "A": 0, "B": 1, "a": 0, "b": 1}.get(keep, keep)
    if keep not in (0, 1):
        raise DimMismatchError(f"keep must identify one of two subsystems, got {keep!r}")
    t = np.asarray(rho.mat).reshape(da, db, da, db)
    red = np.einsum("ijkj->ik", t) if keep == 0 else np.einsum("ijil->jl", t)
    return DensityMatrix(red, (da if keep == 0 else db,))


def swap_subsystems(rho) -> DensityMatrix:
    """Exchange the two subsystems: <ji|rho'|lk> = <ij|rho|kl>."""
    da, db = _require_bipartite(rho)
    t = np.asarray(rho.mat).reshape(da, db, da, db)
    return DensityMatrix(t.transpose(1, 0, 3, 2).reshape(da * db, da * db), (db, da))


def bipartition(op, cut: int = 1):
    """Regroup an n-partite operator into two factors: subsystems [0, cut)
    versus [cut, n). Lexicographic indexing makes this a pure relabeling."""
    if not 1 <= cut < len(op.dims):
        raise DimMismatchError(f"cut {cut} invalid for dims {op.dims}")
    da = int(np.prod(op.dims[:cut]))
    db = int(np.prod(op.dims[cut:]))
    return type(op)(op.mat, (da, db))


def guess_square_dims(d: int) -> tuple[int, ...]:
    """(sqrt(d), sqrt(d)) when d is a perfect square, else (d,)."""
    r = isqrt(d)
    return (r, r) if r * r == d else (d,)
