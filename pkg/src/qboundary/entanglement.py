"""Partial transposition, the Peres test, zero-diagonal and single-copy
distillability witnesses, canonical local frames, and the constructive
epsilon-entangled neighborhoods of separable void states.

Verdict semantics: NPT certifies entanglement; PPT means "not certified
entangled" and never "separable" (bound entanglement is invisible to this
test). On two-qubit and qubit-qutrit systems NPT additionally coincides
with distillable entanglement.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg
from .errors import (
    DimMismatchError,
    NotProductVectorError,
    NotZeroEigenvectorError,
    OutOfRangeError,
)
from .states import DensityMatrix, HermitianOperator, basis_ket


class PTVerdict(enum.Enum):
    PPT = "PPT"
    NPT = "NPT"


class GBRegion(enum.Enum):
    """Gurvits-Barnum classification around the maximally mixed state.

    INSIDE_TRACE_BALL (Tr|rho - I/d| < 1/d) implies separable and not
    boundary separable; INSIDE_FROBENIUS_BALL (||rho - I/d||_2 < 1/d) implies
    separable; OUTSIDE carries no information. The trace ball is contained
    in the Frobenius ball, so the strongest membership is reported.
    """

    INSIDE_TRACE_BALL = "InsideTraceBall"
    INSIDE_FROBENIUS_BALL = "InsideFrobeniusBall"
    OUTSIDE = "Outside"


@dataclass(frozen=True, eq=False)
class ZeroDiagonalWitness:
    """Indices (i, j) with H_ii = 0 but H_ij != 0: certifies H not PSD."""

    row: int
    col: int
    value: complex


@dataclass(frozen=True, eq=False)
class DistillationWitness:
    """Single-copy witness Psi = |e1 f1> + |e2 f2| with <Psi|PT(rho)|Psi> < 0.

    e1 _|_ e2 and f1 _|_ f2 (unnormalized), so a negative value certifies the
    state entangled and distillable.
    """

    e1: np.ndarray
    f1: np.ndarray
    e2: np.ndarray
    f2: np.ndarray
    theta: float
    phi: float
    value: float

    @property
    def psi(self) -> np.ndarray:
        return np.kron(self.e1, self.f1) + np.kron(self.e2, self.f2)


@dataclass(frozen=True, eq=False)
class EntanglementCertificate:
    verdict: PTVerdict
    min_pt_eigenvalue: float
    witness_vector: np.ndarray
    zero_diag_witness: Optional[ZeroDiagonalWitness] = None
    distill_witness: Optional[DistillationWitness] = None
    tol: float = linalg.PSD_TOL

    @property
    def entangled(self) -> bool:
        return self.verdict is PTVerdict.NPT


def _resolve_bipartite(op, dims) -> tuple[np.ndarray, tuple[int, int]]:
    mat = linalg.as_matrix(op)
    if dims is None:
        dims = getattr(op, "dims", None)
    if dims is None or len(dims) != 2:
        raise DimMismatchError(f"bipartite dims required, got {dims}")
    da, db = int(dims[0]), int(dims[1])
    if da * db != mat.shape[0]:
        raise DimMismatchError(f"dims {dims} do not match matrix dim {mat.shape[0]}")
    return mat, (da, db)


def partial_transpose(op, dims=None) -> HermitianOperator:
    """Transpose on the A factor: <i1 j1|PT(L)|i2 j2> = <i2 j1|L|i1 j2>.

    Hermiticity, trace and the full eigenvalue-sign pattern are basis-stable;
    PT is an involution.
    """
    mat, (da, db) = _resolve_bipartite(op, dims)
    pt = mat.reshape(da, db, da, db).transpose(2, 1, 0, 3).reshape(da * db, da * db)
    return HermitianOperator(pt, (da, db))


def zero_diagonal_witness(op, tol: float = linalg.PSD_TOL) -> Optional[ZeroDiagonalWitness]:
    """Smallest lexicographic (i, j) with |H_ii| <= tol and |H_ij| > tol
    (thresholds relative to max(1, ||H||_F)), or None.

    A hit proves H is not PSD: a PSD operator with a vanishing diagonal
    entry has the whole row and column vanish.
    """
    mat = linalg.as_matrix(op)
    linalg._check_hermitian(mat, max(tol, linalg.HERM_TOL))
    thresh = tol * max(1.0, float(np.linalg.norm(mat)))
    d = mat.shape[0]
    for i in range(d):
        if abs(mat[i, i]) <= thresh:
            for j in range(d):
                if abs(mat[i, j]) > thresh:
                    return ZeroDiagonalWitness(row=i, col=j, value=complex(mat[i, j]))
    return None


def peres_check(rho, tol: float = linalg.PSD_TOL, dims=None) -> EntanglementCertificate:
    """Peres criterion: NPT iff lambda_min(PT(rho)) < -tol * max(1, ||PT||_F).

    The witness vector is the eigenvector of the most negative PT eigenvalue.
    On NPT verdicts the cheap optional witnesses (zero-diagonal pattern,
    closed-form distillation witness) are attached when they apply.
    """
    mat, (da, db) = _resolve_bipartite(rho, dims)
    pt = partial_transpose(mat, (da, db))
    sd = linalg.hermitian_eig(pt.mat)
    lam_min = sd.min_eigenvalue
    vec = np.asarray(sd.eigenvectors[:, -1]).copy()
    cutoff = tol * max(1.0, float(np.linalg.norm(pt.mat)))
    if lam_min < -cutoff:
        zdw = zero_diagonal_witness(pt.mat, tol)
        dw = distill_witness_theta(mat, tol, dims=(da, db))
        return EntanglementCertificate(PTVerdict.NPT, lam_min, vec, zdw, dw, tol)
    return EntanglementCertificate(PTVerdict.PPT, lam_min, vec, None, None, tol)


def distill_witness_theta(rho, tol: float = linalg.PSD_TOL, dims=None) -> Optional[DistillationWitness]:
    """Closed-form single-copy distillation witness for states in the
    canonical frame (<00|rho|00> ~ 0).

    With a = <11|PT(rho)|11> and b e^(i phi) = <00|PT(rho)|11> (= <10|rho|01>),
    the family Psi_theta = sin(theta)|11> - e^(i phi) cos(theta)|00> has
    <Psi|PT(rho)|Psi> = a sin^2(theta) - 2 b sin(theta) cos(theta), minimized
    at theta* = atan2(2b, a)/2 with value a/2 - sqrt(a^2/4 + b^2) < 0 for any
    b > 0. Returns None when b <= tol or the state is not in the canonical
    frame (the closed form would no longer match the quadratic form).
    """
    mat, (da, db) = _resolve_bipartite(rho, dims)
    if da < 2 or db < 2:
        raise DimMismatchError(f"need both subsystem dims >= 2, got {(da, db)}")
    scale = max(1.0, float(np.linalg.norm(mat)))
    c00 = mat[0, 0].real
    if abs(c00) > tol * scale:
        return None
    bz = complex(mat[db, 1])  # <10|rho|01>
    b = abs(bz)
    if b <= tol * scale:
        return None
    a = mat[db + 1, db + 1].real  # <11|rho|11>
    phi = math.atan2(bz.imag, bz.real)
    theta = 0.5 * math.atan2(2.0 * b, a)
    # rationalized a/2 - sqrt(a^2/4 + b^2): immune to cancellation at b << a
    value = -(b * b) / (a / 2.0 + math.sqrt(a * a / 4.0 + b * b))
    e1 = math.sin(theta) * basis_ket([1], [da])
    f1 = basis_ket([1], [db])
    e2 = -np.exp(1j * phi) * math.cos(theta) * basis_ket([0], [da])
    f2 = basis_ket([0], [db])
    return DistillationWitness(e1=e1, f1=f1, e2=e2, f2=f2, theta=theta, phi=phi, value=value)


def _complete_basis(first: np.ndarray, tol: float = 1e-6) -> np.ndarray:
    """Unitary whose rows start with first^dagger, completed over standard
    basis vectors in index order (candidates within tol of the span are
    skipped); deterministic by construction."""
    d = first.shape[0]
    rows = [first / np.linalg.norm(first)]
    for k in range(d):
        if len(rows) == d:
            break
        w = np.zeros(d, dtype=np.complex128)
        w[k] = 1.0
        for _ in range(2):  # re-orthogonalize once for stability
            for r in rows:
                w = w - r * np.vdot(r, w)
        nrm = np.linalg.norm(w)
        if nrm > tol:
            rows.append(w / nrm)
    if len(rows) != d:
        raise NotProductVectorError("basis completion failed")
    return np.array([r.conj() for r in rows], dtype=np.complex128)


def _split_product_vector(vec: np.ndarray, da: int, db: int, tol: float) -> tuple[np.ndarray, np.ndarray]:
    m = vec.reshape(da, db)
    g = m.conj().T @ m
    sd = linalg.hermitian_eig(g, max(tol, linalg.HERM_TOL))
    lam = sd.eigenvalues
    if lam.shape[0] > 1 and lam[1] > tol * max(1.0, lam[0]):
        raise NotProductVectorError(
            f"vector has Schmidt rank > 1 (second singular value^2 = {lam[1]:.3e})"
        )
    v = np.asarray(sd.eigenvectors[:, 0])
    psi0 = v.conj()
    phi0 = m @ v
    return phi0 / np.linalg.norm(phi0), psi0 / np.linalg.norm(psi0)


@dataclass(frozen=True, eq=False)
class CanonicalFrame:
    """Local unitaries (u_a, u_b) mapping the zero product vector to |00>,
    and the rotated state with <00|state|00> = 0."""

    u_a: np.ndarray
    u_b: np.ndarray
    state: DensityMatrix


def canonical_frame(rho: DensityMatrix, zero_vec, tol: float = linalg.PSD_TOL) -> CanonicalFrame:
    """Rotate a state with product zero eigenvector |phi0>|psi0> so that the
    kernel vector becomes |00>."""
    mat, (da, db) = _resolve_bipartite(rho, None)
    vec = np.asarray(zero_vec, dtype=np.complex128).ravel()
    if vec.shape[0] != da * db:
        raise DimMismatchError(f"vector length {vec.shape[0]} != {da * db}")
    nrm = float(np.linalg.norm(vec))
    if abs(nrm - 1.0) > 1e-6:
        raise OutOfRangeError(f"zero_vec must be normalized, got norm {nrm}")
    phi0, psi0 = _split_product_vector(vec, da, db, max(tol, 1e-9))
    scale = max(1.0, float(np.linalg.norm(mat)))
    resid = float(np.linalg.norm(mat @ vec))
    if resid > tol * scale:
        raise NotZeroEigenvectorError(f"||rho v|| = {resid:.3e} exceeds tolerance")
    u_a = _complete_basis(phi0)
    u_b = _complete_basis(psi0)
    u = np.kron(u_a, u_b)
    rotated = u @ mat @ u.conj().T
    return CanonicalFrame(u_a, u_b, DensityMatrix(rotated, (da, db)))


def _embedded_flip_projector(da: int, db: int) -> np.ndarray:
    """Projector onto (|01> + |10>)/sqrt(2) embedded in the top 2x2 blocks:
    <00|rho1|00> = 0 and <10|rho1|01> = 1/2."""
    v = (basis_ket([0, 1], [da, db]) + basis_ket([1, 0], [da, db])) / np.sqrt(2.0)
    return np.outer(v, v.conj())


def epsilon_entangled_from_void(
    rho_b: DensityMatrix, zero_vec, eps: float, tol: float = linalg.PSD_TOL
) -> tuple[DensityMatrix, EntanglementCertificate]:
    """Entangled, distillable state within trace distance eps of a separable
    state carrying a product zero eigenvector.

    Rotates to the canonical frame, mixes in the embedded flip projector
    (which meets the witness hypotheses in any dims >= 2x2), certifies the
    mixture NPT with a distillation witness, and rotates everything back.
    The Peres cutoff is tightened to a quarter of the guaranteed witness
    value so the NPT verdict stays sound down to eps ~ 1e-6, where the most
    negative PT eigenvalue scales like eps^2.
    """
    if not 0.0 < eps <= 1.0:
        raise OutOfRangeError(f"eps {eps} outside (0, 1]")
    frame = canonical_frame(rho_b, zero_vec, tol)
    da, db = rho_b.dims
    rho1 = _embedded_flip_projector(da, db)
    tau_rot = (1.0 - eps) * frame.state.mat + eps * rho1

    dw_rot = distill_witness_theta(tau_rot, tol, dims=(da, db))
    if dw_rot is None:
        raise NotZeroEigenvectorError("canonical frame lost the zero diagonal entry")
    pt_norm = max(1.0, float(np.linalg.norm(tau_rot)))  # ||PT|| = ||rho|| entrywise
    eff_tol = min(tol, abs(dw_rot.value) / (4.0 * pt_norm))
    cert_rot = peres_check(tau_rot, eff_tol, dims=(da, db))
    if cert_rot.verdict is not PTVerdict.NPT:
        raise AssertionError(
            "witness guarantees lambda_min <= "
            f"{dw_rot.value:.3e} yet Peres returned PPT at tol {eff_tol:.3e}"
        )

    u = np.kron(frame.u_a, frame.u_b)
    tau = u.conj().T @ tau_rot @ u
    # PT(U^dag X U) = K PT(X) K^dag with K = u_a^T (x) u_b^dag
    k = np.kron(frame.u_a.T, frame.u_b.conj().T)
    witness_back = k @ cert_rot.witness_vector
    dw = DistillationWitness(
        e1=frame.u_a.T @ dw_rot.e1,
        f1=frame.u_b.conj().T @ dw_rot.f1,
        e2=frame.u_a.T @ dw_rot.e2,
        f2=frame.u_b.conj().T @ dw_rot.f2,
        theta=dw_rot.theta,
        phi=dw_rot.phi,
        value=dw_rot.value,
    )
    tau_dm = DensityMatrix(tau, (da, db))
    zdw = zero_diagonal_witness(partial_transpose(tau_dm).mat, eff_tol)
    cert = EntanglementCertificate(
        verdict=cert_rot.verdict,
        min_pt_eigenvalue=cert_rot.min_pt_eigenvalue,
        witness_vector=witness_back,
        zero_diag_witness=zdw,
        distill_witness=dw,
        tol=eff_tol,
    )
    return tau_dm, cert


def gurvits_barnum(rho: DensityMatrix) -> GBRegion:
    """Classify a bipartite state against the separable balls around I/d."""
    mat, (da, db) = _resolve_bipartite(rho, None)
    d = da * db
    delta = mat - np.eye(d, dtype=np.complex128) / d
    fro = float(np.linalg.norm(delta))
    trn = linalg.trace_norm(delta)
    if trn < 1.0 / d:
        return GBRegion.INSIDE_TRACE_BALL
    if fro < 1.0 / d:
        return GBRegion.INSIDE_FROBENIUS_BALL
    return GBRegion.OUTSIDE
