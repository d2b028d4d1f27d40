"""Dephasing channel, classicality-with-respect-to-A decision, depolarization
invariance, and the constructive epsilon-discordant neighborhood of any
classically-decomposed state.

The decision procedure is complete only when the A marginal is nondegenerate
(its eigenbasis is then the unique candidate basis); degenerate marginals
yield Indeterminate unless a caller-supplied basis certifies classicality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg
from .entanglement import (
    EntanglementCertificate,
    PTVerdict,
    distill_witness_theta,
    peres_check,
)
from .errors import (
    BadDirectionError,
    BadOrderingError,
    DimMismatchError,
    InvalidFormError,
    NotOrthonormalError,
    OutOfRangeError,
)
from .states import ClassicalForm, DensityMatrix, partial_trace

DEGENERACY_GAP = 1e-7


class ClassicalityStatus(enum.Enum):
    CLASSICAL_WRT_A = "ClassicalWrtA"
    DISCORDANT = "Discordant"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True, eq=False)
class ClassicalityVerdict:
    status: ClassicalityStatus
    basis: Optional[np.ndarray] = None  # A basis witnessing / tested, columns
    residual: float = 0.0  # ||D(rho) - rho||_F in the tested basis
    reason: str = ""

    @property
    def classical(self) -> bool:
        return self.status is ClassicalityStatus.CLASSICAL_WRT_A

    @property
    def discordant(self) -> bool:
        return self.status is ClassicalityStatus.DISCORDANT


def _check_basis(basis, da: int, tol: float) -> np.ndarray:
    b = np.asarray(basis, dtype=np.complex128)
    if b.shape != (da, da):
        raise NotOrthonormalError(f"basis must be {da}x{da} (columns = kets)")
    dev = float(np.linalg.norm(b.conj().T @ b - np.eye(da)))
    if dev > max(tol, 1e-8) * da:
        raise NotOrthonormalError(f"basis deviates from orthonormal by {dev:.3e}")
    return b


def dephase(rho: DensityMatrix, basis_a, tol: float = 1e-9) -> DensityMatrix:
    """Remove A-side coherences in the given basis:
    D(|i1><i2| (x) tau) = delta_{i1 i2} |i1><i2| (x) tau.

    Trace-preserving, PSD-preserving, idempotent.
    """
    if len(rho.dims) != 2:
        raise DimMismatchError(f"bipartite state required, got dims {rho.dims}")
    da, db = rho.dims
    b = _check_basis(basis_a, da, tol)
    u = np.kron(b.conj().T, np.eye(db, dtype=np.complex128))
    t = (u @ rho.mat @ u.conj().T).reshape(da, db, da, db)
    t *= np.eye(da)[:, None, :, None]
    out = u.conj().T @ t.reshape(da * db, da * db) @ u
    return DensityMatrix(out, rho.dims)


def is_classical_wrt_basis(rho: DensityMatrix, basis_a, tol: float = 1e-9) -> tuple[bool, float]:
    """True iff rho is invariant under dephasing in basis_a; also returns the
    residual ||D(rho) - rho||_F."""
    out = dephase(rho, basis_a, tol)
    residual = float(np.linalg.norm(out.mat - rho.mat))
    return residual <= tol * max(1.0, float(np.linalg.norm(rho.mat))), residual


def classify(
    rho: DensityMatrix,
    tol: float = 1e-9,
    candidate_basis=None,
    gap_tol: float = DEGENERACY_GAP,
) -> ClassicalityVerdict:
    """Decide membership in the classical-with-respect-to-A set.

    Nondegenerate A marginal: test its unique eigenbasis and return a
    decisive verdict. Degenerate (any spectral gap <= gap_tol): return
    Indeterminate, unless candidate_basis certifies classicality. Discordant
    is only ever issued in the nondegenerate case.
    """
    rho_a = partial_trace(rho, 0)
    sd = linalg.hermitian_eig(rho_a.mat)
    w = sd.eigenvalues
    min_gap = float(np.min(w[:-1] - w[1:])) if w.shape[0] > 1 else np.inf

    if min_gap > gap_tol:
        basis = np.asarray(sd.eigenvectors)
        ok, residual = is_classical_wrt_basis(rho, basis, tol)
        if ok:
            return ClassicalityVerdict(ClassicalityStatus.CLASSICAL_WRT_A, basis, residual)
        return ClassicalityVerdict(ClassicalityStatus.DISCORDANT, basis, residual)

    if candidate_basis is not None:
        basis = _check_basis(candidate_basis, rho.dims[0], tol)
        ok, residual = is_classical_wrt_basis(rho, basis, tol)
        if ok:
            return ClassicalityVerdict(ClassicalityStatus.CLASSICAL_WRT_A, basis, residual)
        return ClassicalityVerdict(
            ClassicalityStatus.INDETERMINATE,
            basis,
            residual,
            reason=(
                f"A marginal degenerate (min gap {min_gap:.2e} <= {gap_tol:.0e}) and "
                "the supplied basis does not certify classicality"
            ),
        )

    return ClassicalityVerdict(
        ClassicalityStatus.INDETERMINATE,
        None,
        0.0,
        reason=(
            f"A marginal degenerate (min gap {min_gap:.2e} <= {gap_tol:.0e}); "
            "supply a candidate basis to certify classicality"
        ),
    )


def depolarize_classify(
    rho: DensityMatrix, t: float, tol: float = 1e-9, candidate_basis=None
) -> ClassicalityVerdict:
    """Classify (1-t) I/d + t rho. For t > 0 this has the same verdict as rho
    whenever rho's verdict is decisive (the depolarized marginal keeps the
    eigenbasis, with gaps scaled by t)."""
    if not 0.0 < t <= 1.0:
        raise OutOfRangeError(f"t {t} outside (0, 1]")
    d = rho.d
    mixed = (1.0 - t) * np.eye(d, dtype=np.complex128) / d + t * rho.mat
    return classify(DensityMatrix(mixed, rho.dims), tol, candidate_basis)


def classical_form(rho: DensityMatrix, tol: float = 1e-9) -> ClassicalForm:
    """Recover an explicit classical decomposition from a raw state.

    Only available when the A marginal is nondegenerate; raises
    InvalidFormError when rho is not classical with respect to A.
    """
    verdict = classify(rho, tol)
    if verdict.status is ClassicalityStatus.INDETERMINATE:
        raise InvalidFormError("A marginal is degenerate; no unique eigenbasis to read off")
    if verdict.status is ClassicalityStatus.DISCORDANT:
        raise InvalidFormError("state is discordant; it has no classical decomposition")
    basis = verdict.basis
    da, db = rho.dims
    u = np.kron(np.asarray(basis).conj().T, np.eye(db, dtype=np.complex128))
    t = (u @ rho.mat @ u.conj().T).reshape(da, db, da, db)
    mu = np.zeros((da, db))
    unitaries = []
    for i in range(da):
        block = np.ascontiguousarray(t[i, :, i, :])
        sd = linalg.hermitian_eig(block, max(tol, linalg.HERM_TOL))
        mu[i, :] = np.maximum(sd.eigenvalues, 0.0)
        unitaries.append(np.asarray(sd.eigenvectors))
    mu /= mu.sum()
    return ClassicalForm(mu, basis, tuple(unitaries))


def epsilon_discordant(
    form: ClassicalForm, rho1: DensityMatrix, eps: float, tol: float = 1e-9
) -> tuple[DensityMatrix, Optional[EntanglementCertificate]]:
    """Discordant state within trace distance eps of the classical state
    realized by ``form``, certified constructively.

    Requires the normal form: standard A basis, mu00 minimal, U0 = I, and a
    direction rho1 with <00|rho1|00> = 0 and <10|rho1|01> != 0. Splitting
    off the maximally mixed component leaves a residual rho_v with zero
    (00, 00) and (10, 01) entries, so the normalized mixture of rho_v and
    rho1 is NPT by the same witness family as the entanglement pipeline;
    depolarization invariance then transfers "discordant" to the full
    mixture. eps = 0 returns the classical state itself with no certificate.
    """
    from .states import realize_classical  # local import to avoid cycle noise

    da, db = form.dims
    d = da * db
    if float(np.linalg.norm(form.basis_a - np.eye(da))) > max(tol, 1e-8):
        raise BadOrderingError("normal form requires the standard A basis")
    mu = np.asarray(form.mu)
    mu00 = float(mu[0, 0])
    if mu00 > float(mu.min()) + max(tol, 1e-12):
        raise BadOrderingError(f"mu00 = {mu00} is not the smallest weight ({mu.min()})")
    if float(np.linalg.norm(form.unitaries_b[0] - np.eye(db))) > max(tol, 1e-8):
        raise BadOrderingError("normal form requires U0 = I")

    rho = realize_classical(form)
    if eps == 0.0:
        return rho, None
    if not 0.0 < eps <= 1.0:
        raise OutOfRangeError(f"eps {eps} outside [0, 1]")
    if rho1.dims != (da, db):
        raise DimMismatchError(f"rho1 dims {rho1.dims} != form dims {(da, db)}")
    scale = max(1.0, float(np.linalg.norm(rho1.mat)))
    if abs(rho1.mat[0, 0]) > tol * scale:
        raise BadDirectionError("<00|rho1|00> must vanish")
    if abs(rho1.mat[db, 1]) <= tol * scale:
        raise BadDirectionError("<10|rho1|01> must be nonzero")

    z = 1.0 - d * mu00
    if z <= tol:
        # rho is maximally mixed; any placeholder residual works since z = 0
        rho_v = np.zeros((d, d), dtype=np.complex128)
        rho_v[0, 0] = 1.0
        z = 0.0
    else:
        mu_v = (mu - mu00) / z
        rho_v = realize_classical(ClassicalForm(mu_v, form.basis_a, form.unitaries_b)).mat

    raw = (1.0 - eps) * z * rho_v + eps * rho1.mat
    rho_hat = DensityMatrix(raw / np.trace(raw).real, (da, db))
    dw = distill_witness_theta(rho_hat, tol)
    if dw is None:
        raise BadDirectionError("witness family inapplicable to the normalized residual mixture")
    eff_tol = min(tol, abs(dw.value) / (4.0 * max(1.0, float(np.linalg.norm(rho_hat.mat)))))
    cert = peres_check(rho_hat, eff_tol)
    if cert.verdict is not PTVerdict.NPT:
        raise AssertionError("residual mixture failed the Peres test despite a negative witness")

    rho_eps = DensityMatrix((1.0 - eps) * rho.mat + eps * rho1.mat, (da, db))
    return rho_eps, cert
