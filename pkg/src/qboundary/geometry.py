"""Affine lines through state space: interpolation, extrapolation to the
PSD boundary, void-degree counting, and epsilon-neighborhood mixing."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    DegenerateLineError,
    DimMismatchError,
    ImmediateBoundaryError,
    NotPSDError,
    OutOfRangeError,
    UnboundedLineError,
)
from .states import DensityMatrix, HermitianOperator

SEARCH_FLOOR = -1.0e6
_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True, eq=False)
class StateLine:
    """Ordered pair of equal-dimension states defining rho_t = (1-t) rho0 + t rho1."""

    rho0: DensityMatrix
    rho1: DensityMatrix

    def __post_init__(self):
        if self.rho0.dims != self.rho1.dims:
            raise DimMismatchError(
                f"endpoint dims differ: {self.rho0.dims} vs {self.rho1.dims}"
            )


@dataclass(frozen=True, eq=False)
class BoundaryPoint:
    """Extrapolation boundary: largest |t|, t < 0, keeping rho_t a state."""

    t_b: float
    state: DensityMatrix
    void_degree: int


def line_state(line: StateLine, t: float) -> HermitianOperator:
    """(1-t) rho0 + t rho1: always Hermitian with trace 1, a state only for
    t inside the physical segment."""
    mat = (1.0 - t) * line.rho0.mat + t * line.rho1.mat
    return HermitianOperator(mat, line.rho0.dims)


def void_degree(op, tol: float = linalg.ZERO_EIG_TOL) -> int:
    """Number of zero eigenvalues, counted against tol * max(1, ||H||_F).

    The operator must be PSD (within the package PSD tolerance); the count is
    over total dimension d, so a pure state in dimension d is (d-1)-void.
    """
    mat = linalg.as_matrix(op)
    if not linalg.is_psd(mat):
        raise NotPSDError("void degree is defined for PSD operators only")
    w = linalg.eigenvalues(mat)
    thresh = tol * max(1.0, float(np.linalg.norm(mat)))
    return int(np.sum(np.abs(w) <= thresh))


def _min_eig_fn(line: StateLine):
    """lambda_min(t) evaluator plus an exactness flag; works on diagonal
    vectors when both endpoints are exactly diagonal (the multi-qubit
    families), where the evaluation is accurate to rounding."""
    m0, m1 = line.rho0.mat, line.rho1.mat
    if linalg._is_exactly_diagonal(m0) and linalg._is_exactly_diagonal(m1):
        d0 = np.diagonal(m0).real.copy()
        d1 = np.diagonal(m1).real.copy()
        return (lambda t: float(np.min((1.0 - t) * d0 + t * d1))), True
    return (lambda t: linalg.min_eigenvalue((1.0 - t) * m0 + t * m1)), False


def find_boundary(line: StateLine, tol_t: float = 1e-12) -> BoundaryPoint:
    """Largest-|t| extrapolation t_b < 0 with rho_t still PSD, by bisection
    on lambda_min(rho_t).

    The PSD predicate uses a noise floor calibrated at t=0 (not the coarse
    relative PSD tolerance), so closed-form boundaries as small as |t_b| ~
    1e-13 are resolved. Raises ImmediateBoundary when no t < 0 keeps the
    line PSD, and Unbounded when the line stays PSD down to the search floor.
    """
    m0, m1 = line.rho0.mat, line.rho1.mat
    scale = max(1.0, float(np.linalg.norm(m0)), float(np.linalg.norm(m1)))
    if float(np.linalg.norm(m0 - m1)) <= 1e-14 * scale:
        raise DegenerateLineError("rho0 and rho1 coincide; no direction to extrapolate")

    lam, exact = _min_eig_fn(line)
    # Exact-diagonal lines evaluate lambda_min to rounding, so a strict sign
    # test keeps t_b = 0 distinguishable from arbitrarily small boundaries;
    # the dense path needs a floor covering eigensolver noise at t = 0.
    floor = 0.0 if exact else max(0.0, -lam(0.0)) + 16.0 * _EPS * scale

    def psd(t: float) -> bool:
        return lam(t) >= -floor

    hi = 0.0  # best known PSD point
    lo = None  # best known non-PSD point
    t = -1.0
    while t >= SEARCH_FLOOR:
        if psd(t):
            hi = t
            t *= 2.0
        else:
            lo = t
            break
    if lo is None:
        raise UnboundedLineError(f"line still PSD at t={t / 2.0}; no boundary above floor")

    # Keep halving while hi is still exactly 0: a boundary smaller than tol_t
    # (the multi-qubit thermal lines reach |t_b| ~ 1e-13) must not be
    # mistaken for an immediate one. The bracket bottoms out at fp precision.
    while hi - lo > tol_t or hi == 0.0:
        mid = 0.5 * (hi + lo)
        if mid == hi or mid == lo:
            break
        if psd(mid):
            hi = mid
        else:
            lo = mid

    if hi == 0.0:
        raise ImmediateBoundaryError("rho_t leaves the state set for every t < 0")

    state = DensityMatrix((1.0 - hi) * m0 + hi * m1, line.rho0.dims)
    return BoundaryPoint(t_b=hi, state=state, void_degree=void_degree(state))


def epsilon_mix(rho_b: DensityMatrix, rho: DensityMatrix, eps: float) -> DensityMatrix:
    """tau_eps = (1-eps) rho_b + eps rho; satisfies
    delta(tau_eps, rho_b) = eps * delta(rho, rho_b)."""
    if not 0.0 <= eps <= 1.0:
        raise OutOfRangeError(f"eps {eps} outside [0, 1]")
    if rho_b.dims != rho.dims:
        raise DimMismatchError(f"dims differ: {rho_b.dims} vs {rho.dims}")
    return DensityMatrix((1.0 - eps) * rho_b.mat + eps * rho.mat, rho_b.dims)
