"""Line-delimited JSON files for operators.

Layout: one header object ``{"dims": [...], "metadata": {...}}`` followed by
one JSON row per matrix row, entries as [re, im] pairs. Floats are written
with 17 significant decimal digits, so a save/load round trip is bit-exact
at double precision and files stay diff-able.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from . import linalg
from .errors import InvariantViolationError, NotOrthonormalError, ParseError
from .states import DensityMatrix, HermitianOperator

TRACE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class StateFile:
    dims: tuple[int, ...]
    matrix: np.ndarray
    metadata: Optional[dict] = None


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _matrix_lines(mat: np.ndarray):
    for row in mat:
        yield "[" + ",".join(f"[{_fmt(z.real)},{_fmt(z.imag)}]" for z in row) + "]"


def save_state(path, op, metadata: Optional[dict] = None) -> None:
    """Write an operator (anything with .mat/.dims, or a bare ndarray)."""
    mat = linalg.as_matrix(op)
    dims = tuple(getattr(op, "dims", None) or (mat.shape[0],))
    header: dict = {"dims": list(int(x) for x in dims)}
    if metadata is not None:
        header["metadata"] = metadata
    lines = [json.dumps(header, sort_keys=False)]
    lines.extend(_matrix_lines(mat))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_state_file(text: str) -> StateFile:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty state file")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad header line: {exc}") from exc
    if not isinstance(header, dict) or "dims" not in header:
        raise ParseError("header must be an object with a 'dims' field")
    dims = header["dims"]
    if (
        not isinstance(dims, list)
        or not dims
        or not all(isinstance(x, int) and x > 0 for x in dims)
    ):
        raise ParseError(f"'dims' must be a list of positive integers, got {dims!r}")
    d = 1
    for x in dims:
        d *= x
    rows = lines[1:]
    if len(rows) != d:
        raise ParseError(f"expected {d} matrix rows, found {len(rows)}")
    mat = np.empty((d, d), dtype=np.complex128)
    for i, ln in enumerate(rows):
        try:
            row = json.loads(ln)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad matrix row {i}: {exc}") from exc
        if not isinstance(row, list) or len(row) != d:
            raise ParseError(f"matrix row {i} must hold {d} entries")
        for j, pair in enumerate(row):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, (int, float)) for v in pair)
            ):
                raise ParseError(f"entry ({i},{j}) must be an [re, im] pair")
            mat[i, j] = complex(pair[0], pair[1])
    metadata = header.get("metadata")
    if metadata is not None and not isinstance(metadata, dict):
        raise ParseError("'metadata' must be an object when present")
    return StateFile(dims=tuple(dims), matrix=mat, metadata=metadata)


def load_state(path, raw: bool = False, tol: float = TRACE_TOL):
    """Load a state file.

    Default mode requires a Hermitian trace-1 matrix and returns a
    DensityMatrix when it is also PSD, otherwise a HermitianOperator (so
    extrapolated operators and partial transposes round-trip). ``raw`` drops
    the trace requirement.
    """
    sf = parse_state_file(Path(path).read_text(encoding="utf-8"))
    mat = sf.matrix
    if not np.all(np.isfinite(mat)):
        raise InvariantViolationError("matrix has non-finite entries")
    norm = float(np.linalg.norm(mat))
    if float(np.linalg.norm(mat - mat.conj().T)) > max(tol, linalg.HERM_TOL) * max(1.0, norm):
        raise InvariantViolationError("matrix is not Hermitian within tolerance")
    if not raw:
        tr = float(np.trace(mat).real)
        if abs(tr - 1.0) > max(tol, TRACE_TOL):
            raise InvariantViolationError(f"trace {tr!r} is not 1 (use raw mode for general operators)")
    if linalg.is_psd(mat) and abs(float(np.trace(mat).real) - 1.0) <= max(tol, TRACE_TOL):
        return DensityMatrix(mat, sf.dims)
    return HermitianOperator(mat, sf.dims)


def save_basis(path, basis, metadata: Optional[dict] = None) -> None:
    """Write an orthonormal basis (columns = kets) in the same row format."""
    b = np.asarray(basis, dtype=np.complex128)
    header: dict = {"dims": [int(b.shape[0])]}
    if metadata is not None:
        header["metadata"] = metadata
    lines = [json.dumps(header, sort_keys=False)]
    lines.extend(_matrix_lines(b))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_basis(path, tol: float = 1e-8) -> np.ndarray:
    """Load a basis file; validates column orthonormality."""
    sf = parse_state_file(Path(path).read_text(encoding="utf-8"))
    b = sf.matrix
    d = b.shape[0]
    if float(np.linalg.norm(b.conj().T @ b - np.eye(d))) > tol * d:
        raise NotOrthonormalError("basis columns are not orthonormal")
    return b
