"""Eigensolver kernel selection.

Prefers the compiled extension; falls back to the numpy kernel when the
extension is absent or when ``QBOUNDARY_PURE`` is set in the environment.
Both kernels implement the same rotation sequence, so results agree to
rounding either way.
"""

import os

if os.environ.get("QBOUNDARY_PURE"):
    from . import _jacobi_py as _impl
else:
    try:
        from . import _jacobi as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _jacobi_py as _impl

jacobi_eigh = _impl.jacobi_eigh
USING_COMPILED = bool(_impl.COMPILED)
KERNEL_NAME = "compiled" if USING_COMPILED else "pure-python"
