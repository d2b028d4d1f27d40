"""Pure-numpy cyclic Jacobi kernel for complex Hermitian matrices.

Fallback twin of the compiled extension ``qboundary._jacobi``: same rotation
sequence, same convergence rule, same in-place contract. Row/column updates
are vectorized so the fallback stays usable, but the compiled kernel is an
order of magnitude faster on the test-suite workload.
"""

import math

import numpy as np

COMPILED = False


def _offdiag_norm(h):
    # Summing off-diagonal squares directly; subtracting diagonal mass from
    # the total cancels catastrophically near convergence.
    od = h.copy()
    np.fill_diagonal(od, 0.0)
    return math.sqrt(float(np.sum(od.real**2 + od.imag**2)))


def jacobi_eigh(h, v, norm_h, conv_tol, max_sweeps):
    """Diagonalize Hermitian ``h`` in place by cyclic Jacobi rotations.

    ``h`` is driven toward a real diagonal; ``v`` (entered as the identity)
    accumulates the rotations so that columns of ``v`` are eigenvectors.
    Sweeps run in fixed row-major pair order (p<q). Converged when the
    off-diagonal Frobenius mass drops below ``conv_tol * norm_h``.

    Returns the number of sweeps used, or -1 if ``max_sweeps`` was hit.
    """
    d = h.shape[0]
    if d < 2 or norm_h == 0.0:
        return 0
    target = conv_tol * norm_h
    # Elements below `skip` are left alone: even if all d^2 of them survive,
    # their total off-diagonal mass stays under target/2.
    skip = target / (2.0 * d)
    for sweep in range(max_sweeps):
        if _offdiag_norm(h) <= target:
            return sweep
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = h[p, q]
                ab = abs(apq)
                if ab <= skip:
                    continue
                app = h[p, p].real
                aqq = h[q, q].real
                ph = apq / ab
                tau = (aqq - app) / (2.0 * ab)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                phc = ph.conjugate()
                csp = s * phc
                ccp = c * phc
                sph = s * ph
                cph = c * ph
                # columns: H <- H U, with U = [[c, s], [-s*conj(ph), c*conj(ph)]]
                hp = h[:, p].copy()
                hq = h[:, q].copy()
                h[:, p] = c * hp - csp * hq
                h[:, q] = s * hp + ccp * hq
                # rows: H <- U^dagger H
                hp = h[p, :].copy()
                hq = h[q, :].copy()
                h[p, :] = c * hp - sph * hq
                h[q, :] = s * hp + cph * hq
                # keep the Hermitian structure exact where it is known
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - csp * vq
                v[:, q] = s * vp + ccp * vq
    if _offdiag_norm(h) <= target:
        return max_sweeps
    return -1
