# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled cyclic Jacobi kernel for complex Hermitian matrices.

Twin of ``qboundary._jacobi_py``: identical rotation sequence, convergence
rule and in-place contract; this one runs the inner loops in C.
"""

from libc.math cimport sqrt

import numpy as np

COMPILED = True


def jacobi_eigh(double complex[:, ::1] h, double complex[:, ::1] v,
                double norm_h, double conv_tol, int max_sweeps):
    """Diagonalize Hermitian ``h`` in place; ``v`` accumulates eigenvectors.

    Returns the number of sweeps used, or -1 if ``max_sweeps`` was hit.
    """
    cdef Py_ssize_t d = h.shape[0]
    cdef Py_ssize_t p, q, r
    cdef int sweep
    cdef double target, skip, off2, ab, app, aqq, tau, t, c, s, re, im
    cdef double complex apq, ph, phc, csp, ccp, sph, cph, hp, hq, vp, vq

    if d < 2 or norm_h == 0.0:
        return 0
    target = conv_tol * norm_h
    skip = target / (2.0 * d)

    for sweep in range(max_sweeps):
        off2 = 0.0
        for p in range(d):
            for q in range(d):
                if p != q:
                    re = h[p, q].real
                    im = h[p, q].imag
                    off2 += re * re + im * im
        if sqrt(off2) <= target:
            return sweep
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = h[p, q]
                re = apq.real
                im = apq.imag
                ab = sqrt(re * re + im * im)
                if ab <= skip:
                    continue
                app = h[p, p].real
                aqq = h[q, q].real
                ph = apq / ab
                tau = (aqq - app) / (2.0 * ab)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                phc = ph.conjugate()
                csp = s * phc
                ccp = c * phc
                sph = s * ph
                cph = c * ph
                for r in range(d):
                    hp = h[r, p]
                    hq = h[r, q]
                    h[r, p] = c * hp - csp * hq
                    h[r, q] = s * hp + ccp * hq
                for r in range(d):
                    hp = h[p, r]
                    hq = h[q, r]
                    h[p, r] = c * hp - sph * hq
                    h[q, r] = s * hp + cph * hq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real
                for r in range(d):
                    vp = v[r, p]
                    vq = v[r, q]
                    v[r, p] = c * vp - csp * vq
                    v[r, q] = s * vp + ccp * vq
    off2 = 0.0
    for p in range(d):
        for q in range(d):
            if p != q:
                re = h[p, q].real
                im = h[p, q].imag
                off2 += re * re + im * im
    if sqrt(off2) <= target:
        return max_sweeps
    return -1
