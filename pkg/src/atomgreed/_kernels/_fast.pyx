# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot inner loops (see _pure.py for contracts)."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, sin, sqrt

BACKEND_NAME = "cython"


def subgrad_minimize(A, V0, int iters):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A_ = np.ascontiguousarray(A, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] V = np.array(V0, dtype=np.float64, copy=True, order="F")
    cdef int n = A_.shape[0]
    cdef int m = A_.shape[1]
    cdef int R = V.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] best = np.full(R, np.inf)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] best_vecs = np.array(V, copy=True, order="F")
    cdef int r, t, i, j, jbest
    cdef double s, val, vbest, sign, step, norm

    for r in range(R):
        for t in range(1, iters + 2):
            # evaluate max_j |<v, a_j>| with first-max tie-breaking
            jbest = 0
            vbest = -1.0
            for j in range(m):
                s = 0.0
                for i in range(n):
                    s += A_[i, j] * V[i, r]
                val = fabs(s)
                if val > vbest:
                    vbest = val
                    jbest = j
            if vbest < best[r]:
                best[r] = vbest
                for i in range(n):
                    best_vecs[i, r] = V[i, r]
            if t == iters + 1:
                break
            s = 0.0
            for i in range(n):
                s += A_[i, jbest] * V[i, r]
            sign = 1.0 if s >= 0.0 else -1.0
            step = 0.5 / sqrt(<double> t)
            norm = 0.0
            for i in range(n):
                V[i, r] -= step * sign * A_[i, jbest]
                norm += V[i, r] * V[i, r]
            norm = sqrt(norm)
            for i in range(n):
                V[i, r] /= norm

    return best, np.ascontiguousarray(best_vecs)


def circle_minimize(B, int n_angles):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] B_ = np.ascontiguousarray(B, dtype=np.float64)
    cdef int m = B_.shape[0]
    cdef int k, j, kbest
    cdef double pi = 3.14159265358979323846
    cdef double a, c, s, val, worst, best, abest

    best = -1.0
    abest = 0.0
    kbest = 0
    for k in range(n_angles):
        a = k * (pi / n_angles)
        c = cos(a)
        s = sin(a)
        worst = 0.0
        for j in range(m):
            val = fabs(B_[j, 0] * c + B_[j, 1] * s)
            if val > worst:
                worst = val
        if best < 0.0 or worst < best:
            best = worst
            abest = a
    return float(best), float(abest)
