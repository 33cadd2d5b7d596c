# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled covariance-factor kernels. Mirrors vbopt.kernels exactly."""

from libc.math cimport sqrt

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"

SQRT_ARG_FLOOR = 1e-12
W_NORM_FLOOR = 1e-20

cdef double _SQRT_ARG_FLOOR = 1e-12
cdef double _W_NORM_FLOOR = 1e-20


def chol_rank_one(A, A_inv, double alpha, double beta, v):
    """See vbopt.kernels.chol_rank_one."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A_c = np.ascontiguousarray(A, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] Ai_c = np.ascontiguousarray(A_inv, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v_c = np.ascontiguousarray(v, dtype=np.float64)
    cdef Py_ssize_t n = A_c.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wAi = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A_new = np.empty((n, n), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] Ai_new = np.empty((n, n), dtype=np.float64)
    cdef double sa = sqrt(alpha)
    cdef double w2 = 0.0, arg, b, acc, cinv
    cdef Py_ssize_t i, j

    for i in range(n):
        acc = 0.0
        for j in range(n):
            acc += Ai_c[i, j] * v_c[j]
        w[i] = acc
        w2 += acc * acc

    if w2 < _W_NORM_FLOOR:
        for i in range(n):
            for j in range(n):
                A_new[i, j] = sa * A_c[i, j]
                Ai_new[i, j] = Ai_c[i, j] / sa
        return A_new, Ai_new

    arg = 1.0 + (beta / alpha) * w2
    if arg <= _SQRT_ARG_FLOOR:
        return None

    b = (sa / w2) * (sqrt(arg) - 1.0)
    for i in range(n):
        for j in range(n):
            A_new[i, j] = sa * A_c[i, j] + b * v_c[i] * w[j]

    for j in range(n):
        acc = 0.0
        for i in range(n):
            acc += w[i] * Ai_c[i, j]
        wAi[j] = acc
    cinv = b / (sa + b * w2)
    for i in range(n):
        for j in range(n):
            Ai_new[i, j] = (Ai_c[i, j] - cinv * w[i] * wAi[j]) / sa
    return A_new, Ai_new


def constraint_downdate(A, A_inv, vs, double coeff):
    """See vbopt.kernels.constraint_downdate."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A_c = np.ascontiguousarray(A, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] Ai_c = np.ascontiguousarray(A_inv, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] vs_c = np.ascontiguousarray(vs, dtype=np.float64)
    cdef Py_ssize_t n = A_c.shape[0]
    cdef Py_ssize_t k = vs_c.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] delta = np.zeros((n, n), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A_new = np.empty((n, n), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w = np.empty(n, dtype=np.float64)
    cdef double w2, acc
    cdef Py_ssize_t i, j, r
    cdef int skipped = 0

    for r in range(k):
        w2 = 0.0
        for i in range(n):
            acc = 0.0
            for j in range(n):
                acc += Ai_c[i, j] * vs_c[r, j]
            w[i] = acc
            w2 += acc * acc
        if w2 < _W_NORM_FLOOR:
            skipped += 1
            continue
        for i in range(n):
            for j in range(n):
                delta[i, j] += vs_c[r, i] * w[j] / w2

    for i in range(n):
        for j in range(n):
            A_new[i, j] = A_c[i, j] - coeff * delta[i, j]
    return A_new, skipped
