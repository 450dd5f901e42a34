# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float64 simplex loop; same contract as ``_kernel_py.float_simplex``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()

cdef enum:
    OPTIMAL = 0
    UNBOUNDED = 1
    ITERATION_LIMIT = 2


cdef void _pivot(double[:, ::1] T, long[::1] basis, Py_ssize_t r, Py_ssize_t c,
                 double* col, double feas_tol) noexcept nogil:
    cdef Py_ssize_t m = T.shape[0] - 1
    cdef Py_ssize_t w = T.shape[1]
    cdef Py_ssize_t i, j
    cdef double p = T[r, c]
    cdef double f
    for j in range(w):
        T[r, j] /= p
    for i in range(m + 1):
        col[i] = T[i, c]
    for i in range(m + 1):
        if i == r:
            continue
        f = col[i]
        if f != 0.0:
            for j in range(w):
                T[i, j] -= f * T[r, j]
            T[i, c] = 0.0
    T[r, c] = 1.0
    for i in range(m):
        if T[i, w - 1] < 0.0 and T[i, w - 1] > -feas_tol:
            T[i, w - 1] = 0.0
    basis[r] = c


def float_pivot(double[:, ::1] T, long[::1] basis, Py_ssize_t r, Py_ssize_t c,
                double feas_tol=1e-9):
    col = np.empty(T.shape[0], dtype=np.float64)
    cdef double[::1] colv = col
    _pivot(T, basis, r, c, &colv[0], feas_tol)


def float_simplex(double[:, ::1] T, long[::1] basis, allowed, long max_iter,
                  double tol=1e-9, long bland_after=50, long streak=0,
                  double piv_tol=1e-7, bint steepest=True):
    cdef Py_ssize_t m = T.shape[0] - 1
    cdef Py_ssize_t ncol = T.shape[1] - 1
    cdef cnp.uint8_t[::1] allow = np.ascontiguousarray(allowed, dtype=np.uint8)
    col_buf = np.empty(m + 1, dtype=np.float64)
    norm_buf = np.empty(ncol, dtype=np.float64)
    cdef double[::1] colv = col_buf
    cdef double[::1] norms = norm_buf
    cdef long it = 0
    cdef Py_ssize_t i, j, c, r
    cdef double best, v, a, bound, ratio, piv, x
    cdef bint bland, degenerate
    cdef int status = OPTIMAL
    with nogil:
        while True:
            bland = streak >= bland_after
            c = -1
            best = 0.0
            if steepest and not bland:
                for j in range(ncol):
                    norms[j] = 1.0
                for i in range(m):
                    for j in range(ncol):
                        x = T[i, j]
                        norms[j] += x * x
            for j in range(ncol):
                if allow[j]:
                    v = T[m, j]
                    if v > tol:
                        if bland:
                            c = j
                            break
                        if steepest:
                            v = v * v / norms[j]
                        if c < 0 or v > best:
                            c = j
                            best = v
            if c < 0:
                status = OPTIMAL
                break
            if it >= max_iter:
                status = ITERATION_LIMIT
                break
            # Harris pass 1: largest step with each row allowed to overshoot by tol
            r = -1
            bound = 0.0
            for i in range(m):
                a = T[i, c]
                if a > piv_tol:
                    x = T[i, ncol]
                    if x < 0.0:
                        x = 0.0
                    ratio = (x + tol) / a
                    if r < 0 or ratio < bound:
                        bound = ratio
                        r = i
            if r < 0:
                status = UNBOUNDED
                break
            # pass 2: among rows within that step, the largest pivot (or smallest index)
            r = -1
            piv = 0.0
            for i in range(m):
                a = T[i, c]
                if a > piv_tol and T[i, ncol] / a <= bound:
                    if r < 0:
                        r = i
                        piv = a
                    elif bland:
                        if basis[i] < basis[r]:
                            r = i
                    elif a > piv:
                        r = i
                        piv = a
            degenerate = T[r, ncol] <= tol
            _pivot(T, basis, r, c, &colv[0], tol)
            it += 1
            if degenerate:
                streak += 1
            else:
                streak = 0
    return status, it, streak
