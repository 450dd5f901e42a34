"""Simplex pivoting loops in pure Python / numpy.

Tableau layout (both kernels): rows ``0..m-1`` are constraints, row ``m`` holds
the reduced costs, the last column is the right-hand side.  ``basis[i]`` is
the column basic in row ``i``.  The objective row's right-hand side carries
``-z`` for the current objective value ``z``.

Exact entering rule: most positive reduced cost (Dantzig).  After
``bland_after`` consecutive degenerate pivots the loop switches to Bland's
smallest-index rule until the objective moves again, so an exact run cannot
cycle.  Exact leaving rule: minimum ratio, ties broken by the smallest basic
variable index.  The float loop differs, see :func:`float_simplex`.
"""

from __future__ import annotations

import numpy as np

OPTIMAL = 0
UNBOUNDED = 1
ITERATION_LIMIT = 2


def float_pivot(T, basis, r, c, feas_tol=1e-9):
    m = T.shape[0] - 1
    T[r] /= T[r, c]
    col = T[:, c].copy()
    col[r] = 0.0
    rows = np.nonzero(col)[0]
    if rows.size:
        T[rows] -= np.outer(col[rows], T[r])
    T[:, c] = 0.0
    T[r, c] = 1.0
    rhs = T[:m, -1]
    rhs[(rhs < 0.0) & (rhs > -feas_tol)] = 0.0
    basis[r] = c


def float_simplex(T, basis, allowed, max_iter, tol=1e-9, bland_after=50, streak=0,
                  piv_tol=1e-7, steepest=True):
    """Run primal simplex on a float64 tableau in place.

    Pricing is steepest edge (``steepest=True``) or Dantzig, falling back to
    Bland after ``bland_after`` degenerate pivots.  The ratio test is Harris'
    two-pass rule: the step may overshoot by ``tol`` per row so that the
    largest available pivot element (at least ``piv_tol``) can be chosen.
    ``streak`` carries the count of consecutive degenerate pivots across calls.
    Returns ``(status, iterations, streak)``.
    """
    m = T.shape[0] - 1
    ncol = T.shape[1] - 1
    allowed = np.asarray(allowed, dtype=bool)
    it = 0
    while True:
        rc = T[m, :ncol]
        cand = allowed & (rc > tol)
        if not cand.any():
            return OPTIMAL, it, streak
        if it >= max_iter:
            return ITERATION_LIMIT, it, streak
        bland = streak >= bland_after
        if bland:
            c = int(np.argmax(cand))
        elif steepest:
            body = T[:m, :ncol]
            norms = 1.0 + np.einsum("ij,ij->j", body, body)
            c = int(np.argmax(np.where(cand, rc * rc / norms, -np.inf)))
        else:
            c = int(np.argmax(np.where(cand, rc, -np.inf)))
        col = T[:m, c]
        rows = np.nonzero(col > piv_tol)[0]
        if not rows.size:
            return UNBOUNDED, it, streak
        a = col[rows]
        rhs = T[rows, ncol]
        bound = ((np.maximum(rhs, 0.0) + tol) / a).min()
        ok = rows[rhs / a <= bound]
        if bland:
            r = int(ok[np.argmin(basis[ok])])
        else:
            r = int(ok[np.argmax(col[ok])])
        degenerate = T[r, ncol] <= tol
        float_pivot(T, basis, r, c, tol)
        it += 1
        streak = streak + 1 if degenerate else 0


def exact_pivot(M, D, basis, r, c):
    """Integer-preserving pivot: entries of ``M`` are numerators over the common
    denominator ``D``.  Returns the new denominator."""
    p = M[r][c]
    pr = M[r]
    for i, row in enumerate(M):
        if i == r:
            continue
        f = row[c]
        if f:
            M[i] = [(a * p - f * b) // D for a, b in zip(row, pr)]
        elif p != D:
            M[i] = [a * p // D for a in row]
    if p < 0:
        for i, row in enumerate(M):
            M[i] = [-a for a in row]
        p = -p
    basis[r] = c
    return p


def exact_simplex(M, D, basis, allowed, max_iter, bland_after=50):
    """Exact primal simplex over an integer tableau.  Returns ``(status, iterations, D)``."""
    m = len(M) - 1
    ncol = len(M[0]) - 1
    allowed_idx = [j for j in range(ncol) if allowed[j]]
    it = 0
    streak = 0
    while True:
        obj = M[m]
        bland = streak >= bland_after
        c = -1
        best = 0
        for j in allowed_idx:
            v = obj[j]
            if v > best:
                c = j
                if bland:
                    break
                best = v
        if c < 0:
            return OPTIMAL, it, D
        if it >= max_iter:
            return ITERATION_LIMIT, it, D
        r = -1
        for i in range(m):
            a = M[i][c]
            if a <= 0:
                continue
            if r < 0:
                r = i
                continue
            # compare M[i][rhs]/a with M[r][rhs]/M[r][c]
            lhs = M[i][ncol] * M[r][c]
            rhs = M[r][ncol] * a
            if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                r = i
        if r < 0:
            return UNBOUNDED, it, D
        degenerate = M[r][ncol] == 0
        D = exact_pivot(M, D, basis, r, c)
        it += 1
        streak = streak + 1 if degenerate else 0
