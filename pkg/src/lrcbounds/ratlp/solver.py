"""Dense two-phase primal simplex over exact rationals or float64.

Problems arrive as ``max c.a  s.t.  A a >= b, a >= 0`` and are solved in the
equivalent form ``G a <= h`` with ``G = -A``, ``h = -b``.  The dual vector
returned for ``A a >= b`` is ``y >= 0`` with ``A^T y <= -c`` and objective
``-b.y``.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from . import _kernel_py
from .problem import (
    DimensionError,
    DualInfeasibleError,
    IterationLimitError,
    LpError,
    LpProblem,
    LpSolution,
)

try:
    if os.environ.get("LRCBOUNDS_PURE_PYTHON"):
        raise ImportError("compiled kernel disabled by LRCBOUNDS_PURE_PYTHON")
    from . import _kernel_ext
except ImportError:
    _kernel_ext = None

KERNEL = "cython" if _kernel_ext is not None else "python"

FLOAT_TOL = 1e-9
REFACTOR_EVERY = 100
PIVOT_TOL = 1e-7
MAX_PIVOT_TOL = 1e-4
MAX_RETRIES = 12
HEALTH_TOL = 1e-3
HEALTH_MAX = 1e12
PERTURB = 1e-7
SCALING_PASSES = 4
PERTURB_SEED = 20160


class CertificateError(LpError):
    """Post-solve verification of an exact solution failed (a solver bug)."""


def _float_kernel(name: Optional[str]):
    name = name or KERNEL
    if name == "cython":
        if _kernel_ext is None:
            raise ImportError("compiled simplex kernel is not built")
        return _kernel_ext
    if name == "python":
        return _kernel_py
    raise ValueError(f"unknown kernel {name!r}")


def _default_iter_limit(m: int, n: int) -> int:
    return 50 * (m + n) + 1000


def _lcm_denominator(values) -> int:
    out = 1
    for v in values:
        if isinstance(v, Fraction) and v.denominator != 1:
            out = out * v.denominator // math.gcd(out, v.denominator)
    return out


def solve(problem: LpProblem, mode: str = "exact", *, max_iter: Optional[int] = None,
          bland_after: int = 50, kernel: Optional[str] = None,
          warm_start: bool = True) -> LpSolution:
    """Solve ``problem``.

    ``mode="exact"`` pivots over integers with a common denominator and
    re-verifies primal/dual feasibility and the zero duality gap afterwards.
    With ``warm_start`` it first solves in float and starts the exact simplex
    from that basis, which usually leaves only a handful of exact pivots.
    ``mode="float"`` runs the same two-phase method on float64 with row
    equilibration; pair it with :func:`certify_float` for a rigorous bound.
    ``bland_after=0`` gives pure Bland pivoting.
    """
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    m, n = problem.nrows, problem.nvars
    if max_iter is None:
        max_iter = _default_iter_limit(m, n)
    if mode == "exact":
        start = None
        if warm_start:
            try:
                guess = _solve_float(problem, max_iter, bland_after, _float_kernel(kernel))
                start = guess.basis
            except (LpError, np.linalg.LinAlgError):
                pass
        sol = _solve_exact(problem, max_iter, bland_after, start)
        if sol.optimal:
            verify_optimality(problem, sol)
        return sol
    return _solve_float(problem, max_iter, bland_after, _float_kernel(kernel))


# -- exact path ---------------------------------------------------------------

def _exact_tableau(problem: LpProblem):
    """Integer tableau of ``G a <= h`` with slack/artificial starting basis."""
    m, n = problem.nrows, problem.nvars
    # rows of  G a <= h  (G = -A, h = -b), each scaled by its own factor
    row_mult: List[int] = []
    G: List[List[int]] = []
    h: List[int] = []
    for row, rhs in zip(problem.A, problem.b):
        mult = _lcm_denominator(list(row) + [rhs])
        row_mult.append(mult)
        G.append([int(-v * mult) for v in row])
        h.append(int(-rhs * mult))

    # columns: x in [0, n), slacks in [n, n+m), artificials after
    art_rows = [i for i, v in enumerate(h) if v < 0]
    ncol = n + m + len(art_rows)
    art_of = {i: n + m + k for k, i in enumerate(art_rows)}
    M: List[List[int]] = []
    basis: List[int] = []
    for i in range(m):
        row = G[i] + [0] * (ncol - n) + [h[i]]
        row[n + i] = 1
        if i in art_of:
            row = [-v for v in row]
            row[art_of[i]] = 1
            basis.append(art_of[i])
        else:
            basis.append(n + i)
        M.append(row)
    return M, basis, art_rows, art_of, row_mult


def _install_basis(M, basis, target: Sequence[int], first_art: int) -> Optional[int]:
    """Pivot ``target`` columns into the basis; ``None`` unless the result is
    primal feasible with every artificial at zero."""
    D = 1
    want = set(target)
    for j in target:
        if j in basis:
            continue
        rows = [r for r, b in enumerate(basis) if b not in want and M[r][j] != 0]
        if not rows:
            return None
        # artificials leave first
        r = max(rows, key=lambda r: basis[r] >= first_art)
        D = _kernel_py.exact_pivot(M, D, basis, r, j)
    ncol = len(M[0]) - 1
    for r, b in enumerate(basis):
        if M[r][ncol] < 0 or (b >= first_art and M[r][ncol] != 0):
            return None
    return D


def _solve_exact(problem: LpProblem, max_iter: int, bland_after: int,
                 start: Optional[Sequence[int]] = None) -> LpSolution:
    """Exact two-phase simplex.  ``start`` is a basis to try first (typically
    the float optimum); phase 1 is skipped when it is feasible."""
    m, n = problem.nrows, problem.nvars
    c_mult = _lcm_denominator(problem.c)
    c = [int(v * c_mult) for v in problem.c]
    M, basis, art_rows, art_of, row_mult = _exact_tableau(problem)
    ncol = len(M[0]) - 1
    iterations = 0
    allowed = [True] * ncol
    D = None
    if start is not None:
        D = _install_basis(M, basis, start, n + m)
        if D is None:
            M, basis, *_ = _exact_tableau(problem)
        elif art_rows:
            M.append([0] * (ncol + 1))  # _drive_out_exact expects an objective row
            D = _drive_out_exact(M, D, basis, n + m)
            M.pop()
            for j in range(n + m, ncol):
                allowed[j] = False
    if D is None:
        D = 1
        if art_rows:
            obj = [0] * (ncol + 1)
            for i in art_rows:
                for j, v in enumerate(M[i]):
                    obj[j] += v
            for i in art_rows:
                obj[art_of[i]] = 0
            M.append(obj)
            status, it, D = _kernel_py.exact_simplex(M, D, basis, allowed, max_iter, bland_after)
            iterations += it
            if status == _kernel_py.ITERATION_LIMIT:
                raise IterationLimitError(f"phase 1 exceeded {max_iter} pivots")
            if M[m][ncol] != 0:  # -z != 0  => sum of artificials positive
                return LpSolution("infeasible", "exact", iterations=iterations)
            D = _drive_out_exact(M, D, basis, n + m)
            M.pop()
            for j in range(n + m, ncol):
                allowed[j] = False

    # phase 2 objective row:  D*c - sum_i c_B(i) * M[i]
    cfull = c + [0] * (ncol - n)
    obj = [D * v for v in cfull] + [0]
    for i, bcol in enumerate(basis):
        cb = cfull[bcol]
        if cb:
            obj = [o - cb * v for o, v in zip(obj, M[i])]
    M.append(obj)
    status, it, D = _kernel_py.exact_simplex(M, D, basis, allowed, max_iter, bland_after)
    iterations += it
    if status == _kernel_py.ITERATION_LIMIT:
        raise IterationLimitError(f"phase 2 exceeded {max_iter} pivots")
    if status == _kernel_py.UNBOUNDED:
        return LpSolution("unbounded", "exact", iterations=iterations)

    x = [Fraction(0)] * n
    for i, bcol in enumerate(basis):
        if bcol < n:
            x[bcol] = Fraction(M[i][ncol], D)
    y = [Fraction(-M[m][n + i] * row_mult[i], D * c_mult) for i in range(m)]
    objective = Fraction(-M[m][ncol], D * c_mult)
    return LpSolution("optimal", "exact", _norm(objective), [_norm(v) for v in x],
                      [_norm(v) for v in y], iterations, sorted(b for b in basis if b < n + m))


def _drive_out_exact(M, D, basis, first_art):
    m = len(M) - 1
    for r in range(m):
        if basis[r] < first_art:
            continue
        for j in range(first_art):
            if M[r][j] != 0:
                D = _kernel_py.exact_pivot(M, D, basis, r, j)
                break
        # otherwise the row is redundant; its artificial stays basic at zero
    return D


def _norm(v: Fraction):
    return v.numerator if v.denominator == 1 else v


# -- float path ---------------------------------------------------------------

def _refactor(W, cost, basis):
    """Rebuild the tableau for ``basis`` from the original rows ``W``.

    Returns ``None`` when the basis matrix is numerically singular.
    """
    m = W.shape[0]
    try:
        X = np.linalg.solve(W[:, basis], W)
    except np.linalg.LinAlgError:
        return None
    if not np.all(np.isfinite(X)):
        return None
    X[np.arange(m), basis] = 1.0
    rhs = X[:, -1]
    rhs[(rhs < 0.0) & (rhs > -1e-7)] = 0.0
    obj = cost - cost[basis] @ X
    obj[basis] = 0.0
    return np.vstack([X, obj])


def _healthy(fresh) -> bool:
    if fresh is None:
        return False
    rhs = fresh[:-1, -1]
    size = max(1.0, float(np.abs(rhs).max(initial=0.0)))
    return bool(rhs.min(initial=0.0) >= -HEALTH_TOL * size
                and np.abs(fresh[:-1]).max(initial=0.0) < HEALTH_MAX)


def _run_float(kern, T, W, cost, basis, allowed, budget, bland_after):
    """Simplex in chunks of ``REFACTOR_EVERY`` pivots, reinverting between chunks.

    The last basis whose reinverted tableau looked sane is kept; if a later
    reinversion shows lost feasibility or blown-up entries, the run returns to
    it with a stricter pivot tolerance.
    """
    used = 0
    streak = 0
    piv_tol = PIVOT_TOL
    every = REFACTOR_EVERY
    retries = 0
    saved_T, saved_basis = T.copy(), basis.copy()
    while True:
        chunk = min(every, budget - used)
        status, it, streak = kern.float_simplex(T, basis, allowed, chunk, FLOAT_TOL,
                                                bland_after, streak, piv_tol)
        used += it
        fresh = _refactor(W, cost, basis)
        if not _healthy(fresh):
            retries += 1
            if retries > MAX_RETRIES:
                raise LpError("float simplex broke down numerically")
            piv_tol = min(piv_tol * 10.0, MAX_PIVOT_TOL)
            every = max(1, every // 4)
            T[:] = saved_T
            basis[:] = saved_basis
            streak = 0
            if used >= budget:
                return _kernel_py.ITERATION_LIMIT, used
            continue
        T[:] = fresh
        saved_T[:] = fresh
        saved_basis[:] = basis
        if every < REFACTOR_EVERY and it == chunk:
            every = min(REFACTOR_EVERY, every * 2)
        if status != _kernel_py.ITERATION_LIMIT:
            # reinversion can expose a last improving column
            if status == _kernel_py.OPTIMAL and used < budget \
                    and np.any(allowed & (T[-1, :-1] > FLOAT_TOL)):
                continue
            return status, used
        if used >= budget:
            return status, used


def _geo(absval):
    """sqrt(max * min) over nonzero entries along axis 1; 1 where a line is empty."""
    big = absval.max(axis=1, initial=0.0)
    small = np.where(absval > 0.0, absval, np.inf).min(axis=1, initial=np.inf)
    with np.errstate(invalid="ignore"):
        out = np.sqrt(big * small)
    out[~np.isfinite(out) | (out == 0.0)] = 1.0
    return out


def _scaling(G, h, c, passes=SCALING_PASSES):
    """Row and column factors: geometric-mean passes, then max-abs equilibration."""
    R = np.ones(G.shape[0])
    S = np.ones(G.shape[1])
    for _ in range(passes):
        R *= _geo(np.abs(np.column_stack([G / (R[:, None] * S), h / R])))
        S *= _geo(np.abs(np.vstack([G / (R[:, None] * S), c / S])).T)
    R *= np.maximum(np.abs(G / (R[:, None] * S)).max(axis=1, initial=0.0), np.abs(h / R))
    R[R == 0.0] = 1.0
    S *= np.maximum(np.abs(G / (R[:, None] * S)).max(axis=0, initial=0.0), np.abs(c / S))
    S[S == 0.0] = 1.0
    return R, S


def _solve_float(problem: LpProblem, max_iter: int, bland_after: int, kern) -> LpSolution:
    m, n = problem.nrows, problem.nvars
    G = -np.array([[float(v) for v in row] for row in problem.A], dtype=np.float64).reshape(m, n)
    h = -np.array([float(v) for v in problem.b], dtype=np.float64)
    c = np.array([float(v) for v in problem.c], dtype=np.float64)
    scale, colscale = _scaling(G, h, c)
    G /= scale[:, None] * colscale
    h = h / scale
    c = c / colscale

    neg = h < 0
    art_rows = np.nonzero(neg)[0]
    k = art_rows.size
    ncol = n + m + k
    W = np.zeros((m, ncol + 1), dtype=np.float64)
    W[:, :n] = G
    W[np.arange(m), n + np.arange(m)] = 1.0
    W[:, ncol] = h
    W[art_rows] *= -1.0
    basis = (n + np.arange(m)).astype(np.int64)
    if k:
        W[art_rows, n + m + np.arange(k)] = 1.0
        basis[art_rows] = n + m + np.arange(k)
    T = np.zeros((m + 1, ncol + 1), dtype=np.float64)
    T[:m] = W
    allowed = np.ones(ncol, dtype=bool)
    iterations = 0

    if k:
        cost = np.zeros(ncol + 1)
        cost[n + m:ncol] = -1.0
        T[m] = cost - cost[basis] @ T[:m]
        status, it = _run_float(kern, T, W, cost, basis, allowed, max_iter, bland_after)
        iterations += it
        if status == _kernel_py.ITERATION_LIMIT:
            raise IterationLimitError(f"phase 1 exceeded {max_iter} pivots")
        if T[m, ncol] > FLOAT_TOL * max(1.0, float(np.abs(h).max(initial=0.0))):
            return LpSolution("infeasible", "float", iterations=iterations)
        for r in range(m):
            if basis[r] >= n + m:
                js = np.nonzero(np.abs(T[r, :n + m]) > FLOAT_TOL)[0]
                if js.size:
                    kern.float_pivot(T, basis, r, int(js[np.argmax(np.abs(T[r, js]))]))
        allowed[n + m:] = False

    cost = np.zeros(ncol + 1)
    cost[:n] = c
    fresh = _refactor(W, cost, basis)
    if fresh is not None:
        T[:] = fresh
    else:
        T[m] = cost - cost[basis] @ T[:m]
    # Random right-hand-side perturbation keeps the heavily degenerate Delsarte
    # vertices from stalling; the basis stays feasible because the shift is
    # applied to the current basic values.  Reduced costs (hence the dual) do
    # not depend on the right-hand side, so nothing needs undoing for them.
    h_orig = W[:, ncol].copy()
    rng = np.random.default_rng(PERTURB_SEED)
    T[:m, ncol] += PERTURB * rng.uniform(0.5, 1.0, m)
    W[:, ncol] = W[:, basis] @ T[:m, ncol]
    status, it = _run_float(kern, T, W, cost, basis, allowed, max_iter, bland_after)
    iterations += it
    if status == _kernel_py.ITERATION_LIMIT:
        raise IterationLimitError(f"phase 2 exceeded {max_iter} pivots")
    if status == _kernel_py.UNBOUNDED:
        return LpSolution("unbounded", "float", iterations=iterations)
    W[:, ncol] = h_orig
    fresh = _refactor(W, cost, basis)
    if fresh is not None:
        T[:] = fresh
    x = np.zeros(n)
    for i, bcol in enumerate(basis):
        if bcol < n:
            x[bcol] = max(T[i, ncol], 0.0) / colscale[bcol]
    y = np.maximum(-T[m, n:n + m], 0.0) / scale
    return LpSolution("optimal", "float", float(-T[m, ncol]), x.tolist(), y.tolist(), iterations,
                      sorted(int(b) for b in basis if b < n + m))


# -- verification and certification -------------------------------------------

def _dual_columns(problem: LpProblem, y: Sequence) -> List:
    """``A^T y`` restricted to the nonzero entries of ``y``."""
    nz = [(i, v) for i, v in enumerate(y) if v]
    out = []
    for j in range(problem.nvars):
        out.append(sum(problem.A[i][j] * v for i, v in nz))
    return out


def _dual_columns_int(problem: LpProblem, Y: Sequence[int]) -> List[int]:
    nz = [(problem.A[i], v) for i, v in enumerate(Y) if v]
    return [sum(row[j] * v for row, v in nz) for j in range(problem.nvars)]


def _common_denominator(y: Sequence[Fraction]):
    L = _lcm_denominator(y)
    return [int(v * L) for v in y], L


def certify(problem: LpProblem, dual: Sequence) -> Fraction:
    """Weak-duality upper bound ``-b.y`` on the primal optimum.

    Raises :class:`DualInfeasibleError` if ``y`` is not dual feasible.
    """
    if len(dual) != problem.nrows:
        raise DimensionError(f"dual has {len(dual)} entries, expected {problem.nrows}")
    y = [Fraction(v) for v in dual]
    for i, v in enumerate(y):
        if v < 0:
            raise DualInfeasibleError(f"dual entry {i} is negative")
    Y, L = _common_denominator(y)
    cols = _dual_columns_int(problem, Y)
    for j, (col, cj) in enumerate(zip(cols, problem.c)):
        if col > -cj * L:
            raise DualInfeasibleError(f"dual constraint for column {j} violated", column=j)
    return _norm(Fraction(-sum(b * v for b, v in zip(problem.b, Y) if v), L))


def rationalize_dual(problem: LpProblem, dual: Sequence[float],
                     max_denominator: Optional[int] = 10**6) -> List[Fraction]:
    """Turn a float dual into an exactly feasible rational one.

    Entries are rounded to fractions with bounded denominators (or taken as
    their exact binary values when ``max_denominator`` is None), negatives are
    clipped, and the vector is then scaled up by the smallest factor that makes
    every dual constraint hold.  Raises :class:`DualInfeasibleError` if no
    scaling works.
    """
    def _round(v):
        if not v > 0:
            return Fraction(0)
        f = Fraction(v)
        return f if max_denominator is None else f.limit_denominator(max_denominator)

    y = [_round(v) for v in dual]
    Y, L = _common_denominator(y)
    cols = _dual_columns_int(problem, Y)
    lam = Fraction(0)
    upper = None
    for j, (col, cj) in enumerate(zip(cols, problem.c)):
        # need lam * col / L <= -cj
        if col < 0:
            need = Fraction(-cj * L, col)  # lam >= need  (col < 0 flips)
            if need > lam:
                lam = need
        elif col > 0:
            cap = Fraction(-cj * L, col)
            upper = cap if upper is None else min(upper, cap)
        elif cj > 0:
            raise DualInfeasibleError(f"column {j} has no dual support", column=j)
    if upper is not None and lam > upper:
        raise DualInfeasibleError("no scaling of the rounded dual is feasible")
    return [_norm(v * lam) for v in y]


def certify_float(problem: LpProblem, solution: LpSolution,
                  max_denominator: Optional[int] = 10**6):
    """Rigorous upper bound from a float solve; returns ``(bound, rational_dual)``."""
    if not solution.optimal:
        raise LpError(f"cannot certify a {solution.status} solution")
    y = rationalize_dual(problem, solution.dual, max_denominator)
    return certify(problem, y), y


def verify_optimality(problem: LpProblem, sol: LpSolution) -> None:
    """Independent exact re-check of primal feasibility, dual feasibility, zero gap."""
    x = [Fraction(v) for v in sol.primal]
    y = [Fraction(v) for v in sol.dual]
    if any(v < 0 for v in x):
        raise CertificateError("primal solution has a negative entry")
    for i, (row, rhs) in enumerate(zip(problem.A, problem.b)):
        if sum(a * v for a, v in zip(row, x) if v) < rhs:
            raise CertificateError(f"primal constraint {i} violated")
    try:
        dual_value = certify(problem, y)
    except DualInfeasibleError as exc:
        raise CertificateError(f"dual infeasible: {exc}") from exc
    primal_value = sum(cj * v for cj, v in zip(problem.c, x))
    if primal_value != dual_value or primal_value != sol.objective:
        raise CertificateError(
            f"duality gap: primal {primal_value}, dual {dual_value}, reported {sol.objective}")
