"""Scalar minimization and root finding used by the rate curves."""

from __future__ import annotations

from typing import Callable, Optional, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

GRID_POINTS = 512
X_TOL = 1e-12


class BracketError(RuntimeError):
    """No sign change was found while expanding a root bracket."""


def grid_minimize(f: Callable[[float], float], lo: float, hi: float,
                  points: Optional[int] = None, xtol: float = X_TOL,
                  vectorized: bool = False) -> Tuple[float, float]:
    """Minimize ``f`` on ``[lo, hi]``: coarse grid, then bounded Brent on the best cell.

    Returns ``(x, f(x))``.  The grid endpoints are kept as candidates so a
    minimum sitting on the boundary is found exactly.  With ``vectorized`` the
    grid is evaluated in one call on a numpy array.
    """
    if not hi > lo:
        return lo, float(f(lo))
    points = points or GRID_POINTS
    xs = np.linspace(lo, hi, points)
    vals = np.asarray(f(xs), dtype=float) if vectorized else np.array([f(x) for x in xs])
    i = int(np.argmin(vals))
    best_x, best_v = float(xs[i]), float(vals[i])
    a, b = float(xs[max(i - 1, 0)]), float(xs[min(i + 1, points - 1)])
    res = minimize_scalar(lambda x: float(f(x)), bounds=(a, b), method="bounded",
                          options={"xatol": xtol, "maxiter": 500})
    if res.fun < best_v:
        best_x, best_v = float(res.x), float(res.fun)
    return best_x, best_v


def find_root(f: Callable[[float], float], lo: float, hi: float, rtol: float = 1e-12,
              grow: float = 2.0, max_expand: int = 200) -> float:
    """Root of ``f`` in ``[lo, hi]``, pushing ``hi`` outward until the sign changes."""
    flo = f(lo)
    if flo == 0:
        return lo
    for _ in range(max_expand):
        fhi = f(hi)
        if fhi == 0:
            return hi
        if (flo < 0) != (fhi < 0):
            return brentq(f, lo, hi, rtol=max(rtol, 4 * np.finfo(float).eps), maxiter=500)
        lo, flo = hi, fhi
        hi = hi * grow if hi > 0 else hi + grow
    raise BracketError(f"no sign change found up to x={hi}")
