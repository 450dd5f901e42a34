"""Asymptotic rate bounds for binary LRC codes as functions of relative distance.

Every curve returns a :class:`RateCurvePoint`.  At ``delta = 0`` and
``delta >= 1/2`` the endpoint values ``r/(r+1)`` and ``0`` are returned by
convention, which keeps ``log(0)`` out of the optimizers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List

import numpy as np

from .krawtchouk import binom
from .model import InapplicableBound, ParameterError
from .optimize import find_root, grid_minimize

LOG2E = math.log2(math.e)
# log(s) range searched by the GV-type minimizations; s = e^-60 is far below
# any optimum for delta >= 1e-12
LOG_S_MIN = -60.0


@dataclass(frozen=True)
class RateCurvePoint:
    delta: float
    value: float
    minimizer: dict = field(default_factory=dict)
    method: str = ""

    @property
    def physical(self) -> bool:
        return -1e-12 <= self.value <= 1 + 1e-12


class DisjointInterpretation(str, Enum):
    """How the coset-count weights are read for disjoint repair groups.

    ``CONSISTENT`` weights every term by ``x^-i`` and halves the ``i = t``
    term (odd ``r``) in both the rate formula and the equation fixing ``mu``.
    ``AS_PRINTED`` uses ``x^+t`` on the last term and leaves the root
    polynomial unhalved; it produces rates above 1 and is kept for comparison.
    """

    CONSISTENT = "consistent"
    AS_PRINTED = "as-printed"


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta <= 1.0 or math.isnan(delta):
        raise ParameterError(f"relative distance delta={delta} must lie in [0, 1]")


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"locality r={r} must be a positive integer")


def h2(x):
    """Binary entropy with ``h(0) = h(1) = 0``; accepts scalars or arrays."""
    x = np.asarray(x, dtype=float)
    if np.any((x < 0) | (x > 1)):
        raise ParameterError("entropy argument must lie in [0, 1]")
    with np.errstate(divide="ignore", invalid="ignore"):
        out = -x * np.log2(x) - (1 - x) * np.log2(1 - x)
    out = np.where((x == 0) | (x == 1), 0.0, out)
    return float(out) if out.ndim == 0 else out


def tau(delta: float) -> float:
    _check_delta(delta)
    if delta >= 0.5:
        return 0.0
    return 0.5 - math.sqrt(delta * (1 - delta))


def _endpoint(r: int, delta: float, method: str):
    if delta == 0:
        return RateCurvePoint(0.0, r / (r + 1), {"endpoint": "delta=0"}, method)
    if delta >= 0.5:
        return RateCurvePoint(delta, 0.0, {"endpoint": "delta>=1/2"}, method)
    return None


def gv_lrc(r: int, delta: float) -> RateCurvePoint:
    """Gilbert-Varshamov type lower bound for binary LRC codes.

    The inner minimum over ``0 < s <= 1`` runs in ``u = ln s``, where the
    objective is convex (a log-sum-exp plus a linear term).
    """
    _check_r(r)
    _check_delta(delta)
    hit = _endpoint(r, delta, "gv")
    if hit:
        return hit
    w = r + 1

    def objective(u):
        s = np.exp(u)
        with np.errstate(divide="ignore"):
            lse = np.logaddexp(w * np.log1p(s), w * np.log1p(-s))
        return lse / (w * math.log(2)) - delta * u / math.log(2)

    u, val = grid_minimize(objective, LOG_S_MIN, 0.0, vectorized=True)
    return RateCurvePoint(delta, 1 - val, {"s": math.exp(u)}, "gv")


def mds_weight_coefficients(q: int, N: int, rho: int) -> List[Fraction]:
    """Coefficients of ``b_rho(s) = sum_w c_w s^w`` for ``w = 0..N``.

    For an MDS code of length ``N`` and distance ``rho`` these are its weight
    distribution; ``c_0 = 1``.
    """
    if q < 2 or rho < 1 or N < rho:
        raise ParameterError(f"need q >= 2 and 1 <= rho <= N (q={q}, N={N}, rho={rho})")
    coeffs = [Fraction(0)] * (N + 1)
    coeffs[0] = Fraction(1)
    for w in range(rho, N + 1):
        inner = sum(Fraction(binom(w - 1, j)) / Fraction(-q) ** j for j in range(w - rho + 1))
        coeffs[w] = (q - 1) * binom(N, w) * Fraction(q) ** (w - rho) * inner
    return coeffs


def gv_rho(q: int, r: int, rho: int, delta: float) -> RateCurvePoint:
    """Gilbert-Varshamov type lower bound for ``(r, rho)`` locality over ``F_q``.

    Assumes an MDS code of length ``N = r + rho - 1`` and distance ``rho``
    exists; a negative weight coefficient disproves that and is reported as
    :class:`InapplicableBound`.
    """
    _check_r(r)
    _check_delta(delta)
    N = r + rho - 1
    coeffs = mds_weight_coefficients(q, N, rho)
    if any(c < 0 for c in coeffs):
        raise InapplicableBound(f"no {q}-ary MDS code of length {N} and distance {rho}")
    if delta == 0:
        return RateCurvePoint(0.0, r / N, {"endpoint": "delta=0"}, "gv-rho")
    powers = np.array([w for w, c in enumerate(coeffs) if c > 0], dtype=float)
    logc = np.array([math.log(c) for c in coeffs if c > 0])
    lnq = math.log(q)

    def objective(u):
        u = np.asarray(u, dtype=float)
        terms = logc[:, None] + powers[:, None] * u.reshape(1, -1)
        lse = np.logaddexp.reduce(terms, axis=0)
        out = lse / (N * lnq) - delta * u.reshape(-1) / lnq
        return out if u.ndim else float(out[0])

    u, val = grid_minimize(objective, LOG_S_MIN, 0.0, vectorized=True)
    return RateCurvePoint(delta, r / N - val, {"s": math.exp(u)}, "gv-rho")


def _h_scalar(x: float) -> float:
    if x <= 0 or x >= 1:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def _g(x):
    if np.ndim(x) == 0:
        return _h_scalar(0.5 - 0.5 * math.sqrt(min(max(1 - float(x), 0.0), 1.0)))
    return h2(0.5 - 0.5 * np.sqrt(np.clip(1 - np.asarray(x, dtype=float), 0.0, 1.0)))


def mrrw2_point(delta: float) -> RateCurvePoint:
    """Second McEliece-Rodemich-Rumsey-Welch bound, minimizing over ``alpha``."""
    _check_delta(delta)
    if delta == 0:
        return RateCurvePoint(0.0, 1.0, {"endpoint": "delta=0"}, "mrrw2")
    if delta >= 0.5:
        return RateCurvePoint(delta, 0.0, {"endpoint": "delta>=1/2"}, "mrrw2")

    def objective(a):
        return _g(a * a) - _g(a * a + 2 * delta * a + 2 * delta)

    a, val = grid_minimize(objective, 0.0, 1 - 2 * delta, vectorized=True)
    return RateCurvePoint(delta, min(max(1 + val, 0.0), 1.0), {"alpha": a}, "mrrw2")


def mrrw2(delta: float) -> float:
    return mrrw2_point(delta).value


def _c(w: int, t: float) -> float:
    return LOG2E / (8 * w * w) * (t ** w / 2) ** (w + 1)


def r0(r: int, delta: float) -> float:
    """Coset-graph rate bound ``h(tau) - c(r+1, tau)`` for linear codes."""
    _check_r(r)
    _check_delta(delta)
    if delta >= 0.5:
        return 0.0
    t = tau(delta)
    return max(h2(t) - _c(r + 1, t), 0.0)


def _shortened(r: int, delta: float, inner: Callable[[float], float], method: str) -> RateCurvePoint:
    """``min_sigma sigma*r + (1 - sigma(r+1)) * inner(delta / (1 - sigma(r+1)))``.

    Past ``sigma = (1 - 2 delta)/(r+1)`` the inner argument reaches 1/2, the
    inner rate is 0 and the objective ``sigma*r`` only grows, so the search
    stops there.
    """
    _check_r(r)
    _check_delta(delta)
    hit = _endpoint(r, delta, method)
    if hit:
        return hit
    w = r + 1

    def objective(sigma: float) -> float:
        rest = 1 - sigma * w
        if rest <= 0:
            return sigma * r
        arg = delta / rest
        return sigma * r + (rest * inner(arg) if arg < 0.5 else 0.0)

    sigma, val = grid_minimize(objective, 0.0, (1 - 2 * delta) / w)
    return RateCurvePoint(delta, val, {"sigma": sigma}, method)


def upper_cm(r: int, delta: float, r_opt: Callable[[float], float] = mrrw2) -> RateCurvePoint:
    """Shortening upper bound on the rate of LRC codes built on ``r_opt``."""
    return _shortened(r, delta, r_opt, "upper-cm")


def upper_linear(r: int, delta: float) -> RateCurvePoint:
    """Shortening bound for linear LRC codes with the coset-graph rate inside."""
    return _shortened(r, delta, lambda x: r0(r, x), "upper-linear")


def _weights(r: int, halve_last: bool) -> List[float]:
    t = (r + 1) // 2
    w = [float(binom(r + 1, i)) for i in range(t + 1)]
    if halve_last:
        w[t] /= 2 ** (r % 2)
    return w


def mu_root(r: int, tau_val: float,
            interp: DisjointInterpretation = DisjointInterpretation.CONSISTENT) -> float:
    """Point where the mean group weight of the coset-leader distribution hits ``(r+1) tau``.

    Returns 1 when the mean at ``x = 1`` is already small enough; otherwise the
    unique positive root of ``sum_i w_i ((r+1) tau - i) x^(t-i)``, which lies
    above 1.
    """
    _check_r(r)
    if not 0 < tau_val < 0.5:
        raise ParameterError(f"tau={tau_val} must lie in (0, 1/2)")
    interp = DisjointInterpretation(interp)
    t = (r + 1) // 2
    # the x = 1 test always uses the halved weights
    at_one = _weights(r, True)
    target = (r + 1) * tau_val
    if sum(i * b for i, b in enumerate(at_one)) / sum(at_one) <= target:
        return 1.0
    w = _weights(r, interp is DisjointInterpretation.CONSISTENT)
    coeffs = [wi * (target - i) for i, wi in enumerate(w)]

    def poly(x: float) -> float:
        # scaled by x^-t so huge roots do not overflow
        return sum(c * x ** -i for i, c in enumerate(coeffs))

    return find_root(poly, 1.0, 2.0)


def upper_disjoint(r: int, delta: float,
                   interp: DisjointInterpretation = DisjointInterpretation.CONSISTENT
                   ) -> RateCurvePoint:
    """Coset-leader rate bound for linear LRC codes with disjoint repair groups."""
    _check_r(r)
    _check_delta(delta)
    interp = DisjointInterpretation(interp)
    method = "upper-disjoint" if interp is DisjointInterpretation.CONSISTENT else "upper-disjoint-as-printed"
    hit = _endpoint(r, delta, method)
    if hit:
        return hit
    tv = tau(delta)
    mu = mu_root(r, tv, interp)
    t = (r + 1) // 2
    w = _weights(r, True)
    betas = [wi * mu ** -i for i, wi in enumerate(w)]
    if interp is DisjointInterpretation.AS_PRINTED:
        betas[t] = w[t] * mu ** t
    value = tv * math.log2(mu) + math.log2(sum(betas)) / (r + 1)
    return RateCurvePoint(delta, value, {"mu": mu, "tau": tv}, method)


def _mrrw2_curve(r: int, delta: float) -> RateCurvePoint:
    return mrrw2_point(delta)


CURVES: Dict[str, Callable[..., RateCurvePoint]] = {
    "gv": gv_lrc,
    "mrrw2": _mrrw2_curve,
    "upper-cm": upper_cm,
    "upper-linear": upper_linear,
    "upper-disjoint": upper_disjoint,
}
