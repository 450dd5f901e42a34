"""Finite-length bounds on the dimension of locally recoverable codes.

Parameters are plain integers here because most of these bounds hold for any
length ``n``, not only multiples of the group width ``N = r + rho - 1``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from .classical import BestKnownTable, best_known_with_source, default_table, hamming_ratio
from .model import (BoundKind, BoundResult, CodeParams, InapplicableBound, ParameterError,
                    max_dimension)


class BoundTag(str, Enum):
    HAMMING = "hamming"
    PLOTKIN = "plotkin"
    SINGLETON = "singleton"


def _hamming_B(length: int, rho: int, q: int) -> Fraction:
    if length == 0:
        return Fraction(1)
    return hamming_ratio(q, length, rho)


def _plotkin_B(length: int, rho: int, q: int) -> Fraction:
    if length == 0:
        return Fraction(1)
    gap = rho - Fraction((q - 1) * length, q)
    if gap <= 0:
        raise InapplicableBound(
            f"Plotkin bound needs rho > (q-1)/q * length (rho={rho}, length={length}, q={q})")
    return Fraction(rho) / gap


def _singleton_B(length: int, rho: int, q: int) -> Fraction:
    if length == 0:
        return Fraction(1)
    return Fraction(q) ** max(length - rho + 1, 0)


@dataclass(frozen=True)
class LogConvexBound:
    """Exact upper bound ``B(l, rho)`` on codes of length ``l``; ``B(0, rho) = 1``."""

    tag: BoundTag
    func: Callable[[int, int, int], Fraction]

    def __call__(self, length: int, rho: int, q: int) -> Fraction:
        return self.func(length, rho, q)


BOUNDS: Dict[BoundTag, LogConvexBound] = {
    BoundTag.HAMMING: LogConvexBound(BoundTag.HAMMING, _hamming_B),
    BoundTag.PLOTKIN: LogConvexBound(BoundTag.PLOTKIN, _plotkin_B),
    BoundTag.SINGLETON: LogConvexBound(BoundTag.SINGLETON, _singleton_B),
}


def mu(n: int, d: int, N: int) -> int:
    if not 1 <= d <= n or N < 1:
        raise ParameterError(f"need 1 <= d <= n and N >= 1 (n={n}, d={d}, N={N})")
    return -(-(n - d + 1) // N) + 1


def _check_lrc(q: int, n: int, d: int, r: int, rho: int) -> None:
    if q < 2 or r < 1 or rho < 2 or not 1 <= d <= n:
        raise ParameterError(
            f"need q >= 2, r >= 1, rho >= 2, 1 <= d <= n (q={q}, n={n}, d={d}, r={r}, rho={rho})")


def recursive_bound(q: int, n: int, d: int, r: int, rho: int,
                    B: LogConvexBound) -> BoundResult:
    """``k <= mu(n, d, N) * log_q B(N, rho)``; the witness carries ``B(N, rho)^mu``."""
    _check_lrc(q, n, d, r, rho)
    N = r + rho - 1
    m = mu(n, d, N)
    base = B(N, rho, q)
    card = base ** m
    k = max_dimension(q, card)
    witness = {"mu": m, "N": N, "B": base, "cardinality_bound": card,
               "k_real": m * math.log(base) / math.log(q), "B_kind": B.tag.value}
    return BoundResult(k, BoundKind.DIMENSION, f"rec-{B.tag.value}", witness)


def corollary2(kind, q: int, n: int, d: int, r: int, rho: int) -> BoundResult:
    return recursive_bound(q, n, d, r, rho, BOUNDS[BoundTag(kind)])


def singleton_gopalan(n: int, k: int, r: int) -> int:
    """Largest distance allowed for an ``(n, k, r)`` LRC code."""
    if n < 1 or k < 1 or r < 1:
        raise ParameterError("need n, k, r >= 1")
    return n - k - -(-k // r) + 2


def singleton_rho(n: int, k: int, r: int, rho: int) -> int:
    if n < 1 or k < 1 or r < 1 or rho < 2:
        raise ParameterError("need n, k, r >= 1 and rho >= 2")
    return n - k + 1 - (-(-k // r) - 1) * (rho - 1)


def _largest_k(n: int, d: int, allowed: Callable[[int], int]) -> int:
    best = 0
    for k in range(1, n + 1):
        if allowed(k) >= d:
            best = k
    return best


def singleton_gopalan_k(n: int, d: int, r: int) -> BoundResult:
    """Largest ``k`` whose distance bound still admits ``d``."""
    k = _largest_k(n, d, lambda k: singleton_gopalan(n, k, r))
    return BoundResult(k, BoundKind.DIMENSION, "singleton-gopalan", {"n": n, "d": d, "r": r})


def singleton_rho_k(n: int, d: int, r: int, rho: int) -> BoundResult:
    k = _largest_k(n, d, lambda k: singleton_rho(n, k, r, rho))
    return BoundResult(k, BoundKind.DIMENSION, "singleton-rho",
                       {"n": n, "d": d, "r": r, "rho": rho})


# Memo for the LRC-aware shortening recursion; keyed on everything the value
# depends on so concurrent callers always agree.
_memo: Dict[Tuple, Tuple[int, str]] = {}
_memo_lock = threading.Lock()


def _lrc_residual_cap(m: int, d: int, r: int, table: BestKnownTable, use_lp: bool) -> Tuple[int, str]:
    """Upper bound on the size of a binary LRC code of length ``m``."""
    key = (m, d, r, id(table), use_lp)
    with _memo_lock:
        if key in _memo:
            return _memo[key]
    M, why = best_known_with_source(m, d, table, strict=False)
    if 0 < d <= m:
        sub = shortening_bound(2, m, d, r, table, lrc_recursive=True, use_lp=use_lp)
        if 2 ** sub.value < M:
            M, why = 2 ** sub.value, "recursion"
        if use_lp and m % (r + 1) == 0:
            from .lpbound import lp_dimension_bound

            lp = lp_dimension_bound(CodeParams(q=2, s=m // (r + 1), r=r, rho=2, d=d))
            if 2 ** lp.value < M:
                M, why = 2 ** lp.value, "lp"
    with _memo_lock:
        _memo[key] = (M, why)
    return M, why


def shortening_bound(q: int, n: int, d: int, r: int, table: Optional[BestKnownTable] = None,
                     lrc_recursive: bool = False, use_lp: bool = True) -> BoundResult:
    """``k <= min_s (s*r + log_q M(n - s(r+1), d))`` over ``0 <= s <= n/(r+1)``.

    Shortening a code on one full repair group of ``r + 1`` coordinates costs at
    most ``r`` dimensions.  ``s = 0`` is the plain bound ``log_q M(n, d)``; a
    residual of length zero counts as ``M = 1``, and lengths missing from the
    table fall back to the closed-form bounds.  With ``lrc_recursive`` the
    residual size is also capped by this bound applied to the shorter LRC code
    and, when its length is a multiple of ``r + 1``, by the LP bound.
    """
    if q != 2:
        raise ParameterError("the shortening bound uses binary best-known tables; q must be 2")
    _check_lrc(q, n, d, r, 2)
    if table is None:
        table = default_table()
    best = None
    terms = []
    for s in range(0, n // (r + 1) + 1):
        m = n - s * (r + 1)
        if lrc_recursive and s > 0:
            M, why = _lrc_residual_cap(m, d, r, table, use_lp)
        else:
            M, why = best_known_with_source(m, d, table, strict=False)
        k = s * r + max_dimension(q, M)
        terms.append({"s": s, "length": m, "M": M, "from": why, "k": k})
        if best is None or k < best[0]:
            best = (k, s, m, M)
    k, s_opt, m_opt, M_opt = best
    source = next(t["from"] for t in terms if t["s"] == s_opt)
    witness = {"s": s_opt, "residual_length": m_opt, "M": M_opt, "source": source,
               "terms": terms}
    method = "sh-lrc" if lrc_recursive else "sh"
    return BoundResult(k, BoundKind.DIMENSION, method, witness)
