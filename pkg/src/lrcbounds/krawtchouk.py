"""Exact Krawtchouk polynomials and valencies of products of Hamming schemes."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Sequence, Tuple

from .model import ParameterError, check_index


@lru_cache(maxsize=None)
def pascal(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Rows 0..n of Pascal's triangle."""
    rows = [(1,)]
    for m in range(1, n + 1):
        prev = rows[-1]
        rows.append(tuple(1 if k in (0, m) else prev[k - 1] + prev[k] for k in range(m + 1)))
    return tuple(rows)


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return pascal(n)[n][k]


def _krawtchouk_sum(n: int, q: int, j: int, x: int) -> int:
    return sum((-1) ** l * (q - 1) ** (j - l) * binom(x, l) * binom(n - x, j - l)
               for l in range(j + 1))


def krawtchouk(n: int, q: int, j: int, x: int) -> int:
    """K_j^{(n)}(x) for the q-ary Hamming scheme, evaluated from its defining sum."""
    if q < 2:
        raise ParameterError("q must be >= 2")
    if not (0 <= j <= n and 0 <= x <= n):
        raise ParameterError(f"Krawtchouk arguments j={j}, x={x} outside [0, {n}]")
    return _krawtchouk_sum(n, q, j, x)


class KrawTable:
    """Memoized (n+1) x (n+1) table with ``table[j][x] = K_j^{(n)}(x)``."""

    def __init__(self, n: int, q: int):
        if q < 2 or n < 0:
            raise ParameterError("need n >= 0 and q >= 2")
        self.n = n
        self.q = q
        self.table: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(_krawtchouk_sum(n, q, j, x) for x in range(n + 1)) for j in range(n + 1))

    def __call__(self, j: int, x: int) -> int:
        return self.table[j][x]

    def weight(self, x: int) -> int:
        return binom(self.n, x) * (self.q - 1) ** x


@lru_cache(maxsize=64)
def kraw_table(n: int, q: int) -> KrawTable:
    return KrawTable(n, q)


def multi_krawtchouk(N: int, q: int, j: Sequence[int], i: Sequence[int]) -> int:
    """Eigenvalue K_j(i) = prod_p K_{j_p}^{(N)}(i_p) of the s-fold product scheme."""
    if len(j) != len(i):
        raise ParameterError(f"multi-index lengths differ: {len(j)} != {len(i)}")
    check_index(j, N)
    check_index(i, N)
    t = kraw_table(N, q).table
    return math.prod(t[jp][ip] for jp, ip in zip(j, i))


def valency(N: int, q: int, i: Sequence[int]) -> int:
    check_index(i, N)
    return math.prod(binom(N, x) * (q - 1) ** x for x in i)


def product_matrix(N: int, q: int, s: int) -> List[List[int]]:
    """Dense eigenmatrix of H(N, q)^s indexed by ranks, ``M[rank(j)][rank(i)] = K_j(i)``."""
    base = kraw_table(N, q).table
    mat = [[1]]
    for _ in range(s):
        mat = [[a * b for a in row for b in brow] for row in mat for brow in base]
    return mat
