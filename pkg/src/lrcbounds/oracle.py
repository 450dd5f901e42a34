"""Brute-force ground truth for small binary codes with disjoint repair groups.

Words are ``int`` bitmasks, bit ``p`` standing for coordinate ``p``.  Group
``g`` occupies coordinates ``g*(r+1) .. g*(r+1)+r``.  Everything here is
exponential, so the size guards below are hard limits rather than defaults.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .krawtchouk import binom, kraw_table
from .model import InapplicableBound, MultiIndex, ParameterError

MAX_CODE_LENGTH = 14
MAX_COSET_LENGTH = 20
MAX_COSETS = 2 ** 14
MAX_SUBSPACES = 2_000_000


class SizeGuardError(ParameterError):
    """The requested exhaustive search exceeds the fixed size limits."""


def _popcount(x: int) -> int:
    return x.bit_count()


def _rref(rows: Sequence[int]) -> List[int]:
    """Reduced row-echelon basis over GF(2), pivots on the highest set bit."""
    basis: List[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis = [min(b, b ^ v) for b in basis]
            basis.append(v)
    return sorted(basis, reverse=True)


def _span(rows: Sequence[int]) -> List[int]:
    """All ``2^k`` combinations, in Gray-code order."""
    words = [0]
    cur = 0
    for step in range(1, 2 ** len(rows)):
        cur ^= rows[(step & -step).bit_length() - 1]
        words.append(cur)
    return words


def group_masks(s: int, r: int) -> List[int]:
    w = r + 1
    return [((1 << w) - 1) << (g * w) for g in range(s)]


@dataclass
class BinaryCode:
    """Binary linear code given by generator rows, optionally with repair groups."""

    n: int
    rows: Tuple[int, ...]
    group_width: Optional[int] = None
    _words: Optional[List[int]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("code length must be >= 1")
        if any(v < 0 or v >> self.n for v in self.rows):
            raise ParameterError(f"generator row does not fit in {self.n} bits")
        if len(_rref(self.rows)) != len(self.rows):
            raise ParameterError("generator rows are linearly dependent")
        if self.group_width is not None and self.n % self.group_width:
            raise ParameterError("group width must divide the length")
        self.rows = tuple(self.rows)

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def s(self) -> int:
        if self.group_width is None:
            raise ParameterError("code has no repair groups")
        return self.n // self.group_width

    def codewords(self) -> List[int]:
        if self._words is None:
            self._words = _span(self.rows)
        return self._words

    @cached_property
    def min_distance(self) -> Optional[int]:
        """Minimum nonzero weight; ``None`` for the zero code."""
        weights = [_popcount(c) for c in self.codewords() if c]
        return min(weights) if weights else None

    def group_weights(self, word: int) -> MultiIndex:
        w = self.group_width
        mask = (1 << w) - 1
        return tuple(_popcount((word >> (g * w)) & mask) for g in range(self.s))

    def dual_rows(self) -> List[int]:
        """Basis of the dual code, from the null space of the generator matrix."""
        pivots = {}
        for v in _rref(self.rows):
            pivots[v.bit_length() - 1] = v
        basis = []
        for free in range(self.n):
            if free in pivots:
                continue
            y = 1 << free
            # each pivot coordinate is fixed by the free ones to make <y, row> = 0
            for p, v in pivots.items():
                if (v >> free) & 1:
                    y |= 1 << p
            basis.append(y)
        return basis


def _parity_space_basis(s: int, r: int) -> List[int]:
    """Basis of words with even weight on every group: ``e_p + e_last`` per group."""
    w = r + 1
    out = []
    for g in range(s):
        last = g * w + r
        out.extend((1 << (g * w + j)) | (1 << last) for j in range(r))
    return out


def gaussian_binomial(m: int, k: int, q: int = 2) -> int:
    if not 0 <= k <= m:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _echelon_subspaces(m: int, k: int) -> Iterator[List[int]]:
    """Every ``k``-dim subspace of GF(2)^m once, as its reduced echelon basis."""
    for pivots in itertools.combinations(range(m), k):
        # row a has a 1 at pivots[a] and free bits at later non-pivot positions
        free = [[p for p in range(pv + 1, m) if p not in pivots] for pv in pivots]
        slots = [(a, p) for a in range(k) for p in free[a]]
        for bits in range(2 ** len(slots)):
            rows = [1 << pv for pv in pivots]
            for b, (a, p) in enumerate(slots):
                if (bits >> b) & 1:
                    rows[a] |= 1 << p
            yield rows


def _guard(s: int, r: int) -> int:
    if s < 1 or r < 1:
        raise ParameterError("need s >= 1 and r >= 1")
    n = s * (r + 1)
    if n > MAX_CODE_LENGTH:
        raise SizeGuardError(f"length {n} exceeds the oracle limit {MAX_CODE_LENGTH}")
    return n


def enumerate_disjoint(s: int, r: int, k: int) -> Iterator[BinaryCode]:
    """All ``k``-dim codes inside the space of words even on each repair group.

    The group parity words lie in the dual of each such code, so each has
    locality at most ``r`` through its groups.
    """
    n = _guard(s, r)
    m = n - s
    if not 0 <= k <= m:
        raise ParameterError(f"k={k} must lie in [0, {m}]")
    if gaussian_binomial(m, k) > MAX_SUBSPACES:
        raise SizeGuardError(f"{gaussian_binomial(m, k)} subspaces exceed the oracle limit")
    basis = _parity_space_basis(s, r)
    for coords in _echelon_subspaces(m, k):
        rows = []
        for c in coords:
            word = 0
            for p in range(m):
                if (c >> p) & 1:
                    word ^= basis[p]
            rows.append(word)
        yield BinaryCode(n, tuple(rows), r + 1)


def max_dimension_exhaustive(s: int, r: int, d: int) -> int:
    """Largest ``k`` for which some enumerated code has minimum distance ``>= d``."""
    n = _guard(s, r)
    if d < 1:
        raise ParameterError("d must be >= 1")
    for k in range(n - s, 0, -1):
        if any(c.min_distance >= d for c in enumerate_disjoint(s, r, k)):
            return k
    return 0


@dataclass(frozen=True)
class GroupDistanceDistribution:
    """Pair counts by per-group distance profile, divided by ``|C|``."""

    s: int
    N: int
    counts: Dict[MultiIndex, Fraction]

    @property
    def total(self) -> Fraction:
        return sum(self.counts.values(), Fraction(0))

    def __getitem__(self, index) -> Fraction:
        return self.counts.get(tuple(index), Fraction(0))


def distance_distribution(code: BinaryCode) -> GroupDistanceDistribution:
    """By linearity every codeword sees the same profile counts as the zero word."""
    counts = Counter(code.group_weights(c) for c in code.codewords())
    return GroupDistanceDistribution(
        code.s, code.group_width, {i: Fraction(v) for i, v in sorted(counts.items())})


def delsarte_violations(dist: GroupDistanceDistribution, q: int = 2) -> List[MultiIndex]:
    """Profiles ``j != 0`` with ``sum_i a_i K_j(i) < 0``."""
    table = kraw_table(dist.N, q).table
    bad = []
    for j in itertools.product(range(dist.N + 1), repeat=dist.s):
        if not any(j):
            continue
        total = Fraction(0)
        for i, a in dist.counts.items():
            prod = 1
            for jp, ip in zip(j, i):
                prod *= table[jp][ip]
            total += a * prod
        if total < 0:
            bad.append(j)
    return bad


def verify_delsarte(code_or_dist) -> bool:
    dist = code_or_dist
    if isinstance(code_or_dist, BinaryCode):
        dist = distance_distribution(code_or_dist)
    return not delsarte_violations(dist)


def locality_of(code: BinaryCode) -> int:
    """Smallest ``r`` such that each coordinate is covered by a dual word of weight ``<= r+1``."""
    if code.k < 1:
        raise ParameterError("locality needs k >= 1")
    if code.n > MAX_CODE_LENGTH:
        raise SizeGuardError(f"length {code.n} exceeds the oracle limit {MAX_CODE_LENGTH}")
    best = [None] * code.n
    for y in _span(code.dual_rows()):
        if not y:
            continue
        w = _popcount(y)
        for p in range(code.n):
            if (y >> p) & 1 and (best[p] is None or w < best[p]):
                best[p] = w
    if any(b is None for b in best):
        raise InapplicableBound("some coordinate is not covered by any dual word")
    return max(best) - 1


def leader_count_bound(s: int, r: int, T: int) -> int:
    """Vectors of weight ``<= T`` with at most ``t`` ones per group, counting
    weight-``t`` group patterns once per complementary pair when ``r`` is odd.

    This is the sum of the first ``T + 1`` coefficients of ``g(x)^s`` with
    ``g(x) = sum_{i<=t} binom(r+1, i) x^i``, last term divided by ``2^(r mod 2)``.
    """
    t = (r + 1) // 2
    g = [binom(r + 1, i) for i in range(t + 1)]
    g[t] //= 2 ** (r % 2)
    poly = [1]
    for _ in range(s):
        nxt = [0] * (len(poly) + t)
        for a, ca in enumerate(poly):
            for b, cb in enumerate(g):
                nxt[a + b] += ca * cb
        poly = nxt
    return sum(poly[: max(T, -1) + 1])


@dataclass(frozen=True)
class CosetReport:
    s: int
    r: int
    T: int
    cosets: int
    leader_weights: Dict[int, int]
    all_leaders_spread: bool
    counted: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.all_leaders_spread and self.counted <= self.bound


def coset_leaders(s: int, r: int, t_frac: float = 1.0) -> CosetReport:
    """Scan every coset of the span of the group parity words.

    Checks that each coset has a minimum-weight member with at most
    ``t = (r+1)//2`` ones per group, and counts cosets whose leader weight is
    at most ``T = floor(t_frac * n)``.
    """
    n = s * (r + 1)
    if s < 1 or r < 1:
        raise ParameterError("need s >= 1 and r >= 1")
    if n > MAX_COSET_LENGTH or 2 ** (n - s) > MAX_COSETS:
        raise SizeGuardError(f"{2 ** (n - s)} cosets of length {n} exceed the oracle limit")
    if not 0 <= t_frac <= 1:
        raise ParameterError("t_frac must lie in [0, 1]")
    T = int(t_frac * n)
    t = (r + 1) // 2
    masks = group_masks(s, r)
    flips = _span(masks)
    code = BinaryCode(n, tuple(masks), r + 1)
    # representatives: words with the last bit of every group cleared
    free = [g * (r + 1) + j for g in range(s) for j in range(r)]
    weights: Counter = Counter()
    spread = True
    for bits in range(2 ** len(free)):
        rep = 0
        for b, p in enumerate(free):
            if (bits >> b) & 1:
                rep |= 1 << p
        coset = [rep ^ f for f in flips]
        w = min(_popcount(x) for x in coset)
        weights[w] += 1
        if not any(_popcount(x) == w and max(code.group_weights(x)) <= t for x in coset):
            spread = False
    counted = sum(v for w, v in weights.items() if w <= T)
    return CosetReport(s, r, T, 2 ** len(free), dict(sorted(weights.items())), spread,
                       counted, leader_count_bound(s, r, T))


def coset_leader_check(s: int, r: int, t_frac: float = 1.0) -> bool:
    return coset_leaders(s, r, t_frac).ok
