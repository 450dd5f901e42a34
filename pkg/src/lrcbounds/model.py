"""Parameter and result types shared by the bound computations."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence, Tuple, Union

Number = Union[int, Fraction, float]
MultiIndex = Tuple[int, ...]


class ParameterError(ValueError):
    """Raised when a parameter combination violates a model invariant."""


class InapplicableBound(ValueError):
    """Raised when a bound's premise does not hold for the given parameters."""


class BoundKind(str, Enum):
    DIMENSION = "dimension-bound-k"
    RATE = "rate-bound-R"
    CARDINALITY = "cardinality-bound-M"


@dataclass(frozen=True)
class CodeParams:
    """Finite-length query for a code with ``s`` disjoint repair groups.

    Each group has width ``N = r + rho - 1``, so the length is ``n = s * N``.
    """

    q: int
    s: int
    r: int
    rho: int
    d: int

    def __post_init__(self):
        for name in ("q", "s", "r", "rho", "d"):
            if not isinstance(getattr(self, name), int):
                raise ParameterError(f"{name} must be an integer")
        if self.q < 2:
            raise ParameterError(f"alphabet size q={self.q} must be >= 2")
        if self.s < 1:
            raise ParameterError(f"group count s={self.s} must be >= 1")
        if self.r < 1:
            raise ParameterError(f"locality r={self.r} must be >= 1")
        if self.rho < 2:
            raise ParameterError(f"local distance rho={self.rho} must be >= 2")
        if not 1 <= self.d <= self.n:
            raise ParameterError(f"distance d={self.d} must lie in [1, n={self.n}]")

    @property
    def N(self) -> int:
        return self.r + self.rho - 1

    @property
    def n(self) -> int:
        return self.s * self.N

    @classmethod
    def from_length(cls, q: int, n: int, r: int, rho: int, d: int) -> "CodeParams":
        """Build params from a code length, which must be a multiple of ``r + rho - 1``."""
        N = r + rho - 1
        if N < 1 or n % N:
            raise ParameterError(
                f"length n={n} is not a multiple of the group width N=r+rho-1={N}")
        return cls(q=q, s=n // N, r=r, rho=rho, d=d)

    def as_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "s": self.s, "r": self.r,
                "rho": self.rho, "N": self.N, "d": self.d}


@dataclass(frozen=True)
class AsymptoticQuery:
    r: int
    delta: float
    rho: int = 2
    q: int = 2

    def __post_init__(self):
        if not 0.0 <= self.delta <= 0.5:
            raise ParameterError(f"relative distance delta={self.delta} must lie in [0, 1/2]")
        if self.r < 1:
            raise ParameterError("locality r must be >= 1")


@dataclass(frozen=True)
class BoundResult:
    value: Number
    kind: BoundKind
    method: str
    witness: dict = field(default_factory=dict, compare=False)
    exact: bool = True

    def __post_init__(self):
        if self.kind is BoundKind.DIMENSION and self.exact:
            if not isinstance(self.value, int) or self.value < 0:
                raise ParameterError(f"dimension bound must be a nonnegative integer, got {self.value!r}")
        if self.kind is BoundKind.RATE and not -1e-12 <= float(self.value) <= 1 + 1e-12:
            raise ParameterError(f"rate bound {self.value!r} outside [0, 1]")


def max_dimension(q: int, bound) -> int:
    """Largest integer ``k >= 0`` with ``q**k <= bound``, compared exactly."""
    bound = Fraction(bound)
    if bound < 1:
        raise ParameterError(f"cardinality bound {bound} is below 1")
    k = 0
    power = q
    while power <= bound:
        k += 1
        power *= q
    return k


def check_index(index: Sequence[int], N: int) -> None:
    for x in index:
        if not 0 <= x <= N:
            raise ParameterError(f"multi-index entry {x} outside [0, {N}]")


def rank_of(index: Sequence[int], N: int) -> int:
    """Mixed-radix rank of ``index``; the last coordinate varies fastest."""
    check_index(index, N)
    rank = 0
    for x in index:
        rank = rank * (N + 1) + x
    return rank


def index_of(rank: int, s: int, N: int) -> MultiIndex:
    if not 0 <= rank < (N + 1) ** s:
        raise ParameterError(f"rank {rank} outside [0, {(N + 1) ** s})")
    out = []
    for _ in range(s):
        rank, x = divmod(rank, N + 1)
        out.append(x)
    return tuple(reversed(out))


def format_number(value: Any) -> Any:
    """JSON-friendly rendering: rationals as ``"p/q"``, floats at 12 significant digits."""
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {str(k): format_number(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [format_number(v) for v in value]
    return value
