"""LP problem and solution records, plus the plain-text debug format."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, TextIO, Tuple, Union

Scalar = Union[int, Fraction, float]


class LpError(Exception):
    """Base class for LP solver failures."""


class DimensionError(LpError, ValueError):
    pass


class IterationLimitError(LpError):
    """The simplex method hit its pivot budget before reaching a terminal status."""


class DualInfeasibleError(LpError):
    """A proposed dual vector violates a dual constraint, so it certifies nothing."""

    def __init__(self, message: str, column: Optional[int] = None):
        super().__init__(message)
        self.column = column


def _as_exact(x) -> Union[int, Fraction]:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise DimensionError("LP coefficients must be finite")
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class LpProblem:
    """``maximize c.a  subject to  A a >= b,  a >= 0``.

    Coefficients are stored exactly (ints or Fractions); floats are converted
    to their exact binary value on construction.
    """

    c: Tuple
    A: Tuple[Tuple, ...]
    b: Tuple
    var_names: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        c = tuple(_as_exact(v) for v in self.c)
        A = tuple(tuple(_as_exact(v) for v in row) for row in self.A)
        b = tuple(_as_exact(v) for v in self.b)
        if len(A) != len(b):
            raise DimensionError(f"{len(A)} constraint rows but {len(b)} right-hand sides")
        for i, row in enumerate(A):
            if len(row) != len(c):
                raise DimensionError(f"row {i} has {len(row)} entries, expected {len(c)}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def nvars(self) -> int:
        return len(self.c)

    @property
    def nrows(self) -> int:
        return len(self.b)


@dataclass
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    mode: str  # "exact" | "float"
    objective: Optional[Scalar] = None
    primal: Optional[List[Scalar]] = None
    dual: Optional[List[Scalar]] = None
    iterations: int = 0
    # optimal basis columns: structural 0..n-1, then one slack per row
    basis: Optional[List[int]] = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def _fmt(x) -> str:
    x = _as_exact(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def dump(problem: LpProblem, fh: TextIO) -> None:
    """Write ``problem`` in the debug format.

    Line 1 is ``max <nvars> <nrows>``, line 2 the objective coefficients, then
    one constraint per line with its coefficients followed by ``>= rhs``.
    """
    fh.write(f"max {problem.nvars} {problem.nrows}\n")
    fh.write(" ".join(_fmt(v) for v in problem.c) + "\n")
    for row, rhs in zip(problem.A, problem.b):
        fh.write(" ".join(_fmt(v) for v in row) + f" >= {_fmt(rhs)}\n")


def dumps(problem: LpProblem) -> str:
    import io

    buf = io.StringIO()
    dump(problem, buf)
    return buf.getvalue()


def loads(text: str) -> LpProblem:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DimensionError("empty LP dump")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "max":
        raise DimensionError(f"bad header line: {lines[0]!r}")
    nvars, nrows = int(head[1]), int(head[2])
    c = [Fraction(tok) for tok in lines[1].split()] if nvars else []
    if len(c) != nvars or len(lines) != 2 + nrows:
        raise DimensionError("LP dump does not match its header")
    A: List[List[Fraction]] = []
    b: List[Fraction] = []
    for ln in lines[2:]:
        lhs, sep, rhs = ln.partition(">=")
        if not sep:
            raise DimensionError(f"constraint line without '>=': {ln!r}")
        A.append([Fraction(tok) for tok in lhs.split()])
        b.append(Fraction(rhs.strip()))
    return LpProblem(tuple(c), tuple(tuple(r) for r in A), tuple(b))


def residuals(problem: LpProblem, primal: Sequence[Scalar]) -> List[Scalar]:
    """``A a - b`` row by row (nonnegative when feasible)."""
    return [sum(a * x for a, x in zip(row, primal) if x) - rhs
            for row, rhs in zip(problem.A, problem.b)]
