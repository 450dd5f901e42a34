"""Upper bounds on the size of unrestricted codes.

Formulas (Hamming, Singleton, Plotkin) are evaluated exactly.  For binary
codes a bundled table of best-known upper bounds ``data/m2_upper.csv`` is
used as well; set ``LRC_DATA_DIR`` to load ``m2_upper.csv`` from elsewhere.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, Optional, Tuple

from .krawtchouk import binom
from .model import InapplicableBound, ParameterError

DATA_ENV = "LRC_DATA_DIR"
DATA_FILE = "m2_upper.csv"


class DataFileError(RuntimeError):
    """The best-known-bounds file is missing or malformed."""


def _check(q: int, n: int, d: int) -> None:
    if q < 2 or n < 0 or d < 1:
        raise ParameterError(f"need q >= 2, n >= 0, d >= 1 (got q={q}, n={n}, d={d})")


def hamming_ratio(q: int, n: int, d: int) -> Fraction:
    """``q^n / V(n, e)`` with ``e = (d-1)//2``, before flooring."""
    _check(q, n, d)
    e = (d - 1) // 2
    ball = sum(binom(n, i) * (q - 1) ** i for i in range(e + 1))
    return Fraction(q ** n, ball)


def hamming_M(q: int, n: int, d: int) -> int:
    _check(q, n, d)
    e = (d - 1) // 2
    ball = sum(binom(n, i) * (q - 1) ** i for i in range(e + 1))
    return q ** n // ball


def singleton_M(q: int, n: int, d: int) -> int:
    _check(q, n, d)
    if d > n:
        return 1
    return q ** (n - d + 1)


def plotkin_M(q: int, n: int, d: int) -> int:
    """``floor(d / (d - (q-1)n/q))``; only valid when ``d*q > (q-1)*n``."""
    _check(q, n, d)
    if d * q <= (q - 1) * n:
        raise InapplicableBound(
            f"Plotkin bound needs d > (q-1)n/q, got q={q}, n={n}, d={d}")
    return int(Fraction(d) / (d - Fraction((q - 1) * n, q)))


@dataclass(frozen=True)
class BestKnownTable:
    """Upper bounds on binary code sizes keyed by ``(n, d)``."""

    bounds: Dict[Tuple[int, int], int]
    sources: Dict[Tuple[int, int], str] = field(default_factory=dict)
    path: Optional[str] = None

    def get(self, n: int, d: int) -> Optional[int]:
        return self.bounds.get((n, d))

    def source(self, n: int, d: int) -> Optional[str]:
        return self.sources.get((n, d))

    def __contains__(self, key) -> bool:
        return key in self.bounds

    def __len__(self) -> int:
        return len(self.bounds)

    @classmethod
    def from_csv(cls, path) -> "BestKnownTable":
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as exc:
            raise DataFileError(f"cannot read {path}: {exc}") from exc
        return cls.parse(text, str(path))

    @classmethod
    def parse(cls, text: str, origin: str = "<string>") -> "BestKnownTable":
        bounds: Dict[Tuple[int, int], int] = {}
        sources: Dict[Tuple[int, int], str] = {}
        lines = [(no, ln) for no, ln in enumerate(text.splitlines(), 1)
                 if ln.strip() and not ln.lstrip().startswith("#")]
        for (no, _), row in zip(lines, csv.reader(ln for _, ln in lines)):
            where = f"{origin}:{no}"
            if len(row) != 4:
                raise DataFileError(f"{where}: expected n,d,bound,source; got {row!r}")
            try:
                n, d, bound = (int(v.strip()) for v in row[:3])
            except ValueError:
                raise DataFileError(f"{where}: n, d and bound must be integers") from None
            src = row[3].strip()
            if n < 1 or d < 1 or bound < 1 or not src:
                raise DataFileError(f"{where}: need n, d, bound >= 1 and a source")
            if (n, d) in bounds:
                raise DataFileError(f"{where}: duplicate entry for n={n}, d={d}")
            bounds[(n, d)] = bound
            sources[(n, d)] = src
        return cls(bounds, sources, origin)

    def violations(self):
        """Pairs of entries breaking monotonicity in ``n`` or ``d``."""
        out = []
        for (n, d), v in self.bounds.items():
            up = self.bounds.get((n + 1, d))
            if up is not None and up < v:
                out.append(((n, d), (n + 1, d)))
            harder = self.bounds.get((n, d + 1))
            if harder is not None and harder > v:
                out.append(((n, d), (n, d + 1)))
        return out


def data_path() -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override) / DATA_FILE
    return Path(str(resources.files("lrcbounds") / "data" / DATA_FILE))


@lru_cache(maxsize=8)
def _load(path: str) -> BestKnownTable:
    table = BestKnownTable.from_csv(path)
    bad = table.violations()
    if bad:
        raise DataFileError(f"{path}: entries not monotone, e.g. {bad[0]}")
    return table


def default_table() -> BestKnownTable:
    """The table at ``$LRC_DATA_DIR/m2_upper.csv`` or the bundled one."""
    return _load(str(data_path()))


def best_known_M2(n: int, d: int, table: Optional[BestKnownTable] = None,
                  strict: bool = True) -> int:
    """Smallest of the table entry and the Hamming, Plotkin and Singleton bounds.

    Length 0 codes and ``d > n`` allow a single word; ``d <= 1`` allows all
    ``2^n`` and ``d = 2`` exactly ``2^(n-1)``.  In strict mode a missing table
    entry is an error, otherwise the formulas alone are used.
    """
    return best_known_with_source(n, d, table, strict)[0]


def best_known_with_source(n: int, d: int, table: Optional[BestKnownTable] = None,
                           strict: bool = True) -> Tuple[int, str]:
    """Like :func:`best_known_M2` but also names where the winning value came from."""
    if n < 0:
        raise ParameterError(f"length must be >= 0, got {n}")
    if n == 0 or d > n:
        return 1, "trivial"
    if d <= 1:
        return 2 ** n, "trivial"
    if d == 2:
        # the even-weight code is optimal
        return 2 ** (n - 1), "parity"
    if table is None:
        table = default_table()
    entry = table.get(n, d)
    if entry is None and strict:
        raise KeyError(f"no best-known entry for n={n}, d={d}")
    candidates = []
    if entry is not None:
        candidates.append((entry, f"table:{table.source(n, d)}"))
    candidates += [(hamming_M(2, n, d), "hamming"), (singleton_M(2, n, d), "singleton")]
    try:
        candidates.append((plotkin_M(2, n, d), "plotkin"))
    except InapplicableBound:
        pass
    # first listed wins ties, so table entries are reported when they agree
    return min(candidates, key=lambda c: c[0])
