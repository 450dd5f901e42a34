"""Finite-length comparison tables: shortening bound vs. LP bound, binary, r = 2..10."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import finite
from .lpbound import lp_dimension_bound
from .model import CodeParams

R_VALUES = tuple(range(2, 11))

# table id -> (d, s)
TABLES: Dict[str, Tuple[int, int]] = {"I": (3, 2), "II": (3, 3), "III": (5, 2), "IV": (5, 3)}

# published (SH, LP) rows, indexed like R_VALUES
PUBLISHED: Dict[str, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {
    "I": ((3, 4, 6, 8, 10, 11, 13, 15, 17), (2, 4, 5, 7, 9, 11, 12, 14, 16)),
    "II": ((5, 7, 10, 13, 16, 18, 21, 24, 27), (4, 7, 9, 12, 15, 18, 20, 23, 26)),
    "III": ((1, 2, 3, 5, 7, 8, 10, 12, 13), (1, 2, 3, 5, 6, 8, 9, 11, 13)),
    "IV": ((2, 5, 7, 10, 13, 15, 18, 21, 23), (2, 4, 6, 9, 11, 14, 17, 19, 22)),
}


@dataclass(frozen=True)
class TableRow:
    table: str
    r: int
    sh: int
    lp: int
    sh_published: int
    lp_published: int
    sh_witness: dict

    @property
    def flag(self) -> str:
        notes = []
        if self.sh != self.sh_published:
            w = self.sh_witness
            d = TABLES[self.table][0]
            notes.append(f"SH published {self.sh_published}; bundled M2({w['residual_length']},"
                         f"{d})={w['M']} from {w['source']} at s={w['s']}")
        if self.lp != self.lp_published:
            notes.append(f"LP published {self.lp_published}")
        return "; ".join(notes)


def _cell(args) -> Tuple[int, int, dict]:
    table, r = args
    d, s = TABLES[table]
    sh = finite.shortening_bound(2, s * (r + 1), d, r)
    lp = lp_dimension_bound(CodeParams(2, s, r, 2, d))
    witness = {k: sh.witness[k] for k in ("s", "residual_length", "M", "source")}
    return sh.value, lp.value, witness


def compute(tables=tuple(TABLES), jobs: Optional[int] = None) -> List[TableRow]:
    """All cells of the requested tables, in table then ``r`` order.

    Cells run in a process pool when ``jobs`` is not 1; the output order does
    not depend on the worker count.
    """
    cells = [(t, r) for t in tables for r in R_VALUES]
    if jobs == 1:
        results = list(map(_cell, cells))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell, cells))
    rows = []
    for (t, r), (sh, lp, w) in zip(cells, results):
        i = R_VALUES.index(r)
        rows.append(TableRow(t, r, sh, lp, PUBLISHED[t][0][i], PUBLISHED[t][1][i], w))
    return rows
