from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrcbounds import classical
from lrcbounds.classical import (
    BestKnownTable,
    DataFileError,
    best_known_M2,
    best_known_with_source,
    hamming_M,
    hamming_ratio,
    plotkin_M,
    singleton_M,
)
from lrcbounds.model import InapplicableBound, ParameterError


def test_formula_examples():
    assert hamming_M(2, 7, 3) == 16
    assert hamming_ratio(2, 7, 3) == 16
    assert hamming_ratio(2, 5, 3) == Fraction(32, 6)
    assert singleton_M(2, 7, 3) == 32
    assert singleton_M(3, 2, 5) == 1
    assert plotkin_M(2, 8, 5) == 5
    with pytest.raises(InapplicableBound):
        plotkin_M(2, 8, 4)
    with pytest.raises(ParameterError):
        hamming_M(1, 3, 1)


@pytest.mark.parametrize("n,d,expect", [(4, 3, 2), (9, 4, 20), (7, 3, 16), (5, 2, 16), (3, 5, 1), (4, 1, 16)])
def test_best_known_examples(n, d, expect):
    assert best_known_M2(n, d) == expect


def test_bundled_table_is_sane():
    table = classical.default_table()
    assert len(table) > 0
    assert table.violations() == []
    # entries need not beat the formulas, but the combined value never exceeds them
    for n, d in table.bounds:
        assert best_known_M2(n, d) == min(table.get(n, d), best_known_M2(n, d, BestKnownTable({}), False))


@given(st.integers(3, 24), st.integers(3, 10))
def test_best_known_monotone(n, d):
    v = best_known_M2(n, d, strict=False)
    assert best_known_M2(n + 1, d, strict=False) >= v
    assert best_known_M2(n, d + 1, strict=False) <= v
    assert v <= hamming_M(2, n, d) and v <= singleton_M(2, n, d)


def test_missing_entry_is_strict():
    table = BestKnownTable({})
    with pytest.raises(KeyError):
        best_known_M2(10, 3, table)
    assert best_known_with_source(10, 3, table, strict=False) == (93, "hamming")


@pytest.mark.parametrize("text", [
    "5,3\n",
    "5,x,4,exact\n",
    "0,3,4,exact\n",
    "5,3,4,\n",
    "5,3,4,exact\n5,3,4,exact\n",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(DataFileError):
        BestKnownTable.parse(text)


def test_parse_skips_comments():
    t = BestKnownTable.parse("# header\n\n5,3,4,exact\n")
    assert t.get(5, 3) == 4 and t.source(5, 3) == "exact"


def test_data_dir_override(tmp_path, monkeypatch):
    (tmp_path / classical.DATA_FILE).write_text("9,4,19,custom\n")
    monkeypatch.setenv(classical.DATA_ENV, str(tmp_path))
    assert classical.data_path() == tmp_path / classical.DATA_FILE
    assert best_known_with_source(9, 4) == (19, "table:custom")


def test_data_dir_corrupt(tmp_path, monkeypatch):
    (tmp_path / classical.DATA_FILE).write_text("9,4,lots,custom\n")
    monkeypatch.setenv(classical.DATA_ENV, str(tmp_path))
    with pytest.raises(DataFileError):
        classical.default_table()


def test_data_dir_not_monotone(tmp_path, monkeypatch):
    (tmp_path / classical.DATA_FILE).write_text("9,4,20,a\n10,4,19,b\n")
    monkeypatch.setenv(classical.DATA_ENV, str(tmp_path))
    with pytest.raises(DataFileError):
        classical.default_table()


def test_data_dir_missing(tmp_path, monkeypatch):
    monkeypatch.setenv(classical.DATA_ENV, str(tmp_path / "nowhere"))
    with pytest.raises(DataFileError):
        classical.default_table()
