import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrcbounds.model import (BoundKind, BoundResult, CodeParams, ParameterError, format_number,
                             index_of, max_dimension, rank_of)


@pytest.mark.parametrize("index, N, rank", [((0, 0), 11, 0), ((0, 1), 11, 1), ((1, 0), 11, 12),
                                            ((11, 11), 11, 143)])
def test_rank_examples(index, N, rank):
    assert rank_of(index, N) == rank
    assert index_of(rank, len(index), N) == index


def test_rank_is_lexicographic_position():
    for s, N in [(1, 4), (2, 3), (3, 2)]:
        for pos, idx in enumerate(itertools.product(range(N + 1), repeat=s)):
            assert rank_of(idx, N) == pos


def test_rank_roundtrip_exhaustive():
    for s in range(1, 5):
        for N in range(1, 13):
            total = (N + 1) ** s
            if total > 30000:
                continue
            for rank in range(total):
                assert rank_of(index_of(rank, s, N), N) == rank


@given(st.integers(1, 4), st.integers(0, 12), st.data())
def test_rank_roundtrip_property(s, N, data):
    idx = tuple(data.draw(st.lists(st.integers(0, N), min_size=s, max_size=s)))
    assert index_of(rank_of(idx, N), s, N) == idx


def test_rank_rejects_out_of_range():
    with pytest.raises(ParameterError):
        rank_of((0, 12), 11)
    with pytest.raises(ParameterError):
        index_of(144, 2, 11)


@pytest.mark.parametrize("kwargs", [
    dict(q=1, s=2, r=2, rho=2, d=3),
    dict(q=2, s=0, r=2, rho=2, d=3),
    dict(q=2, s=2, r=0, rho=2, d=3),
    dict(q=2, s=2, r=2, rho=1, d=3),
    dict(q=2, s=2, r=2, rho=2, d=0),
    dict(q=2, s=2, r=2, rho=2, d=7),
])
def test_code_params_rejects(kwargs):
    with pytest.raises(ParameterError):
        CodeParams(**kwargs)


def test_code_params_derived():
    p = CodeParams(q=2, s=3, r=4, rho=3, d=5)
    assert (p.N, p.n) == (6, 18)
    assert CodeParams.from_length(2, 18, 4, 3, 5) == p
    with pytest.raises(ParameterError):
        CodeParams.from_length(2, 17, 4, 3, 5)


@given(st.integers(2, 5), st.integers(1, 10 ** 6))
def test_max_dimension_property(q, bound):
    k = max_dimension(q, bound)
    assert q ** k <= bound < q ** (k + 1)


def test_max_dimension_is_exact_at_powers():
    assert max_dimension(2, 1024) == 10
    assert max_dimension(2, Fraction(1023, 1)) == 9
    assert max_dimension(3, Fraction(27)) == 3
    with pytest.raises(ParameterError):
        max_dimension(2, Fraction(1, 2))


def test_bound_result_invariants():
    with pytest.raises(ParameterError):
        BoundResult(-1, BoundKind.DIMENSION, "x")
    with pytest.raises(ParameterError):
        BoundResult(1.5, BoundKind.RATE, "x")
    BoundResult(0.25, BoundKind.RATE, "x", exact=False)


def test_format_number():
    assert format_number(Fraction(3, 4)) == "3/4"
    assert format_number(Fraction(4, 2)) == 2
    assert format_number(0.1234567890123456) == 0.123456789012
    assert format_number({"a": [Fraction(1, 3)]}) == {"a": ["1/3"]}
