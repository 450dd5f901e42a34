import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrcbounds.krawtchouk import (binom, kraw_table, krawtchouk, multi_krawtchouk,
                                  product_matrix, valency)
from lrcbounds.model import ParameterError


@pytest.mark.parametrize("n, q, j, x, value", [(3, 2, 1, 1, 1), (4, 2, 2, 0, 6), (3, 3, 1, 0, 6)])
def test_krawtchouk_examples(n, q, j, x, value):
    assert krawtchouk(n, q, j, x) == value


def test_multi_krawtchouk_examples():
    assert multi_krawtchouk(3, 2, (1, 2), (0, 0)) == 9
    assert all(multi_krawtchouk(3, 2, (0, 0), i) == 1
               for i in itertools.product(range(4), repeat=2))
    assert multi_krawtchouk(3, 2, (1, 1), (1, 1)) == 1
    with pytest.raises(ParameterError):
        multi_krawtchouk(3, 2, (1,), (1, 1))


def test_valency_examples():
    assert valency(4, 2, (0, 0)) == 1
    assert valency(4, 2, (2, 1)) == 24 == multi_krawtchouk(4, 2, (2, 1), (0, 0))
    assert valency(3, 3, (1,)) == 6


def test_argument_checks():
    with pytest.raises(ParameterError):
        krawtchouk(3, 2, 4, 0)
    with pytest.raises(ParameterError):
        krawtchouk(3, 1, 1, 0)


@given(st.integers(0, 12), st.integers(2, 5), st.data())
def test_table_structure(n, q, data):
    t = kraw_table(n, q)
    x = data.draw(st.integers(0, n))
    j = data.draw(st.integers(0, n))
    assert t(0, x) == 1
    assert t(j, 0) == comb(n, j) * (q - 1) ** j
    if q == 2 and n >= 1:
        assert t(1, x) == n - 2 * x
    # reciprocity e(x) K_j(x) = e(j) K_x(j)
    assert t.weight(x) * t(j, x) == t.weight(j) * t(x, j)


def test_reciprocity_multi_exhaustive():
    for q, N, s in itertools.product((2, 3), range(1, 7), (1, 2)):
        idx = list(itertools.product(range(N + 1), repeat=s))
        for i in idx:
            for j in idx:
                assert valency(N, q, i) * multi_krawtchouk(N, q, j, i) == \
                    valency(N, q, j) * multi_krawtchouk(N, q, i, j)


def test_orthogonality_scalar():
    for q, n in itertools.product((2, 3, 4), range(0, 9)):
        t = kraw_table(n, q)
        for i, j in itertools.product(range(n + 1), repeat=2):
            total = sum(t.weight(x) * t(i, x) * t(j, x) for x in range(n + 1))
            assert total == (q ** n * t.weight(i) if i == j else 0)


def test_product_matrix_matches_multi():
    N, q, s = 3, 2, 2
    M = product_matrix(N, q, s)
    idx = list(itertools.product(range(N + 1), repeat=s))
    for a, j in enumerate(idx):
        for b, i in enumerate(idx):
            assert M[a][b] == multi_krawtchouk(N, q, j, i)


def test_binom_outside_range():
    assert binom(5, 6) == 0 and binom(5, -1) == 0 and binom(10, 3) == 120
