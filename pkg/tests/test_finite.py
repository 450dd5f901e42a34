import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrcbounds import finite
from lrcbounds.model import InapplicableBound, ParameterError


@pytest.mark.parametrize("n,d,N,expect", [(12, 3, 4, 4), (8, 3, 4, 3), (9, 9, 4, 2)])
def test_mu(n, d, N, expect):
    assert finite.mu(n, d, N) == expect


def test_mu_rejects():
    with pytest.raises(ParameterError):
        finite.mu(5, 6, 2)


def test_recursive_hamming_example():
    # N = r + rho - 1 = 7 with rho = 3
    res = finite.corollary2("hamming", 2, 14, 3, 5, 3)
    assert res.witness["mu"] == 3 and res.witness["B"] == 16
    assert res.value == 12


def test_recursive_plotkin_example():
    res = finite.corollary2("plotkin", 2, 8, 5, 2, 3)
    assert res.witness["mu"] == 2 and res.witness["B"] == 3
    assert res.witness["k_real"] == pytest.approx(2 * math.log2(3))
    assert res.value == 3


def test_recursive_plotkin_inapplicable():
    with pytest.raises(InapplicableBound):
        finite.corollary2("plotkin", 2, 20, 3, 5, 2)


@given(st.integers(2, 5), st.integers(1, 6), st.integers(2, 4), st.integers(1, 40), st.data())
def test_recursive_singleton_is_mu_r(q, r, rho, n, data):
    d = data.draw(st.integers(1, n))
    res = finite.corollary2("singleton", q, n, d, r, rho)
    assert res.value == finite.mu(n, d, r + rho - 1) * r


@pytest.mark.parametrize("n,k,r,d", [(10, 4, 2, 6), (14, 8, 4, 6), (9, 3, 5, 7)])
def test_singleton_gopalan(n, k, r, d):
    assert finite.singleton_gopalan(n, k, r) == d


@pytest.mark.parametrize("n,k,r,rho,d", [(12, 6, 3, 3, 5), (9, 2, 3, 3, 8)])
def test_singleton_rho(n, k, r, rho, d):
    assert finite.singleton_rho(n, k, r, rho) == d


@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 10))
def test_singleton_rho_two_is_gopalan(n, k, r):
    assert finite.singleton_rho(n, k, r, 2) == finite.singleton_gopalan(n, k, r)


@given(st.integers(2, 30), st.integers(1, 8), st.integers(2, 4), st.data())
def test_singleton_k_inverse(n, r, rho, data):
    d = data.draw(st.integers(1, n))
    k = finite.singleton_rho_k(n, d, r, rho).value
    if k:
        assert finite.singleton_rho(n, k, r, rho) >= d
    if k < n:
        assert finite.singleton_rho(n, k + 1, r, rho) < d


@pytest.mark.parametrize("n,d,r,k", [(8, 3, 3, 4), (33, 5, 10, 23)])
def test_shortening_examples(n, d, r, k):
    assert finite.shortening_bound(2, n, d, r).value == k


@pytest.mark.parametrize("d", [2, 3, 4])
def test_shortening_single_group(d):
    # dropping the only group leaves nothing, so that term is exactly r
    res = finite.shortening_bound(2, 4, d, 3)
    assert res.witness["terms"][1]["k"] == 3
    assert res.value <= 3


def test_recursive_singleton_vs_direct_singleton():
    for n in range(2, 41):
        for r in range(1, 8):
            for rho in (2, 3):
                for d in range(1, n + 1):
                    rec = finite.corollary2("singleton", 2, n, d, r, rho).value
                    direct = finite.singleton_rho_k(n, d, r, rho).value
                    assert rec >= direct - 1, (n, r, rho, d)


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("d", [3, 5])
@pytest.mark.parametrize("s", [2, 3])
def test_lrc_shortening_never_weaker(r, d, s):
    n = s * (r + 1)
    plain = finite.shortening_bound(2, n, d, r)
    lrc = finite.shortening_bound(2, n, d, r, lrc_recursive=True)
    assert lrc.value <= plain.value
    assert lrc.method == "sh-lrc"


def test_shortening_needs_binary():
    with pytest.raises(ParameterError):
        finite.shortening_bound(3, 8, 3, 3)


def test_shortening_witness_terms():
    res = finite.shortening_bound(2, 8, 3, 3)
    assert [t["s"] for t in res.witness["terms"]] == [0, 1, 2]
    assert min(t["k"] for t in res.witness["terms"]) == res.value
