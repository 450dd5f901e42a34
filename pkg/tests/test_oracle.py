from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrcbounds import oracle
from lrcbounds.model import InapplicableBound, ParameterError
from lrcbounds.oracle import BinaryCode, GroupDistanceDistribution


def test_echelon_enumeration_counts():
    for m in range(0, 7):
        for k in range(0, m + 1):
            subspaces = list(oracle._echelon_subspaces(m, k))
            assert len(subspaces) == oracle.gaussian_binomial(m, k)
            assert len({tuple(oracle._rref(rows)) for rows in subspaces}) == len(subspaces)


def test_enumerate_disjoint_examples():
    assert len(list(oracle.enumerate_disjoint(2, 2, 2))) == 35
    zero = list(oracle.enumerate_disjoint(2, 2, 0))
    assert len(zero) == 1 and zero[0].k == 0 and zero[0].min_distance is None
    assert len(list(oracle.enumerate_disjoint(1, 2, 2))) == 1


def test_enumerated_codes_are_even_on_groups():
    masks = oracle.group_masks(2, 3)
    for code in oracle.enumerate_disjoint(2, 3, 3):
        for word in code.codewords():
            assert all(bin(word & g).count("1") % 2 == 0 for g in masks)


def test_size_guards():
    with pytest.raises(oracle.SizeGuardError):
        list(oracle.enumerate_disjoint(3, 4, 2))
    with pytest.raises(oracle.SizeGuardError):
        oracle.coset_leaders(5, 4)
    with pytest.raises(ParameterError):
        list(oracle.enumerate_disjoint(2, 2, 5))


def test_max_dimension_examples():
    assert oracle.max_dimension_exhaustive(2, 2, 3) == 2
    # the only words even on both groups of 3 have weight <= 4, so d = 6 leaves
    # only the zero code
    assert oracle.max_dimension_exhaustive(2, 2, 6) == 0
    for s, r in [(1, 2), (2, 1), (2, 3), (3, 2)]:
        assert oracle.max_dimension_exhaustive(s, r, 1) == s * r


def test_distance_distribution_examples():
    even3 = BinaryCode(3, (0b011, 0b110), 3)
    dist = oracle.distance_distribution(even3)
    assert dist.counts == {(0,): 1, (2,): 3}
    zero = BinaryCode(6, (), 3)
    assert oracle.distance_distribution(zero).counts == {(0, 0): 1}


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 2), st.integers(1, 3), st.data())
def test_distribution_total_and_delsarte(s, r, data):
    k = data.draw(st.integers(0, s * r))
    codes = list(oracle.enumerate_disjoint(s, r, k))
    code = codes[data.draw(st.integers(0, len(codes) - 1))]
    dist = oracle.distance_distribution(code)
    assert dist.total == 2 ** k and dist[(0,) * s] == 1
    assert oracle.verify_delsarte(code)


def test_delsarte_mutation_detected():
    code = BinaryCode(6, (0b000101, 0b000110, 0b101000), 3)
    dist = oracle.distance_distribution(code)
    assert dist.counts == {(0, 0): 1, (0, 2): 1, (2, 0): 3, (2, 2): 3}
    assert oracle.verify_delsarte(dist)
    broken = dict(dist.counts)
    broken[(0, 2)] -= 1
    bad = oracle.delsarte_violations(GroupDistanceDistribution(2, 3, broken))
    assert (1, 0) in bad


def test_locality_examples():
    assert oracle.locality_of(BinaryCode(4, (0b0011, 0b0110, 0b1100), 4)) == 3
    assert oracle.locality_of(BinaryCode(5, (0b11111,))) == 1
    for code in oracle.enumerate_disjoint(2, 2, 2):
        assert oracle.locality_of(code) <= 2
    with pytest.raises(InapplicableBound):
        oracle.locality_of(BinaryCode(3, (0b001, 0b010, 0b100)))


def test_dual_rows_are_orthogonal():
    code = BinaryCode(7, (0b1110000, 0b0011100, 0b1010101))
    dual = code.dual_rows()
    assert len(dual) == 4
    for y in dual:
        assert all(bin(y & g).count("1") % 2 == 0 for g in code.rows)


def test_binary_code_validation():
    with pytest.raises(ParameterError):
        BinaryCode(3, (0b011, 0b011))
    with pytest.raises(ParameterError):
        BinaryCode(3, (0b1000,))
    with pytest.raises(ParameterError):
        BinaryCode(4, (0b11,), 3)


def test_coset_examples():
    rep = oracle.coset_leaders(2, 2, 1.0)
    assert rep.cosets == 16 and rep.all_leaders_spread and rep.ok
    one = oracle.coset_leaders(1, 3)
    assert one.leader_weights == {0: 1, 1: 4, 2: 3}
    assert one.counted == one.bound == 8


def test_leader_count_bound():
    # odd r halves the middle group weight
    assert oracle.leader_count_bound(1, 3, 4) == 1 + 4 + 3
    assert oracle.leader_count_bound(1, 2, 4) == 1 + 3
    assert oracle.leader_count_bound(2, 2, 4) == 16
    assert oracle.leader_count_bound(2, 2, -1) == 0


@pytest.mark.parametrize("s,r", [(1, 1), (2, 1), (3, 1), (2, 3), (3, 3), (4, 2), (2, 5)])
@pytest.mark.parametrize("frac", [0.25, 0.5, 1.0])
def test_coset_check(s, r, frac):
    assert oracle.coset_leader_check(s, r, frac)
