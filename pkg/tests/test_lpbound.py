from fractions import Fraction

import pytest

from lrcbounds import ratlp
from lrcbounds.lpbound import (
    CertificateInfeasible,
    DualCertificate,
    annihilator_coefficients,
    build_primal,
    check_dual_certificate,
    enumerate_T,
    lp_dimension_bound,
    singleton_certificate,
    split_distance,
)
from lrcbounds.model import CodeParams
from lrcbounds.tables import PUBLISHED, R_VALUES, TABLES


def test_enumerate_T_small():
    # N = 2, rho = 2: group entries are 0 or 2
    T = enumerate_T(CodeParams(2, 2, 1, 2, 2))
    assert sorted(T.indices) == [(0, 2), (2, 0), (2, 2)]
    assert (2, 2) in T and (1, 1) not in T


def test_primal_sizes():
    p = build_primal(CodeParams(2, 2, 2, 2, 3))  # N = 3
    assert (p.nvars, p.nrows) == (6, 15)
    assert build_primal(CodeParams(2, 1, 2, 2, 2)).nrows == 3
    assert build_primal(CodeParams(2, 3, 10, 2, 3)).nrows == 12 ** 3 - 1


@pytest.mark.parametrize("table,r", [("I", 2), ("II", 10), ("IV", 5)])
def test_published_lp_cells(table, r):
    d, s = TABLES[table]
    res = lp_dimension_bound(CodeParams(2, s, r, 2, d))
    assert res.value == PUBLISHED[table][1][R_VALUES.index(r)]
    assert res.witness["certified"]


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("d", [3, 4, 5])
def test_symmetric_reduction_matches_full(r, d):
    params = CodeParams(2, 2, r, 2, d)
    full = ratlp.solve(build_primal(params), mode="exact")
    sym = ratlp.solve(build_primal(params, symmetric=True), mode="exact")
    assert full.objective == sym.objective
    assert lp_dimension_bound(params, symmetric=True).value == \
        lp_dimension_bound(params, symmetric=False).value


def test_float_and_exact_modes_agree():
    params = CodeParams(2, 2, 4, 2, 5)
    assert lp_dimension_bound(params, mode="float").value == \
        lp_dimension_bound(params, mode="exact").value


def test_zero_certificate_rejected():
    params = CodeParams(2, 2, 2, 2, 3)
    # f = 1 is positive everywhere on T
    with pytest.raises(CertificateInfeasible):
        check_dual_certificate(params, DualCertificate(3, 2))


def test_negative_certificate_rejected():
    params = CodeParams(2, 2, 2, 2, 3)
    cert = DualCertificate(3, 2, coeffs={(1, 0): Fraction(-1)})
    with pytest.raises(CertificateInfeasible) as info:
        check_dual_certificate(params, cert)
    assert info.value.index == (1, 0)


def test_lp_dual_is_a_valid_certificate():
    params = CodeParams(2, 2, 3, 2, 4)
    res = lp_dimension_bound(params, mode="exact")
    f0 = check_dual_certificate(params, res.witness["certificate"])
    assert f0 == res.witness["cardinality_bound"] == 1 + res.witness["lp_optimum"]


def test_annihilator_coefficients():
    assert annihilator_coefficients(3, 1) == [1, 1, 1, 1]
    assert annihilator_coefficients(3, 3) == [1, Fraction(1, 3), 0, 0]
    with pytest.raises(ValueError):
        annihilator_coefficients(3, 0)


@pytest.mark.parametrize("d,N,expect", [(4, 3, (1, 1)), (3, 3, (0, 3)), (7, 3, (2, 1)), (1, 3, (0, 1))])
def test_split_distance(d, N, expect):
    assert split_distance(d, N) == expect


@pytest.mark.parametrize("q,s,r,rho,d,k", [(2, 2, 2, 2, 4, 2), (4, 3, 4, 3, 8, 8)])
def test_singleton_certificate_examples(q, s, r, rho, d, k):
    _, res = singleton_certificate(CodeParams(q, s, r, rho, d))
    assert res.value == k


@pytest.mark.parametrize("table", list(TABLES))
def test_singleton_certificate_dominates_lp(table):
    d, s = TABLES[table]
    for r in (2, 3, 4):
        params = CodeParams(2, s, r, 2, d)
        assert singleton_certificate(params)[1].value >= lp_dimension_bound(params).value
