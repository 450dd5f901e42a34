"""Delsarte linear programming bound for codes with disjoint repair groups.

The code length is ``n = s*N`` with ``s`` repair groups of width
``N = r + rho - 1``.  The distance distribution is indexed by the per-group
distance profile ``i = (i_1, ..., i_s)``; it is supported on ``{0} u T`` where
``T`` collects profiles of total weight ``>= d`` whose entries avoid
``1..rho-1``.  Eigenvalues of the product scheme are products of Krawtchouk
values, which gives the constraint matrix.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import ratlp
from .krawtchouk import binom, kraw_table, product_matrix
from .model import (BoundKind, BoundResult, CodeParams, MultiIndex, index_of, max_dimension,
                    rank_of)

# exact solves are used below this many tableau cells in "auto" mode
AUTO_EXACT_CELLS = 6_000
# above this many rows the symmetry-reduced LP is solved instead of the full one
AUTO_FULL_ROWS = 400


class CertificateInfeasible(ValueError):
    """A dual certificate violates one of its feasibility conditions."""

    def __init__(self, message: str, index: Optional[MultiIndex] = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class FeasibleIndexSet:
    s: int
    N: int
    ranks: Tuple[int, ...]

    @property
    def indices(self) -> List[MultiIndex]:
        return [index_of(k, self.s, self.N) for k in self.ranks]

    def __len__(self):
        return len(self.ranks)

    def __contains__(self, index) -> bool:
        return rank_of(index, self.N) in set(self.ranks)


@dataclass
class DualCertificate:
    """Coefficients ``f_j >= 0`` of ``f(x) = 1 + sum_j f_j K_j(x)`` over nonzero ``j``.

    A certificate may instead be given as a tensor product of per-group
    coefficient vectors (``factors[p][k]`` is the coefficient of ``K_k`` in
    group ``p``, with ``factors[p][0] == 1``); then ``f_j = prod_p factors[p][j_p]``.
    """

    N: int
    q: int
    coeffs: Dict[MultiIndex, Fraction] = field(default_factory=dict)
    factors: Optional[List[List[Fraction]]] = None

    def coefficient(self, j: Sequence[int]) -> Fraction:
        if self.factors is not None:
            return math.prod((self.factors[p][jp] for p, jp in enumerate(j)), start=Fraction(1))
        return self.coeffs.get(tuple(j), Fraction(0))

    def expanded(self) -> Dict[MultiIndex, Fraction]:
        if self.factors is None:
            return dict(self.coeffs)
        s = len(self.factors)
        out = {}
        for j in itertools.product(range(self.N + 1), repeat=s):
            if any(j):
                v = self.coefficient(j)
                if v:
                    out[j] = v
        return out


def _allowed_entries(params: CodeParams) -> List[int]:
    return [0] + list(range(params.rho, params.N + 1))


def enumerate_T(params: CodeParams) -> FeasibleIndexSet:
    N, s = params.N, params.s
    allowed = _allowed_entries(params)
    ranks = sorted(rank_of(i, N) for i in itertools.product(allowed, repeat=s)
                   if sum(i) >= params.d)
    return FeasibleIndexSet(s, N, tuple(ranks))


def build_primal(params: CodeParams, symmetric: bool = False) -> ratlp.LpProblem:
    """LP whose optimum plus one bounds the code size.

    Variables follow ``T`` in rank order; rows follow nonzero ``j`` in rank order.
    With ``symmetric=True`` the repair groups are treated as interchangeable and
    both variables and rows are indexed by nondecreasing multi-indices, each
    variable standing for the total mass of its orbit.
    """
    if symmetric:
        return _build_symmetric(params)
    N, q, s = params.N, params.q, params.s
    T = enumerate_T(params)
    K = product_matrix(N, q, s)
    size = (N + 1) ** s
    cols = T.ranks
    A = tuple(tuple(K[j][i] for i in cols) for j in range(1, size))
    b = tuple(-K[j][0] for j in range(1, size))
    names = tuple(str(index_of(i, s, N)) for i in cols)
    return ratlp.LpProblem((1,) * len(cols), A, b, var_names=names)


def _orbit(index: Sequence[int]) -> List[MultiIndex]:
    return sorted(set(itertools.permutations(index)))


def _symmetric_layout(params: CodeParams):
    N, s = params.N, params.s
    allowed = _allowed_entries(params)
    var_reps = [i for i in itertools.combinations_with_replacement(allowed, s) if sum(i) >= params.d]
    row_reps = [j for j in itertools.combinations_with_replacement(range(N + 1), s) if any(j)]
    return var_reps, row_reps


def _build_symmetric(params: CodeParams) -> ratlp.LpProblem:
    N, q, s = params.N, params.q, params.s
    t = kraw_table(N, q).table
    var_reps, row_reps = _symmetric_layout(params)
    orbits = [_orbit(i) for i in var_reps]
    A = []
    b = []
    for j in row_reps:
        row = []
        for orb in orbits:
            total = sum(math.prod(t[jp][ip] for jp, ip in zip(j, i)) for i in orb)
            row.append(Fraction(total, len(orb)))
        A.append(tuple(row))
        b.append(-math.prod(t[jp][0] for jp in j))
    names = tuple(str(i) for i in var_reps)
    return ratlp.LpProblem((1,) * len(var_reps), tuple(A), tuple(b), var_names=names)


def _dual_to_certificate(params: CodeParams, dual: Sequence, symmetric: bool) -> DualCertificate:
    N, s = params.N, params.s
    coeffs: Dict[MultiIndex, Fraction] = {}
    if symmetric:
        _, row_reps = _symmetric_layout(params)
        for rep, y in zip(row_reps, dual):
            if y:
                orb = _orbit(rep)
                for j in orb:
                    coeffs[j] = Fraction(y) / len(orb)
    else:
        for row, y in enumerate(dual):
            if y:
                coeffs[index_of(row + 1, s, N)] = Fraction(y)
    return DualCertificate(N, params.q, coeffs)


def _full_size(params: CodeParams) -> Tuple[int, int]:
    return (params.N + 1) ** params.s - 1, len(enumerate_T(params))


def _choose_symmetric(params: CodeParams, symmetric: Optional[bool]) -> bool:
    if symmetric is not None:
        return symmetric
    return params.s > 1 and _full_size(params)[0] > AUTO_FULL_ROWS


def _choose_mode(params: CodeParams, mode: str, symmetric: bool) -> str:
    if mode != "auto":
        return mode
    if symmetric:
        var_reps, row_reps = _symmetric_layout(params)
        m, n = len(row_reps), len(var_reps)
    else:
        m, n = _full_size(params)
    return "exact" if m * (m + n) <= AUTO_EXACT_CELLS else "float"


def lp_dimension_bound(params: CodeParams, mode: str = "auto",
                       symmetric: Optional[bool] = None,
                       kernel: Optional[str] = None) -> BoundResult:
    """Upper bound on ``k`` from the LP optimum: ``q^k <= 1 + max sum a_i``.

    ``mode`` is ``"exact"``, ``"float"`` (float solve, then a rationalized and
    exactly checked dual gives the bound) or ``"auto"`` (exact for small
    tableaux).  ``symmetric=None`` collapses interchangeable repair groups only
    when the full LP is large.  Either way the dual is expanded to a certificate
    on the full LP and checked there exactly before ``k`` is reported.
    """
    symmetric = _choose_symmetric(params, symmetric)
    mode = _choose_mode(params, mode, symmetric)
    problem = build_primal(params, symmetric=symmetric)
    sol = ratlp.solve(problem, mode=mode, kernel=kernel)
    if not sol.optimal:
        raise ratlp.LpError(f"Delsarte LP returned status {sol.status}")
    if mode == "exact":
        lp_value = sol.objective
        dual = sol.dual
    else:
        lp_value = sol.objective
        _, dual = ratlp.certify_float(problem, sol)
        # short denominators can cost enough slack to cross a power of q
        if max_dimension(params.q, 1 + ratlp.certify(problem, dual)) > \
                max_dimension(params.q, max(1.0, 1 + lp_value * (1 + 1e-9))):
            _, dual = ratlp.certify_float(problem, sol, max_denominator=None)
    cert = _dual_to_certificate(params, dual, symmetric)
    cardinality = check_dual_certificate(params, cert)
    k = max_dimension(params.q, cardinality)
    witness = {
        "lp_optimum": lp_value,
        "cardinality_bound": cardinality,
        "certified": True,
        "mode": mode,
        "symmetric": symmetric,
        "iterations": sol.iterations,
        "nvars": problem.nvars,
        "nrows": problem.nrows,
        "certificate": cert,
    }
    return BoundResult(k, BoundKind.DIMENSION, "lp", witness, exact=True)


def check_dual_certificate(params: CodeParams, cert: DualCertificate) -> Fraction:
    """Verify ``f_j >= 0`` and ``f(i) <= 0`` on ``T`` exactly; return ``f(0)``."""
    N, q, s = params.N, params.q, params.s
    if cert.N != N or cert.q != q:
        raise ValueError("certificate was built for different (N, q)")
    t = kraw_table(N, q).table
    T = enumerate_T(params).indices
    if cert.factors is not None:
        if len(cert.factors) != s:
            raise ValueError("certificate has the wrong number of factors")
        for p, fac in enumerate(cert.factors):
            if len(fac) != N + 1 or fac[0] != 1:
                raise ValueError(f"factor {p} must have N+1 entries with constant term 1")
            for k, v in enumerate(fac):
                if v < 0:
                    raise CertificateInfeasible(
                        f"negative coefficient in group {p} at degree {k}",
                        tuple(k if pp == p else 0 for pp in range(s)))
        # sum_j f_j K_j(x) factorizes into per-group Krawtchouk sums
        values = [[sum(fac[k] * t[k][x] for k in range(N + 1)) for x in range(N + 1)]
                  for fac in cert.factors]
        for i in T:
            f_i = math.prod((values[p][ip] for p, ip in enumerate(i)), start=Fraction(1))
            if f_i > 0:
                raise CertificateInfeasible(f"f{i} = {f_i} > 0 on T", i)
        f0 = math.prod((values[p][0] for p in range(s)), start=Fraction(1))
        return _norm(f0)

    F = np.zeros((N + 1,) * s, dtype=object)
    F.flat[0] = 1
    for j, v in cert.coeffs.items():
        if len(j) != s or not any(j) or not all(0 <= jp <= N for jp in j):
            raise ValueError(f"certificate index {j} is not a nonzero {s}-tuple over 0..{N}")
        if v < 0:
            raise CertificateInfeasible(f"negative coefficient f{j} = {v}", tuple(j))
        F[tuple(j)] = Fraction(v)
    # f(i) = sum_j F[j] prod_p K_{j_p}(i_p): contract one group axis at a time
    K = np.array(t, dtype=object)
    vals = F
    for _ in range(s):
        vals = np.tensordot(vals, K, axes=([0], [0]))
    for i in T:
        if vals[i] > 0:
            raise CertificateInfeasible(f"f{i} = {vals[i]} > 0 on T", i)
    return _norm(Fraction(vals[(0,) * s]))


def _norm(v: Fraction):
    return v.numerator if v.denominator == 1 else v


def annihilator_coefficients(N: int, a: int) -> List[Fraction]:
    """Krawtchouk coefficients of ``q^{N-a+1} prod_{i=a}^{N} (1 - x/i)``.

    Coefficient of ``K_k`` is ``binom(N-k, a-1) / binom(N, a-1)`` (independent of q).
    """
    if not 1 <= a <= N:
        raise ValueError(f"need 1 <= a <= N, got a={a}, N={N}")
    den = binom(N, a - 1)
    return [Fraction(binom(N - k, a - 1), den) for k in range(N + 1)]


def split_distance(d: int, N: int) -> Tuple[int, int]:
    """``d = t*N + part`` with ``1 <= part <= N``."""
    t = -(-d // N) - 1
    return t, d - t * N


def singleton_certificate(params: CodeParams) -> Tuple[DualCertificate, BoundResult]:
    """Product-polynomial dual certificate giving the LP version of the Singleton bound."""
    N, s, r, rho, q = params.N, params.s, params.r, params.rho, params.q
    t, part = split_distance(params.d, N)
    one = [Fraction(1)] + [Fraction(0)] * N
    rho_factor = annihilator_coefficients(N, rho)
    factors: List[List[Fraction]] = []
    if rho <= part:
        factors = [rho_factor] * (s - t - 1) + [annihilator_coefficients(N, part)]
        claimed = r * (s - t) + rho - part
    else:
        factors = [rho_factor] * (s - t)
        claimed = r * (s - t)
    factors += [one] * (s - len(factors))
    cert = DualCertificate(N, q, factors=[list(f) for f in factors])
    f0 = check_dual_certificate(params, cert)
    if f0 != q ** claimed:
        raise AssertionError(f"certificate value {f0} != q^{claimed}")
    k = max_dimension(q, f0)
    witness = {"t": t, "partial": part, "f0": f0, "certificate": cert,
               "case": "rho<=partial" if rho <= part else "rho>partial"}
    return cert, BoundResult(k, BoundKind.DIMENSION, "lp-singleton-cert", witness, exact=True)
