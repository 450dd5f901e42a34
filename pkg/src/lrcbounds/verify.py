"""Self-check suites behind ``lrcbounds verify``.

Each suite returns a :class:`SuiteReport`; a suite passes when it collected no
failures.  Failures name the violating instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

import numpy as np

from . import finite, oracle
from .classical import best_known_M2, hamming_ratio
from .krawtchouk import kraw_table, valency
from .lpbound import CertificateInfeasible, check_dual_certificate, singleton_certificate
from .lpbound import lp_dimension_bound
from .model import CodeParams, InapplicableBound

# exhaustively searched oracle instances (s, r)
ORACLE_INSTANCES = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 2)]
DELSARTE_MAX_K = 4
COSET_FRACTIONS = (0.25, 0.5, 1.0)


@dataclass
class SuiteReport:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what: str) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(what)


def orthogonality(max_N: int = 8, max_s: int = 2, qs=(2, 3),
                  table: Callable = kraw_table) -> SuiteReport:
    """``sum_i e(i) K_j(i) K_j'(i) = q^(sN) e(j) [j = j']`` and ``sum_i e(i) = q^(sN)``."""
    rep = SuiteReport("orthogonality")
    for q, N in itertools.product(qs, range(1, max_N + 1)):
        base = np.array(table(N, q).table, dtype=object)
        e1 = np.array([valency(N, q, (x,)) for x in range(N + 1)], dtype=object)
        for s in range(1, max_s + 1):
            K, e = base, e1
            for _ in range(s - 1):
                K = np.kron(K, base)
                e = np.kron(e, e1)
            gram = (K * e) @ K.T
            expect = np.diag(e) * q ** (s * N)
            bad = np.argwhere(gram != expect)
            rep.check(bad.size == 0, f"q={q} N={N} s={s}: Gram entry {tuple(bad[0]) if bad.size else ''} wrong")
        for s in range(1, max_s + 2):
            total = sum(valency(N, q, i) for i in itertools.product(range(N + 1), repeat=s))
            rep.check(total == q ** (s * N), f"q={q} N={N} s={s}: valencies sum to {total}")
    return rep


def logconvex(max_n: int = 30, max_e: int = 5, qs=(2, 3, 4)) -> SuiteReport:
    """Hamming-bound log-convexity in exact rationals, and the table counterexample."""
    rep = SuiteReport("logconvex")
    for q, e in itertools.product(qs, range(max_e + 1)):
        d = 2 * e + 1
        B = [hamming_ratio(q, n, d) for n in range(max_n + 2)]
        for n1 in range(1, max_n + 1):
            for n2 in range(n1, max_n + 1):
                rep.check(B[n1] * B[n2] <= B[n1 - 1] * B[n2 + 1],
                          f"q={q} e={e} n1={n1} n2={n2}")
    m7, m8, m9 = (best_known_M2(n, 4) for n in (7, 8, 9))
    rep.check((m7, m8, m9) == (8, 16, 20), f"table gives M2(7..9, 4) = {(m7, m8, m9)}")
    rep.check(m8 * m8 > m7 * m9, "best-known sizes M2(n, 4) unexpectedly log-convex at n = 8")
    return rep


def delsarte(max_k: int = DELSARTE_MAX_K) -> SuiteReport:
    rep = SuiteReport("delsarte")
    for s, r in itertools.product((1, 2), (1, 2, 3)):
        for k in range(min(max_k, s * r) + 1):
            for code in oracle.enumerate_disjoint(s, r, k):
                rep.check(oracle.verify_delsarte(code), f"s={s} r={r} rows={code.rows}")
    return rep


def upper_bounds(s: int, r: int, d: int) -> Dict[str, int]:
    """Every implemented dimension bound for a binary code with ``s`` groups of ``r + 1``."""
    n = s * (r + 1)
    params = CodeParams(2, s, r, 2, d)
    out = {
        "lp": lp_dimension_bound(params).value,
        "lp-singleton-cert": singleton_certificate(params)[1].value,
        "sh": finite.shortening_bound(2, n, d, r).value,
        "sh-lrc": finite.shortening_bound(2, n, d, r, lrc_recursive=True).value,
        "singleton-gopalan": finite.singleton_gopalan_k(n, d, r).value,
        "singleton-rho": finite.singleton_rho_k(n, d, r, 2).value,
    }
    for tag in finite.BoundTag:
        try:
            out[f"rec-{tag.value}"] = finite.corollary2(tag, 2, n, d, r, 2).value
        except InapplicableBound:
            pass
    return out


def oracle_consistency() -> SuiteReport:
    rep = SuiteReport("oracle")
    for s, r in ORACLE_INSTANCES:
        for d in range(1, s * (r + 1) + 1):
            best = oracle.max_dimension_exhaustive(s, r, d)
            for name, value in upper_bounds(s, r, d).items():
                rep.check(value >= best, f"s={s} r={r} d={d}: {name}={value} < k*={best}")
    return rep


def certificate_grid(qs=(2, 3, 4), ss=(2, 3), rhos=(2, 3), rs=range(2, 7)) -> SuiteReport:
    rep = SuiteReport("certificate")
    for q, s, rho, r in itertools.product(qs, ss, rhos, rs):
        N = r + rho - 1
        for d in range(2, s * N + 1):
            params = CodeParams(q, s, r, rho, d)
            where = f"q={q} s={s} rho={rho} r={r} d={d}"
            try:
                cert, res = singleton_certificate(params)
                f0 = check_dual_certificate(params, cert)
            except (CertificateInfeasible, AssertionError) as exc:
                rep.check(False, f"{where}: {exc}")
                continue
            rep.check(Fraction(q) ** res.value <= f0 < Fraction(q) ** (res.value + 1),
                      f"{where}: k={res.value} inconsistent with f(0)={f0}")
    return rep


def cosets(max_n: int = 16, fractions=COSET_FRACTIONS) -> SuiteReport:
    rep = SuiteReport("cosets")
    for r in range(1, max_n):
        for s in range(1, max_n // (r + 1) + 1):
            n = s * (r + 1)
            if 2 ** (n - s) > oracle.MAX_COSETS:
                continue
            for frac in fractions:
                res = oracle.coset_leaders(s, r, frac)
                rep.check(res.all_leaders_spread, f"s={s} r={r}: a coset has no spread leader")
                rep.check(res.counted <= res.bound,
                          f"s={s} r={r} T={res.T}: {res.counted} cosets > bound {res.bound}")
                if frac == 1.0:
                    rep.check(res.counted == 2 ** (n - s), f"s={s} r={r}: coset total {res.counted}")
    return rep


SUITES: Dict[str, Callable[[], SuiteReport]] = {
    "delsarte": delsarte,
    "oracle": oracle_consistency,
    "certificate": certificate_grid,
    "cosets": cosets,
    "orthogonality": orthogonality,
    "logconvex": logconvex,
}


def run(name: str) -> SuiteReport:
    return SUITES[name]()
