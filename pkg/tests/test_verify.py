import pytest

from lrcbounds import verify
from lrcbounds.krawtchouk import KrawTable, kraw_table


@pytest.mark.parametrize("name", list(verify.SUITES))
def test_suite_passes(name):
    rep = verify.run(name)
    assert rep.ok, rep.failures[:5]
    assert rep.checks > 0


def test_orthogonality_catches_a_bad_table():
    def mutated(N, q):
        out = KrawTable(N, q)
        if N == 3:
            rows = [list(row) for row in kraw_table(N, q).table]
            rows[1][2] += 1
            out.table = tuple(map(tuple, rows))
        return out

    rep = verify.orthogonality(max_N=4, max_s=1, qs=(2,), table=mutated)
    assert not rep.ok
    assert all("N=3" in f for f in rep.failures)


def test_upper_bounds_cover_all_methods():
    names = set(verify.upper_bounds(2, 2, 3))
    assert {"lp", "sh", "sh-lrc", "singleton-gopalan", "singleton-rho", "rec-hamming"} <= names
