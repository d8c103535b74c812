import pytest

from src.errors import CapacityError, DomainError
from src.identities import (
    bm_check,
    bm_closed,
    bm_count,
    lemma_check,
    lemma_lhs,
    lemma_rhs,
    sweep,
    telescoping_chain,
    telescoping_check,
    values_check,
    verify_conjecture,
)


@pytest.mark.parametrize("m,n,expected", [(1, 1, 1), (1, 2, 8), (2, 1, 1), (2, 2, 24)])
def test_lemma_small_values(m, n, expected):
    assert lemma_lhs(m, n) == expected
    assert lemma_rhs(m, n) == expected


def test_lemma_sweep():
    for m in range(1, 6):
        for n in range(1, 9):
            assert lemma_check(m, n).holds, (m, n)


def test_lemma_budget():
    with pytest.raises(CapacityError):
        lemma_lhs(5, 30, budget=10)


def test_lemma_domain():
    with pytest.raises(DomainError):
        lemma_lhs(0, 3)


def test_telescoping_sweep():
    for i in range(0, 5):
        for n in range(1, 9):
            for c in range(1, n + 1):
                assert telescoping_check(i, n, c).holds, (i, n, c)


@pytest.mark.parametrize("i,n,c", [(-1, 3, 1), (0, 3, 0), (0, 3, 4)])
def test_telescoping_domain(i, n, c):
    with pytest.raises(DomainError):
        telescoping_check(i, n, c)


def test_telescoping_chain_collapses_to_lemma():
    for m in range(1, 4):
        for n in range(1, 6):
            reports = telescoping_chain(m, n)
            assert len(reports) == m + 1
            assert all(r.holds for r in reports)
            assert reports[-1].name == "chain_total"
            assert reports[-1].lhs == lemma_lhs(m, n)


@pytest.mark.parametrize("d,m,expected", [(1, 0, 2), (1, 1, 1), (2, 0, 9), (2, 1, 8), (2, 2, 1)])
def test_bm_count_small(d, m, expected):
    assert bm_count(d, m) == expected


def test_bm_grid():
    for d in range(1, 11):
        for m in range(0, d + 1):
            assert bm_count(d, m) == bm_closed(d, m), (d, m)
            if m >= 1:
                assert bm_count(d, m) == lemma_lhs(m, d - m + 1), (d, m)


def test_bm_check_subreports():
    report = bm_check(3, 2)
    assert report.holds
    assert [c.name for c in report.checks] == ["bm_closed", "bm_lemma"]
    assert [c.name for c in bm_check(3, 0).checks] == ["bm_closed"]


def test_bm_domain():
    with pytest.raises(DomainError):
        bm_count(2, 3)


@pytest.mark.parametrize("d", range(1, 7))
def test_conjecture_small_d(d):
    report = verify_conjecture(d)
    assert report.holds
    assert report.lhs == report.rhs
    assert len(report.checks) == 4 * (d + 1)


@pytest.mark.slow
@pytest.mark.parametrize("d", [7, 8])
def test_conjecture_by_expansion(d):
    assert verify_conjecture(d, engine="expand").holds


def test_conjecture_falls_back_to_expansion_when_over_budget():
    report = verify_conjecture(3, budget=10)
    assert report.holds


def test_conjecture_unknown_engine():
    with pytest.raises(DomainError):
        verify_conjecture(2, engine="ryser")


def test_values_check():
    reports = values_check()
    assert len(reports) == 9
    assert all(r.holds for r in reports)
    assert reports[1].lhs == 18


def test_values_check_range():
    with pytest.raises(DomainError):
        values_check(10)


def test_sweep_kinds():
    assert all(r.holds for r in sweep("bm", {"max_d": 4}))
    assert len(sweep("lemma", {"max_m": 2, "max_n": 3})) == 6
    assert len(sweep("telescoping", {"max_i": 1, "max_n": 3})) == 12
    with pytest.raises(DomainError):
        sweep("riemann", {})
