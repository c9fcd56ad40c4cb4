from math import comb

import pytest
from hypothesis import given, strategies as st

from staircase import formulas as fm
from staircase import oracle as orc


@pytest.mark.parametrize("n, k, v", [(4, 2, 6), (5, -1, 0), (0, 0, 1), (3, 4, 0)])
def test_binomial(n, k, v):
    assert fm.binomial(n, k) == v


def test_binomial_rejects_negative_top():
    with pytest.raises(fm.PreconditionError):
        fm.binomial(-1, 0)


def test_classic():
    assert fm.classic_count(1, 2, 1) == 2
    assert all(fm.classic_count(k, a, 0) == 1 for k in (1, 2, 3) for a in range(5))
    assert fm.classic_nw_count(1, 2, 1, 2) == 1


def test_classic_nw_zero_width():
    # a = 0 forces b = 0: the empty walk, one path with no corners
    assert fm.classic_nw_count(1, 0, 0, 1) == 1


def test_thm1_examples():
    assert fm.thm1_nw1(1, 1, 1, 1) == 1
    assert fm.thm1_nw1(1, 1, 2, 2) == 1
    assert fm.thm1_nw1(1, 1, 1, 2) == 0


def test_thm1_nw2_domain():
    with pytest.raises(fm.PreconditionError):
        fm.thm1_nw2(1, 1, 1, 1)
    # outside the domain the raw expression gives 1 at c=1, while no augmented path has a corner
    assert fm.thm1_nw2_degenerate(1, 1, 1, 1) == 1
    assert orc.corner_histogram(orc.S2(1, 1, 1), augmented=True) == {0: 1}


def test_totals():
    assert fm.total1(1, 1, 1) == 1
    assert fm.total1(1, 1, 2) == 2
    assert fm.total1(2, 1, 1) == 1
    assert fm.total2(2, 2, 1) == 2


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 5))
def test_cyclic_forms(s, t, n):
    assert fm.total1(s, t, n) == fm.total1_cyclic(s, t, n)
    assert n * fm.total1(s, t, n) == comb(s * n + t * n, s * n + 1)
    assert n * fm.total2(s, t, n) == comb(s * n + t * n - 2, t * n - 1)
    assert fm.total2(s, t, n) == fm.total2_cyclic(s, t, n)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 4))
def test_corner_refinement_sums_to_total(s, t, n):
    cs = range(1, t * n + 2)
    assert sum(fm.thm1_nw1(s, t, n, c) for c in cs) == fm.total1(s, t, n)
    if s * n >= 2:
        assert sum(fm.thm1_nw2(s, t, n, c) for c in cs) == fm.total2(s, t, n)


def test_binary_count():
    for s in range(9):
        assert fm.binary_count(1, s, 0) == 2
        assert fm.binary_count(1, s, 1) == fm.binary_count(1, s, 2) == s + 4
    assert fm.binary_count(1, 4, 2) == 8
    assert fm.binary_count(2, 2, 4) == 70


def test_sum_count():
    assert [fm.sum_count(0, n) for n in range(1, 6)] == [4 ** n for n in range(1, 6)]
    assert fm.sum_count(1, 1) == 6
    assert fm.sum_count(2, 1) == 8
    assert fm.sum_count(1, 2) == comb(8, 4)


def test_exact_changes():
    for s in range(8):
        assert fm.exact_changes_count(1, s) == s + 2
        assert fm.exact_changes_count(1, s) == fm.binary_count(1, s, 1) - fm.binary_count(1, s, 0)
    assert fm.exact_changes_count(2, 2) == comb(8, 3) // 2 == 28
    assert fm.exact_changes_count(2, 0) == 2
    assert fm.exact_changes_count(1, 0) == 2


@pytest.mark.parametrize("call", [
    lambda: fm.total1(0, 1, 1),
    lambda: fm.classic_count(0, 1, 1),
    lambda: fm.classic_count(2, 1, 1),
    lambda: fm.binary_count(1, 2, 3),
    lambda: fm.sum_count(-1, 1),
    lambda: fm.thm1_nw1(1, 1, 1, 0),
])
def test_preconditions(call):
    with pytest.raises(fm.PreconditionError):
        call()


def test_registry_signatures():
    assert set(fm.FORMULAS) == {"classic", "classic-nw", "thm1-nw1", "thm1-nw2", "total1", "total2",
                                "binary", "sum", "exact-changes"}
