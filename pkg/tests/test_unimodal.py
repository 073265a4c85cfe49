from itertools import islice, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dompow.dompoly import cycle_poly, path_row
from dompow.polycore import IntPolynomial, X
from dompow.suites import counterexample_seeds
from dompow.unimodal import (
    FailureReason,
    certify_theorem6,
    check_barely_increasing,
    check_log_concave,
    check_ultra_log_concave,
    check_ultra_log_concave_binomial,
    check_unimodal,
    select_modes,
)

P = IntPolynomial


def test_unimodal_examples():
    r = check_unimodal([0, 1, 3, 1])
    assert r.verdict and (r.mode_lo, r.mode_hi) == (2, 2)
    r = check_unimodal([1, 2, 2, 1])
    assert r.verdict and (r.mode_lo, r.mode_hi) == (1, 2)
    r = check_unimodal([1, 0, 1])
    assert not r.verdict and r.violation_index == 2
    r = check_unimodal([])
    assert r.verdict and r.mode_lo is None


def test_unimodal_plateau_then_rise():
    r = check_unimodal([3, 1, 1, 2])
    assert not r and r.violation_index == 3
    assert check_unimodal([5, 5, 5]).mode_hi == 2


def _is_unimodal_brute(seq):
    return any(all(seq[i] <= seq[i + 1] for i in range(m)) and
               all(seq[i] >= seq[i + 1] for i in range(m, len(seq) - 1))
               for m in range(len(seq))) or not seq


@given(st.lists(st.integers(0, 6), max_size=9))
def test_unimodal_matches_definition(seq):
    r = check_unimodal(seq)
    assert r.verdict == _is_unimodal_brute(seq)
    if r.verdict and seq:
        modes = [m for m in range(len(seq)) if
                 all(seq[i] <= seq[i + 1] for i in range(m)) and
                 all(seq[i] >= seq[i + 1] for i in range(m, len(seq) - 1))]
        assert (r.mode_lo, r.mode_hi) == (modes[0], modes[-1])


def test_log_concave_examples():
    assert check_log_concave([0, 1, 3, 1])
    v = check_log_concave([1, 1, 2])
    assert not v and v.witness == 1
    assert check_log_concave([1, 4, 6, 4, 1])


def test_ultra_log_concave_examples():
    assert check_ultra_log_concave([0, 1, 3, 1], 3)
    assert check_ultra_log_concave([1, 5, 10, 10, 5, 1])
    assert not check_ultra_log_concave([1, 1, 2], 2)
    with pytest.raises(ValueError):
        check_ultra_log_concave([1, 2], 3)


@given(st.lists(st.integers(0, 50), min_size=1, max_size=12))
def test_ultra_log_concave_forms_agree(seq):
    assert check_ultra_log_concave(seq) == check_ultra_log_concave_binomial(seq)


def test_concavity_implications_on_domination_polys():
    for ell in range(1, 8):
        for r in islice(path_row(ell), 1, 80):
            if check_ultra_log_concave(r):
                assert check_log_concave(r)
            if check_log_concave(r):
                assert check_unimodal(r)


def test_barely_increasing_examples():
    assert check_barely_increasing([1, 1, 2, 2])
    assert not check_barely_increasing([1, 3])
    assert not check_barely_increasing([2, 1])
    assert check_barely_increasing([])


def test_select_modes_examples():
    assert select_modes([(1, 1), (1, 2), (2, 2)]) == [1, 1, 2]
    assert select_modes([(0, 0), (2, 2)]) is None
    assert select_modes([(1, 2), (1, 1)]) == [1, 1]


def test_select_modes_needs_lookahead():
    # smallest-first greedy would take 1 and get stuck
    assert select_modes([(1, 2), (3, 3)]) == [2, 3]
    assert select_modes([(1, 2), (3, 3)], prefer="high") == [2, 3]
    assert select_modes([(0, 3), (1, 1)], prefer="high") == [1, 1]


def _exhaustive(intervals):
    for choice in product(*(range(lo, hi + 1) for lo, hi in intervals)):
        if check_barely_increasing(choice):
            return list(choice)
    return None


intervals = st.lists(
    st.tuples(st.integers(0, 6), st.integers(0, 2)).map(lambda t: (t[0], t[0] + t[1])),
    max_size=7)


@settings(max_examples=300)
@given(intervals)
def test_select_modes_vs_exhaustive(ivs):
    got = select_modes(ivs)
    ref = _exhaustive(ivs)
    assert (got is None) == (ref is None)
    if got is not None:
        assert check_barely_increasing(got)
        assert all(lo <= m <= hi for m, (lo, hi) in zip(got, ivs))
        # lexicographically smallest valid choice
        assert got == ref


def test_certifier_counterexample():
    seeds = counterexample_seeds(3) + [P([0, 3, 1, 2])]
    rep = certify_theorem6(3, seeds, 10)
    assert rep.failure.index == 3
    assert rep.failure.reason is FailureReason.NOT_UNIMODAL
    assert rep.verified_up_to == 2
    assert rep.chosen_modes == [0, 1, 2]


def test_certifier_cycle_seeds():
    seeds = [cycle_poly(n, 1) for n in range(1, 5)]
    rep = certify_theorem6(3, seeds, 200)
    assert rep.ok and rep.verified_up_to == 200
    assert rep.chosen_modes[:4] == [1, 1, 1, 2]
    assert check_barely_increasing(rep.chosen_modes)
    # the walk reproduces the cycle recurrence
    assert rep.polynomials[20] == cycle_poly(21, 1)


def test_certifier_flat_seeds():
    rep = certify_theorem6(3, [1 + X] * 3, 50)
    assert rep.polynomials[3] == P([0, 3, 3])
    assert rep.ok and rep.verified_up_to == 50


def test_certifier_negative_and_errors():
    rep = certify_theorem6(3, [P([1]), P([0, -1]), P([0, 1])], 5)
    assert rep.failure.index == 1 and rep.failure.reason is FailureReason.NEGATIVE_COEFFICIENT
    rep = certify_theorem6(3, [P([0, 0, 1]), P([1]), P([1])], 5)
    assert rep.failure.index == 1 and rep.failure.reason is FailureReason.NO_MODE_ASSIGNMENT
    with pytest.raises(ValueError):
        certify_theorem6(2, [P([1])] * 2, 5)
    with pytest.raises(ValueError):
        certify_theorem6(3, [P([1])] * 4, 5)  # f_3 inconsistent with recurrence
    with pytest.raises(ValueError):
        certify_theorem6(3, [P([1])] * 2, 5)


def test_certifier_path_seeds_half_modes():
    # with ties broken upward the seed modes are ceil(n/2)
    for ell in range(1, 9):
        k = 2 * ell + 1
        seeds = [P(r) for r in islice(path_row(ell), k)]
        rep = certify_theorem6(k, seeds, k, prefer="high")
        assert rep.ok
        assert rep.chosen_modes == [(n + 1) // 2 for n in range(k + 1)]
