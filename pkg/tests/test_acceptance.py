"""Exit criteria of the build, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed in the terminal summary.
"""
import random
import time

import pytest

from irrpoly import bounds
from irrpoly.arith import divisors, mobius
from irrpoly.certify import Comparison, certified_power_compare
from irrpoly.count import closed_form_count, irreducible_count
from irrpoly.inequal import (
    CERTIFIED, DecisionConfig, ratio_increasing_at, root_increasing_at,
    root_ratio_decreasing_at, root_ratio_exponents,
)
from irrpoly.oracle import field_for_order, sieve_irreducible_counts
from irrpoly.thresholds import expected_root_ratio_onset, scan_onset

REMARK_GRID = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]
LEMMA_GRID = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]
EXACT_ONLY = DecisionConfig(exact_only=True)


@pytest.mark.acceptance(1, "sieve counts equal Moebius counts for q^n <= 2^20")
def test_oracle_equivalence():
    start = time.time()
    for q in [2, 3, 4, 5, 7, 8, 9]:
        n_max = 1
        while q ** (n_max + 1) <= 2**20:
            n_max += 1
        sieve = sieve_irreducible_counts(field_for_order(q), n_max)
        assert sieve == [irreducible_count(n, q) for n in range(1, n_max + 1)], q
    assert time.time() - start < 60


@pytest.mark.acceptance(2, "closed forms equal the Moebius formula, n <= 7, 2 <= q <= 100")
def test_closed_form_agreement():
    start = time.time()
    for q in range(2, 101):
        for n in range(1, 8):
            assert closed_form_count(n, q) == irreducible_count(n, q), (n, q)
    assert time.time() - start < 1


@pytest.mark.acceptance(3, "root-ratio onsets 14, 8, 6, 6 and 4 for larger q (horizon 500)")
def test_remark_reproduction():
    start = time.time()
    found = {q: scan_onset("root_ratio_decreasing", q, 500).onset for q in REMARK_GRID}
    expected = {q: expected_root_ratio_onset(q) for q in REMARK_GRID}
    assert found == expected
    assert time.time() - start < 300


@pytest.mark.acceptance(4, "root-increasing holds for 2 <= n <= 500 and fails at n = 1")
def test_root_increasing_reproduction():
    wrong = []
    for q in REMARK_GRID:
        if root_increasing_at(1, q).holds:
            wrong.append((q, 1, "holds"))
        for n in range(2, 501):
            if not root_increasing_at(n, q).holds:
                wrong.append((q, n, "fails"))
    assert wrong == []


@pytest.mark.acceptance(5, "ratio increasing for 19 <= n <= 388 (q < 9) and 1 <= n <= 388 (q >= 9)")
def test_computer_verified_range():
    start = time.time()
    for q in [2, 3, 4, 5, 7, 8]:
        assert all(ratio_increasing_at(n, q).holds for n in range(19, 389)), q
    for q in [9, 16, 25, 27]:
        assert all(ratio_increasing_at(n, q).holds for n in range(1, 389)), q
    assert time.time() - start < 120


@pytest.mark.acceptance(6, "lemma suite holds on its grid")
def test_lemma_suite():
    start = time.time()
    for q in LEMMA_GRID:
        for n in range(2, 501):
            assert bounds.check_eq21(n, q).holds, (n, q)
            assert bounds.residual(n, q).c_bound_ok, (n, q)
            assert bounds.check_eq22(n, q), (n, q)
            if n >= 5:
                assert bounds.check_eq23(n, q) == (True, True), (n, q)
            if n >= 6:
                assert bounds.check_eq24(n, q), (n, q)
    for q in [9, 16, 25, 27]:
        for n in range(6, 389):
            assert bounds.check_pn_chain(n, q) == (True, True), (n, q)
    assert time.time() - start < 120


@pytest.mark.acceptance(7, "certified verdicts match exact ones on 1000 random grid points")
def test_certified_exact_cross_validation():
    rng = random.Random(20121005)
    deciders = [root_increasing_at, root_ratio_decreasing_at]
    seen_certified = 0
    for _ in range(1000):
        q = rng.choice(REMARK_GRID)
        n = rng.randint(1, 120)
        decider = rng.choice(deciders)
        fast = decider(n, q)
        slow = decider(n, q, EXACT_ONLY)
        if fast.method == CERTIFIED:
            seen_certified += 1
            assert fast.holds == slow.holds, (decider.__name__, n, q)
        # a deliberately coarse precision may be indeterminate but never wrong
        a, b, c = (irreducible_count(m, q) for m in (n, n + 1, n + 2))
        coarse, _ = certified_power_compare([(b, n)], [(a, n + 1)], 32)
        exact = root_increasing_at(n, q, EXACT_ONLY).holds
        if coarse is not Comparison.INDETERMINATE:
            assert (coarse is Comparison.LHS_GREATER) == exact
    assert seen_certified == 1000


@pytest.mark.acceptance(8, "exponent identity and Moebius-sum invariants")
def test_invariants():
    for n in range(1, 10**4 + 1):
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)
        mid, low, high = root_ratio_exponents(n)
        assert low + high - mid == 2
