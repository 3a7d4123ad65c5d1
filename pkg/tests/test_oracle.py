"""Exhaustive search ground truth and the gap report."""

import random
from fractions import Fraction

import pytest

from chorefair import (Allocation, BudgetExceeded, Criterion, Instance,
                       NoFairAllocation, cof_gap, enumerate_allocations,
                       eq1_bounded, ef1_bounded, gen_random, normalize,
                       opt_fair, satisfies, social_cost)


def inst(rows):
    return Instance.from_rows(rows)


def test_enumerate_counts_and_order():
    allocs = list(enumerate_allocations(2, 2))
    assert len(allocs) == 4
    assert allocs[0].bundles == (frozenset({0, 1}), frozenset())
    assert allocs[-1].bundles == (frozenset(), frozenset({0, 1}))


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_allocations(3, 20, budget=1000))


def test_opt_fair_matches_hand_case():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])
    a, c = opt_fair(i, Criterion.EF1)
    assert c == Fraction(7, 10)
    assert a.bundles == (frozenset({1}), frozenset({0}))


def test_opt_fair_tie_break_lex_smallest():
    i = inst([["1/2", "1/2"], ["1/2", "1/2"]])
    a, c = opt_fair(i, Criterion.EQ1)
    # vectors (0,1) and (1,0) both cost 1; (0,1) is lex-smaller
    assert a.bundles == (frozenset({0}), frozenset({1}))
    assert c == 1


def test_opt_fair_eq_may_not_exist():
    i = inst([["1/3", "2/3"], ["1/3", "2/3"]])
    with pytest.raises(NoFairAllocation):
        opt_fair(i, Criterion.EQ)


def test_guaranteed_criteria_always_have_witness():
    rng = random.Random(11)
    for _ in range(50):
        i = normalize(gen_random(rng.randint(2, 4), rng.randint(1, 7),
                                 rng.randrange(10**9)).instance)
        for crit in (Criterion.EQX, Criterion.EQ1, Criterion.EF1):
            a, c = opt_fair(i, crit)
            assert satisfies(i, a, crit)
            assert c == social_cost(i, a)


def test_cof_gap_report():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])
    rep = cof_gap(i, Criterion.EF1)
    assert rep.opt_unconstrained == Fraction(7, 10)
    assert rep.opt_fair == Fraction(7, 10)
    assert rep.gap == 0
    assert rep.ratio == 1
    assert not rep.ratio_is_infinite


def test_cof_gap_infinite_ratio():
    # unconstrained optimum is 0 (free assignments exist) but EQ1 costs more
    i = inst([["0", "0", "1"], ["1/2", "1/2", "0"]])
    rep = cof_gap(i, Criterion.EQ1)
    assert rep.opt_unconstrained == 0
    if rep.opt_fair > 0:
        assert rep.ratio is None and rep.ratio_is_infinite


def test_cof_gap_ratio_one_when_both_zero():
    i = inst([["0", "0"], ["0", "0"]])
    rep = cof_gap(i, Criterion.EQ1)
    assert rep.opt_unconstrained == 0 and rep.opt_fair == 0
    assert rep.ratio == 1


def test_cof_no_fair_allocation_flagged():
    i = inst([["1/3", "2/3"], ["1/3", "2/3"]])
    rep = cof_gap(i, Criterion.EQ)
    assert rep.opt_fair is None and rep.gap is None and rep.witness is None


def test_bounded_algorithms_dominate_oracle():
    rng = random.Random(12)
    for _ in range(40):
        i = normalize(gen_random(rng.randint(2, 4), rng.randint(1, 7),
                                 rng.randrange(10**9)).instance)
        eq1_alloc, _ = eq1_bounded(i)
        ef1_alloc, _ = ef1_bounded(i)
        assert opt_fair(i, Criterion.EQ1)[1] <= social_cost(i, eq1_alloc) <= 1
        assert opt_fair(i, Criterion.EF1)[1] <= social_cost(i, ef1_alloc) <= 1
        assert cof_gap(i, Criterion.EQ1).gap <= 1
        assert cof_gap(i, Criterion.EF1).gap <= 1
