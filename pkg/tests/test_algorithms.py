"""Constructive algorithms: optimum, bounded EQ1 reassignment, round robin."""

import random
from fractions import Fraction

import pytest

from chorefair import (Allocation, Criterion, Instance, InvalidPermutation,
                       NotNormalized, cyclic_shifts, ef1_bounded, eq1_bounded,
                       gen_random, normalize, optimal_allocation,
                       position_bundle_bound, round_robin, satisfies,
                       social_cost)


def inst(rows):
    return Instance.from_rows(rows)


def test_optimal_allocation():
    i = inst([["1/4", "3/4"], ["1/2", "1/2"]])
    a, c = optimal_allocation(i)
    assert a.bundles == (frozenset({0}), frozenset({1}))
    assert c == Fraction(3, 4)


def test_optimal_allocation_tie_lowest_agent():
    i = inst([["1/2", "1/2"], ["1/2", "1/2"]])
    a, c = optimal_allocation(i)
    assert a.bundles == (frozenset({0, 1}), frozenset())
    assert c == 1


def test_eq1_bounded_worked_example():
    i = inst([["1/2", "1/2"], ["1/2", "1/2"]])
    a, trace = eq1_bounded(i)
    # optimum piles both items on agent 0; one move hands item 0 to agent 1
    assert len(trace.records) == 1
    assert trace.records[0].mover == 0 and trace.records[0].item == 0
    assert a.bundles == (frozenset({1}), frozenset({0}))
    assert social_cost(i, a) == 1
    assert satisfies(i, a, Criterion.EQ1)


def test_eq1_bounded_requires_normalized():
    with pytest.raises(NotNormalized):
        eq1_bounded(inst([[1, 2], [1, 1]]))


def test_eq1_bounded_no_moves_when_already_fair():
    i = inst([["1/4", "3/4"], ["3/4", "1/4"]])
    a, trace = eq1_bounded(i)
    assert not trace.records
    assert a.bundles == (frozenset({0}), frozenset({1}))


def test_round_robin_worked_example():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])
    a = round_robin(i, (0, 1))
    assert a.bundles == (frozenset({1}), frozenset({0}))
    assert social_cost(i, a) == Fraction(7, 10)
    assert satisfies(i, a, Criterion.EF1)


def test_round_robin_fewer_items_than_agents():
    i = inst([["1"], ["1"], ["1"]])
    a = round_robin(i, (0, 1, 2))
    assert a.bundles == (frozenset({0}), frozenset(), frozenset())
    assert satisfies(i, a, Criterion.EF1)


def test_round_robin_rejects_bad_order():
    i = inst([["1", "1"], ["1", "1"]])
    with pytest.raises(InvalidPermutation):
        round_robin(i, (0, 0))
    with pytest.raises(InvalidPermutation):
        round_robin(i, (0,))


def test_cyclic_shifts():
    assert cyclic_shifts(3) == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]


def test_ef1_bounded_picks_cheapest_shift():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])
    a, order = ef1_bounded(i)
    assert social_cost(i, a) == Fraction(7, 10)
    assert order in cyclic_shifts(2)


def test_position_bundle_bound():
    i = inst([["1/10", Fraction(2, 10), "3/10", Fraction(4, 10)], ["1/4", "1/4", "1/4", "1/4"]])
    # agent 0, position 1: items ranked 1st and 3rd by own cost -> 1/10 + 3/10
    assert position_bundle_bound(i, 0, 1) == Fraction(4, 10)
    assert position_bundle_bound(i, 0, 2) == Fraction(6, 10)


def test_bounded_algorithms_random_sweep():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(2, 5)
        m = rng.randint(1, 10)
        i = normalize(gen_random(n, m, rng.randrange(10**9)).instance)
        a, trace = eq1_bounded(i)
        assert satisfies(i, a, Criterion.EQ1)
        assert social_cost(i, a) <= 1
        assert len(trace.records) <= 2 * n * m
        b, order = ef1_bounded(i)
        assert satisfies(i, b, Criterion.EF1)
        assert social_cost(i, b) <= 1
