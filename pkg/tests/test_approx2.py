"""Two-agent schemes: districting LP for EQ1, goods-side duality for EF1."""

import random
from fractions import Fraction

import pytest

from chorefair import (Allocation, Criterion, District, Instance,
                       WrongAgentCount, classify_items, dual_transform,
                       ef1_scheme, enumerate_districts, eq1_scheme, gen_random,
                       goods_ef1, mirror, normalize, opt_fair, round_district,
                       satisfies, social_cost, social_welfare, solve_district,
                       sw_ef1_goods)


def inst(rows):
    return Instance.from_rows(rows)


def test_classify_items():
    i = inst([[Fraction(6, 10), "1/10", "3/10"], [Fraction(2, 10), "1/10", "7/10"]])
    big, small = classify_items(i, Fraction(1, 2))
    assert big == [0, 2] and small == [1]
    assert len(big) <= 4  # floor(2 / (1/2))


def test_classify_requires_two_agents():
    with pytest.raises(WrongAgentCount):
        classify_items(inst([["1"], ["1"], ["1"]]), Fraction(1, 2))


def test_solve_district_worked_example():
    # designated agent 0 holds a removable item of cost 1/2; one small item
    # with c_0 = 1/10, c_1 = 3/10; LP pushes x to 3/4 against the D = 0 wall
    i = inst([["1/2", "1/10", "2/5"], ["1/4", "3/10", "9/20"]])
    d = District(designated=0, removable=0, big_assignment={},
                 a1=Fraction(0), a2=Fraction(0), smalls=(1,))
    lp = solve_district(i, d)
    assert lp is not None
    assert lp.x == (Fraction(3, 4),)
    assert lp.objective == Fraction(3, 20)
    assert lp.fractional_index == 0


def test_round_district_integral_is_exact():
    i = inst([["1/2", "1/2"], ["1/2", "1/2"]])
    d = District(0, 0, {}, Fraction(0), Fraction(0), (1,))
    lp = solve_district(i, d)
    assert lp is not None
    a = round_district(i, d, lp)
    assert satisfies(i, a, Criterion.EQ1)


def test_enumerate_districts_order_and_skip():
    i = normalize(inst([[3, 1], [1, 3]]))
    districts = list(enumerate_districts(i, Fraction(1, 2)))
    keys = [(d.designated, d.removable) for d in districts]
    assert keys == sorted(keys)
    # a big removable item assigned to the other agent is contradictory
    for d in districts:
        if d.removable in d.big_assignment:
            assert d.big_assignment[d.removable] == d.designated


def test_eq1_scheme_small_cases():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])
    a, c = eq1_scheme(i, Fraction(1, 2))
    assert satisfies(i, a, Criterion.EQ1)
    opt = opt_fair(i, Criterion.EQ1)[1]
    assert c - opt <= Fraction(1, 2)


def test_eq1_scheme_empty_instance():
    i = Instance(((), ()))
    a, c = eq1_scheme(i, Fraction(1, 2))
    assert c == 0 and a.bundles == (frozenset(), frozenset())


def test_eq1_scheme_sweep_vs_oracle():
    rng = random.Random(99)
    for _ in range(30):
        i = normalize(gen_random(2, rng.randint(1, 8), rng.randrange(10**9)).instance)
        opt = opt_fair(i, Criterion.EQ1)[1]
        for eps in (Fraction(1, 2), Fraction(1, 4)):
            a, c = eq1_scheme(i, eps)
            assert satisfies(i, a, Criterion.EQ1)
            assert c - opt <= eps


def test_mirror_and_duality_identity():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])
    a = Allocation.from_lists([[0], [1]])
    assert mirror(mirror(a)) == a
    assert dual_transform(i) is i
    sw = social_welfare(i, a)
    sc = social_cost(i, mirror(a))
    assert sc + sw == 2


def test_sw_ef1_goods_worked_example():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])
    a, sw = sw_ef1_goods(i)
    assert sw == Fraction(13, 10)
    assert a.bundles == (frozenset({0}), frozenset({1}))
    assert goods_ef1(i, a)


def test_sw_ef1_goods_symmetric():
    i = inst([["1/2", "1/2"], ["1/2", "1/2"]])
    a, sw = sw_ef1_goods(i)
    assert sw == 1
    assert goods_ef1(i, a)


def test_ef1_scheme_exact_matches_oracle():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])
    a, c = ef1_scheme(i)
    assert c == Fraction(7, 10)
    assert c == opt_fair(i, Criterion.EF1)[1]
    assert satisfies(i, a, Criterion.EF1)


def test_ef1_scheme_sweep_vs_oracle():
    rng = random.Random(7)
    for _ in range(30):
        i = normalize(gen_random(2, rng.randint(1, 8), rng.randrange(10**9)).instance)
        a, c = ef1_scheme(i)
        assert satisfies(i, a, Criterion.EF1)
        assert c == opt_fair(i, Criterion.EF1)[1]


def test_plug_mode_contract():
    i = inst([[Fraction(6, 10), Fraction(4, 10)], ["3/10", "7/10"]])

    def good_plug(goods):
        return sw_ef1_goods(goods, mode="exact")

    a, c = ef1_scheme(i, mode="plug", plug=good_plug)
    assert c == Fraction(7, 10)

    def bad_plug(goods):
        # everything to agent 0: agent 1 envies beyond one item on the goods
        # side whenever she values the pile at more than her best single item
        a = Allocation.from_lists([[0, 1], []])
        return a, social_welfare(goods, a)

    with pytest.raises(AssertionError):
        ef1_scheme(i, mode="plug", plug=bad_plug)


def test_plug_mode_requires_solver():
    i = inst([["1/2", "1/2"], ["1/2", "1/2"]])
    with pytest.raises(ValueError):
        sw_ef1_goods(i, mode="plug")
    with pytest.raises(ValueError):
        sw_ef1_goods(i, mode="banana")


def test_schemes_reject_wrong_agent_count():
    i3 = normalize(inst([[1, 1], [1, 1], [1, 1]]))
    with pytest.raises(WrongAgentCount):
        eq1_scheme(i3, Fraction(1, 2))
    with pytest.raises(WrongAgentCount):
        ef1_scheme(i3)
