"""Two-agent additive approximation schemes.

SC-EQ1: partition the allocation space into districts (a fixed assignment of
every big item, a designated agent, and one removable item she holds), solve
an exact two-constraint box LP over the small items in each district, round
the at-most-one fractional coordinate, and keep the cheapest representative.

SC-EF1: flip the chores instance into a goods instance (entrywise equal
valuations), maximize social welfare subject to goods-EF1, and mirror the
bundles back. The shipped goods solver is exact exhaustive search; an external
multiplicative-approximation solver can be plugged in behind the same contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from .core import Allocation, Instance, social_cost
from .errors import BudgetExceeded, NotNormalized, WrongAgentCount
from .fairness import Criterion, satisfies

DEFAULT_DISTRICT_BUDGET = 10**7
DEFAULT_GOODS_BUDGET = 10**7


def _require_two_agents(instance: Instance) -> None:
    if instance.n != 2:
        raise WrongAgentCount(f"expected 2 agents, got {instance.n}")


def _require_normalized(instance: Instance) -> None:
    for i in range(instance.n):
        if instance.row_sum(i) != 1:
            raise NotNormalized(f"agent {i} row sums to {instance.row_sum(i)}, expected 1")


def classify_items(instance: Instance, eps: Fraction) -> tuple[list[int], list[int]]:
    """Split items into (big, small): big iff some agent's cost exceeds eps.

    On a normalized two-agent instance at most floor(2/eps) items are big.
    """
    _require_two_agents(instance)
    _require_normalized(instance)
    if eps <= 0:
        raise ValueError("eps must be positive")
    big = [o for o in range(instance.m)
           if instance.costs[0][o] > eps or instance.costs[1][o] > eps]
    small = [o for o in range(instance.m) if o not in set(big)]
    assert len(big) <= math.floor(2 / eps)
    return big, small


@dataclass(frozen=True)
class District:
    """One cell of the two-agent search space.

    big_assignment maps each big item to an agent; the removable item goes to
    the designated agent; a1/a2 are the fixed big-item costs of the designated
    and other agent (a1 excludes the removable item when it is big).
    """

    designated: int
    removable: int
    big_assignment: dict[int, int]
    a1: Fraction
    a2: Fraction
    smalls: tuple[int, ...]


@dataclass(frozen=True)
class DistrictLPSolution:
    """Exact vertex optimum of the district LP; x[j] is the fraction of
    smalls[j] given to the designated agent. At most one coordinate is
    strictly fractional."""

    x: tuple[Fraction, ...]
    objective: Fraction
    fractional_index: int | None


def solve_district(instance: Instance, district: District) -> DistrictLPSolution | None:
    """Solve min sum c_d(s_j) x_j + sum c_e(s_j)(1 - x_j) subject to

        a1 + sum c_d(s_j) x_j        <= a2 + sum c_e(s_j)(1 - x_j)
        a2 + sum c_e(s_j)(1 - x_j)   <= a1 + c_d(o') + sum c_d(s_j) x_j
        0 <= x_j <= 1

    where d is the designated agent and e the other. Substituting
    D = (a1 - a2 - sum c_e) + sum (c_d + c_e) x the constraints become
    -c_d(o') <= D <= 0, a single-interval continuous knapsack solved greedily
    by exact exchange ratios. When c_d(o') = 0 the interval collapses to an
    equality. Returns None when the district is infeasible.
    """
    d = district.designated
    e = 1 - d
    cd = [instance.costs[d][s] for s in district.smalls]
    ce = [instance.costs[e][s] for s in district.smalls]
    k = len(district.smalls)
    slack = instance.costs[d][district.removable]
    lower = -slack  # D >= -c_d(o')
    upper = Fraction(0)

    base = district.a1 - district.a2 - sum(ce, Fraction(0))
    if base > upper or base + sum(cd[j] + ce[j] for j in range(k)) < lower:
        return None

    # unconstrained optimum: x_j = 1 exactly when moving s_j to the designated
    # agent lowers the objective
    x = [Fraction(1) if cd[j] < ce[j] else Fraction(0) for j in range(k)]
    D = base + sum((cd[j] + ce[j]) * x[j] for j in range(k))
    fractional = None

    if D > upper:
        # lower D by pulling items back from the designated agent, cheapest
        # objective increase per unit of D first
        need = D - upper
        order = sorted((j for j in range(k) if x[j] == 1),
                       key=lambda j: ((ce[j] - cd[j]) / (cd[j] + ce[j]), j))
        for j in order:
            h = cd[j] + ce[j]
            if h >= need:
                x[j] = 1 - need / h
                if 0 < x[j] < 1:
                    fractional = j
                need = Fraction(0)
                break
            x[j] = Fraction(0)
            need -= h
        if need > 0:
            return None
    elif D < lower:
        # raise D by pushing zero items to the designated agent, cheapest
        # objective increase per unit of D first
        need = lower - D
        order = sorted((j for j in range(k) if x[j] == 0 and cd[j] + ce[j] > 0),
                       key=lambda j: ((cd[j] - ce[j]) / (cd[j] + ce[j]), j))
        for j in order:
            h = cd[j] + ce[j]
            if h >= need:
                x[j] = need / h
                if 0 < x[j] < 1:
                    fractional = j
                need = Fraction(0)
                break
            x[j] = Fraction(1)
            need -= h
        if need > 0:
            return None

    objective = sum((cd[j] * x[j] + ce[j] * (1 - x[j]) for j in range(k)), Fraction(0))
    return DistrictLPSolution(tuple(x), objective, fractional)


def round_district(instance: Instance, district: District,
                   lp: DistrictLPSolution) -> Allocation:
    """Turn a vertex LP solution into a complete EQ1 allocation.

    Integral coordinates are honored. The single fractional item (if any) goes
    to the other agent when the designated agent's settled cost already weakly
    dominates, or when adding the removable item's cost would push it over;
    otherwise it goes to the designated agent.
    """
    d = district.designated
    e = 1 - d
    bundles = [set(), set()]
    for item, agent in district.big_assignment.items():
        bundles[agent].add(item)
    bundles[d].add(district.removable)
    settled_d = district.a1
    settled_e = district.a2
    for j, s in enumerate(district.smalls):
        if lp.fractional_index is not None and j == lp.fractional_index:
            continue
        if lp.x[j] == 1:
            bundles[d].add(s)
            settled_d += instance.costs[d][s]
        else:
            bundles[e].add(s)
            settled_e += instance.costs[e][s]
    if lp.fractional_index is not None:
        s_t = district.smalls[lp.fractional_index]
        if settled_d >= settled_e:
            bundles[e].add(s_t)
        elif settled_d + instance.costs[d][district.removable] > settled_e:
            bundles[e].add(s_t)
        else:
            bundles[d].add(s_t)
    return Allocation(tuple(frozenset(b) for b in bundles))


def enumerate_districts(instance: Instance, eps: Fraction,
                        budget: int = DEFAULT_DISTRICT_BUDGET):
    """Yield districts in lexicographic key order
    (designated agent, removable item, big-assignment bitmask)."""
    big, small = classify_items(instance, eps)
    count = 2 * instance.m * (2 ** len(big))
    if count > budget:
        raise BudgetExceeded(count, budget)
    for designated in (0, 1):
        for removable in range(instance.m):
            for mask in range(2 ** len(big)):
                assignment = {big[b]: (0 if mask >> b & 1 else 1)
                              for b in range(len(big))}
                if removable in assignment and assignment[removable] != designated:
                    continue
                a1 = sum((instance.costs[designated][o]
                          for o, a in assignment.items()
                          if a == designated and o != removable), Fraction(0))
                other = 1 - designated
                a2 = sum((instance.costs[other][o]
                          for o, a in assignment.items() if a == other), Fraction(0))
                smalls = tuple(s for s in small if s != removable)
                yield District(designated, removable, assignment, a1, a2, smalls)


def eq1_scheme(instance: Instance, eps: Fraction,
               budget: int = DEFAULT_DISTRICT_BUDGET) -> tuple[Allocation, Fraction]:
    """EQ1 allocation with social cost at most OPT_EQ1 + eps (n = 2).

    Every district is solved and rounded; the cheapest representative wins
    (earliest district key on ties). At least one district is always feasible.
    """
    _require_two_agents(instance)
    if instance.m == 0:  # nothing to allocate; normalization is impossible
        return Allocation((frozenset(), frozenset())), Fraction(0)
    _require_normalized(instance)
    best = None
    best_cost = None
    for district in enumerate_districts(instance, eps, budget):
        lp = solve_district(instance, district)
        if lp is None:
            continue
        alloc = round_district(instance, district, lp)
        cost = social_cost(instance, alloc)
        if best_cost is None or cost < best_cost:
            best, best_cost = alloc, cost
    assert best is not None, "no feasible district; scheme invariant broken"
    return best, best_cost


# --- goods-chores duality (n = 2) -------------------------------------------


def dual_transform(instance: Instance) -> Instance:
    """Chores costs reread as goods valuations: the matrix is unchanged."""
    _require_two_agents(instance)
    return instance


def mirror(allocation: Allocation) -> Allocation:
    """Swap the two bundles; an involution linking goods and chores EF1."""
    if allocation.n != 2:
        raise WrongAgentCount(f"expected 2 bundles, got {allocation.n}")
    return Allocation((allocation.bundles[1], allocation.bundles[0]))


def goods_ef1(instance: Instance, allocation: Allocation) -> bool:
    """Goods-side EF1: each agent values her bundle at least as much as any
    other bundle with its single best item removed."""
    n = instance.n
    for i in range(n):
        own = instance.bundle_cost(i, allocation.bundles[i])
        for j in range(n):
            if j == i or not allocation.bundles[j]:
                continue
            other = instance.bundle_cost(i, allocation.bundles[j])
            best = max(instance.costs[i][o] for o in allocation.bundles[j])
            if own < other - best:
                return False
    return True


def social_welfare(instance: Instance, allocation: Allocation) -> Fraction:
    return social_cost(instance, allocation)


GoodsSolver = Callable[[Instance], tuple[Allocation, Fraction]]


def sw_ef1_goods(instance: Instance, mode: str = "exact",
                 plug: GoodsSolver | None = None,
                 budget: int = DEFAULT_GOODS_BUDGET) -> tuple[Allocation, Fraction]:
    """Maximize social welfare over goods-EF1 allocations (n = 2).

    exact mode enumerates all 2^m allocations; plug mode delegates to any
    solver guaranteeing SW >= (1 - eps') * optimum and goods-EF1 output.
    """
    _require_two_agents(instance)
    if mode == "plug":
        if plug is None:
            raise ValueError("plug mode requires a solver")
        alloc, sw = plug(instance)
        assert goods_ef1(instance, alloc), "plug solver returned a non-EF1 allocation"
        return alloc, sw
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    m = instance.m
    required = 2**m
    if required > budget:
        raise BudgetExceeded(required, budget)
    denominators = [c.denominator for row in instance.costs for c in row]
    scale = math.lcm(*denominators) if denominators else 1
    V = [[int(c * scale) for c in row] for row in instance.costs]
    best_vector = None
    best_sw = None
    for vector in product(range(2), repeat=m):
        b = [[o for o in range(m) if vector[o] == a] for a in (0, 1)]
        own = [sum(V[a][o] for o in b[a]) for a in (0, 1)]
        ok = True
        for i in (0, 1):
            j = 1 - i
            if b[j]:
                other = sum(V[i][o] for o in b[j])
                if own[i] < other - max(V[i][o] for o in b[j]):
                    ok = False
                    break
        if ok and (best_sw is None or own[0] + own[1] > best_sw):
            best_sw = own[0] + own[1]
            best_vector = vector
    assert best_vector is not None  # EF1 allocations always exist
    alloc = Allocation.from_assignment(best_vector, 2)
    exact = sum((instance.costs[a][o] for o, a in enumerate(best_vector)), Fraction(0))
    return alloc, exact


def ef1_scheme(instance: Instance, eps: Fraction = Fraction(0),
               mode: str = "exact", plug: GoodsSolver | None = None,
               budget: int = DEFAULT_GOODS_BUDGET) -> tuple[Allocation, Fraction]:
    """Chores EF1 allocation with social cost at most OPT_EF1 + eps (n = 2).

    Exact goods solver makes the additive error zero; a plug solver run with
    accuracy eps/2 inherits the additive eps bound.
    """
    _require_two_agents(instance)
    _require_normalized(instance)
    if eps < 0:
        raise ValueError("eps must be non-negative")
    goods = dual_transform(instance)
    goods_alloc, _sw = sw_ef1_goods(goods, mode=mode, plug=plug, budget=budget)
    chores_alloc = mirror(goods_alloc)
    cost = social_cost(instance, chores_alloc)
    assert satisfies(instance, chores_alloc, Criterion.EF1)
    return chores_alloc, cost
