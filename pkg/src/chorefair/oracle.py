"""Exhaustive exact search over all n^m allocations.

Ground truth for the approximation schemes and the bounded-cost algorithms.
Internally the cost matrix is rescaled to integers (predicates are invariant
under uniform positive scaling), so the inner loop runs on machine/bignum ints;
results are converted back to exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .algorithms import optimal_allocation
from .core import Allocation, Instance
from .errors import BudgetExceeded, NoFairAllocation
from .fairness import Criterion

DEFAULT_BUDGET = 10**7


def _check_budget(n: int, m: int, budget: int) -> None:
    required = n**m if m > 0 else 1
    if required > budget:
        raise BudgetExceeded(required, budget)


def enumerate_allocations(n: int, m: int, budget: int = DEFAULT_BUDGET) -> Iterator[Allocation]:
    """Yield every ordered partition of m items into n bundles exactly once,
    in lexicographic order of the item -> agent assignment vector."""
    _check_budget(n, m, budget)
    for vector in product(range(n), repeat=m):
        yield Allocation.from_assignment(vector, n)


def _int_matrix(instance: Instance) -> tuple[list[list[int]], int]:
    denominators = [c.denominator for row in instance.costs for c in row]
    scale = math.lcm(*denominators) if denominators else 1
    return [[int(c * scale) for c in row] for row in instance.costs], scale


def _vector_satisfies(C: list[list[int]], vector: tuple[int, ...], n: int,
                      criterion: Criterion) -> bool:
    """Integer-matrix predicate evaluation for one assignment vector."""
    if n <= 1:
        return True
    own = [0] * n
    worst = [0] * n  # costliest own item, for the up-to-one removal
    cheapest = [None] * n  # cheapest own item, for the up-to-any removal
    for o, a in enumerate(vector):
        c = C[a][o]
        own[a] += c
        if c > worst[a]:
            worst[a] = c
        if cheapest[a] is None or c < cheapest[a]:
            cheapest[a] = c

    if criterion is Criterion.EQ:
        return all(x == own[0] for x in own)

    if criterion in (Criterion.EQX, Criterion.EQ1):
        for i in range(n):
            if cheapest[i] is None:
                continue
            removed = worst[i] if criterion is Criterion.EQ1 else cheapest[i]
            bar = min(own[j] for j in range(n) if j != i)
            if own[i] - removed > bar:
                return False
        return True

    # EF / EF1 need cross costs c_i(A_j)
    cross = [[0] * n for _ in range(n)]
    worst_at = [[0] * n for _ in range(n)]  # max_{o in A_j} C[i][o]
    for o, a in enumerate(vector):
        for i in range(n):
            c = C[i][o]
            cross[i][a] += c
            if c > worst_at[i][a]:
                worst_at[i][a] = c

    if criterion is Criterion.EF:
        return all(own[i] <= cross[i][j] for i in range(n) for j in range(n) if j != i)

    if criterion is Criterion.EF1:
        for i in range(n):
            if cheapest[i] is None:
                continue
            reduced = own[i] - worst_at[i][i]
            for j in range(n):
                if j != i and reduced > cross[i][j]:
                    return False
        return True

    raise ValueError(f"unknown criterion {criterion!r}")


def opt_fair(instance: Instance, criterion: Criterion,
             budget: int = DEFAULT_BUDGET) -> tuple[Allocation, Fraction]:
    """Minimum social cost over all allocations satisfying the criterion.

    Ties break to the lexicographically smallest assignment vector. Raises
    NoFairAllocation only for EQ/EF (EQX, EQ1, EF1 always have witnesses).
    """
    n, m = instance.n, instance.m
    _check_budget(n, m, budget)
    (C, _scale) = _int_matrix(instance)
    best_vector = None
    best_cost = None
    for vector in product(range(n), repeat=m):
        if not _vector_satisfies(C, vector, n, criterion):
            continue
        cost = sum(C[a][o] for o, a in enumerate(vector))
        if best_cost is None or cost < best_cost:
            best_cost, best_vector = cost, vector
    if best_vector is None:
        raise NoFairAllocation(f"no allocation satisfies {criterion.value}")
    witness = Allocation.from_assignment(best_vector, n)
    exact = sum((instance.costs[a][o] for o, a in enumerate(best_vector)), Fraction(0))
    return witness, exact


@dataclass(frozen=True)
class GapReport:
    """Cost-of-fairness accounting for one criterion on one instance."""

    criterion: Criterion
    opt_unconstrained: Fraction
    opt_fair: Fraction | None  # None: no fair allocation exists (EQ/EF only)
    gap: Fraction | None
    ratio: Fraction | None  # None means +infinity (opt_unconstrained == 0 < opt_fair)
    witness: Allocation | None

    @property
    def ratio_is_infinite(self) -> bool:
        return self.opt_fair is not None and self.ratio is None


def cof_gap(instance: Instance, criterion: Criterion,
            budget: int = DEFAULT_BUDGET) -> GapReport:
    """Gap and ratio between the optimal fair and unconstrained social costs."""
    _, opt = optimal_allocation(instance)
    try:
        witness, fair = opt_fair(instance, criterion, budget)
    except NoFairAllocation:
        return GapReport(criterion, opt, None, None, None, None)
    gap = fair - opt
    if opt > 0:
        ratio = fair / opt
    elif fair == 0:
        ratio = Fraction(1)
    else:
        ratio = None  # +infinity
    return GapReport(criterion, opt, fair, gap, ratio, witness)
