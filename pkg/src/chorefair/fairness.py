"""Exact fairness predicates and the pairwise EQ1 violation graph.

Conventions: an agent with an empty bundle satisfies every up-to-one/up-to-any
condition vacuously (the quantifiers range over her own bundle), and zero-cost
items are treated literally (removing one leaves the bundle cost unchanged).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import Allocation, Instance, agent_cost, check_partition


class Criterion(enum.Enum):
    EQ = "EQ"
    EF = "EF"
    EQX = "EQX"
    EQ1 = "EQ1"
    EF1 = "EF1"

    @staticmethod
    def parse(text: str) -> "Criterion":
        return Criterion(text.strip().upper())


def _own_costs(instance: Instance, allocation: Allocation) -> list[Fraction]:
    return [agent_cost(instance, allocation, i) for i in range(instance.n)]


def satisfies(instance: Instance, allocation: Allocation, criterion: Criterion) -> bool:
    """Evaluate the exact fairness predicate on a complete allocation."""
    check_partition(instance, allocation)
    n = instance.n
    if n <= 1:
        return True
    own = _own_costs(instance, allocation)

    if criterion is Criterion.EQ:
        return all(own[i] == own[0] for i in range(n))

    if criterion is Criterion.EF:
        return all(own[i] <= instance.bundle_cost(i, allocation.bundles[j])
                   for i in range(n) for j in range(n) if j != i)

    if criterion in (Criterion.EQX, Criterion.EQ1):
        others_min = [min(own[j] for j in range(n) if j != i) for i in range(n)]
        for i in range(n):
            bundle = allocation.bundles[i]
            if not bundle:
                continue
            row = instance.costs[i]
            # EQ1 needs some removable item, so remove the costliest;
            # EQX needs every removal to work, so remove the cheapest.
            pick = max if criterion is Criterion.EQ1 else min
            removed = pick(row[o] for o in bundle)
            if own[i] - removed > others_min[i]:
                return False
        return True

    if criterion is Criterion.EF1:
        for i in range(n):
            bundle = allocation.bundles[i]
            if not bundle:
                continue
            row = instance.costs[i]
            reduced = own[i] - max(row[o] for o in bundle)
            for j in range(n):
                if j != i and reduced > instance.bundle_cost(i, allocation.bundles[j]):
                    return False
        return True

    raise ValueError(f"unknown criterion {criterion!r}")


@dataclass(frozen=True)
class ViolationGraph:
    """Directed graph over agents: arc (i, j) means i breaks EQ1 against j
    even after removing her costliest item. n0/n1/n2 classify agents by
    (in-degree, out-degree): (0,0), (0,+), (+,*) respectively."""

    arcs: frozenset[tuple[int, int]]
    n0: frozenset[int]
    n1: frozenset[int]
    n2: frozenset[int]


def build_violation_graph(instance: Instance, allocation: Allocation) -> ViolationGraph:
    check_partition(instance, allocation)
    n = instance.n
    own = _own_costs(instance, allocation)
    reduced = []
    for i in range(n):
        bundle = allocation.bundles[i]
        if bundle:
            row = instance.costs[i]
            reduced.append(own[i] - max(row[o] for o in bundle))
        else:
            reduced.append(None)  # empty bundle never emits an arc
    arcs = frozenset((i, j) for i in range(n) for j in range(n)
                     if i != j and reduced[i] is not None and reduced[i] > own[j])
    indeg = [0] * n
    outdeg = [0] * n
    for i, j in arcs:
        outdeg[i] += 1
        indeg[j] += 1
    n0 = frozenset(i for i in range(n) if indeg[i] == 0 and outdeg[i] == 0)
    n1 = frozenset(i for i in range(n) if indeg[i] == 0 and outdeg[i] > 0)
    n2 = frozenset(i for i in range(n) if indeg[i] > 0)
    return ViolationGraph(arcs, n0, n1, n2)


@dataclass(frozen=True)
class ImplicationReport:
    """All five predicate values plus the implication chain checks."""

    eq: bool
    ef: bool
    eqx: bool
    eq1: bool
    ef1: bool

    @property
    def implications_hold(self) -> bool:
        return ((not self.eq or self.eqx) and (not self.eqx or self.eq1)
                and (not self.ef or self.ef1))

    def as_dict(self) -> dict:
        return {"EQ": self.eq, "EF": self.ef, "EQX": self.eqx,
                "EQ1": self.eq1, "EF1": self.ef1}


def implication_check(instance: Instance, allocation: Allocation) -> ImplicationReport:
    """Evaluate every predicate and assert EQ => EQX => EQ1 and EF => EF1."""
    report = ImplicationReport(
        eq=satisfies(instance, allocation, Criterion.EQ),
        ef=satisfies(instance, allocation, Criterion.EF),
        eqx=satisfies(instance, allocation, Criterion.EQX),
        eq1=satisfies(instance, allocation, Criterion.EQ1),
        ef1=satisfies(instance, allocation, Criterion.EF1),
    )
    assert report.implications_hold, f"implication chain violated: {report.as_dict()}"
    return report
