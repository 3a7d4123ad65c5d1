"""Constructive polynomial-time procedures.

* optimal_allocation: each item to a cheapest agent (the unconstrained optimum).
* eq1_bounded: graph-driven reassignment from the optimum; EQ1 with SC <= 1.
* round_robin / ef1_bounded: cyclic picking orders; EF1 with SC <= 1.

All ties break by lowest index (agent, then item) for reproducible traces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Allocation, Instance, agent_cost, format_rational, social_cost
from .errors import InvalidPermutation, NotNormalized
from .fairness import ViolationGraph, build_violation_graph


def _require_normalized(instance: Instance) -> None:
    for i in range(instance.n):
        if instance.row_sum(i) != 1:
            raise NotNormalized(f"agent {i} row sums to {instance.row_sum(i)}, expected 1")


def optimal_allocation(instance: Instance) -> tuple[Allocation, Fraction]:
    """Assign every item to an agent of minimum cost for it (ties: lowest agent).

    For additive costs this is the unconstrained social-cost optimum.
    """
    vector = []
    total = Fraction(0)
    for o in range(instance.m):
        best = min(range(instance.n), key=lambda i: (instance.costs[i][o], i))
        vector.append(best)
        total += instance.costs[best][o]
    return Allocation.from_assignment(vector, instance.n), total


@dataclass(frozen=True)
class RoundRecord:
    """One reassignment round: who gave which item to whom, and the state after."""

    mover: int
    item: int
    receiver: int
    allocation: Allocation
    min_agent_cost: Fraction
    n0: frozenset[int]
    n1: frozenset[int]
    n2: frozenset[int]


@dataclass(frozen=True)
class RoundTrace:
    initial_allocation: Allocation
    initial_graph: ViolationGraph
    records: tuple[RoundRecord, ...]

    def as_json_obj(self) -> dict:
        return {
            "rounds": len(self.records),
            "records": [
                {
                    "mover": r.mover,
                    "item": r.item,
                    "receiver": r.receiver,
                    "bundles": [sorted(b) for b in r.allocation.bundles],
                    "min_agent_cost": format_rational(r.min_agent_cost),
                }
                for r in self.records
            ],
        }


def eq1_bounded(instance: Instance) -> tuple[Allocation, RoundTrace]:
    """EQ1 allocation with social cost at most 1 on a normalized instance.

    Starts from the unconstrained optimum; while any agent violates EQ1,
    the worst violator (largest cost after removing her cheapest-to-drop
    item) hands her lowest-index item to the violated agent who is cheapest
    for it. Terminates within 2nm moves.
    """
    _require_normalized(instance)
    n = instance.n
    bundles = [set(b) for b in optimal_allocation(instance)[0].bundles]

    def snapshot() -> Allocation:
        return Allocation(tuple(frozenset(b) for b in bundles))

    initial = snapshot()
    graph = build_violation_graph(instance, initial)
    initial_graph = graph
    records: list[RoundRecord] = []
    limit = 2 * n * instance.m

    while graph.n1:
        if len(records) > limit:
            raise AssertionError("exceeded the 2nm round bound")

        def removal_floor(i: int) -> Fraction:
            cost = instance.bundle_cost(i, bundles[i])
            return cost - max(instance.costs[i][o] for o in bundles[i])

        # argmax by removal floor; max() keeps the first maximum, so ascending
        # agent order gives the lowest-index tie-break
        i_star = max(sorted(graph.n1), key=removal_floor)
        item = min(bundles[i_star])
        j_star = min(graph.n2, key=lambda j: (instance.costs[j][item], j))
        bundles[i_star].discard(item)
        bundles[j_star].add(item)
        alloc = snapshot()
        graph = build_violation_graph(instance, alloc)
        min_cost = min(agent_cost(instance, alloc, i) for i in range(n))
        records.append(RoundRecord(i_star, item, j_star, alloc, min_cost,
                                   graph.n0, graph.n1, graph.n2))

    result = snapshot()
    return result, RoundTrace(initial, initial_graph, tuple(records))


def round_robin(instance: Instance, order: tuple[int, ...] | list[int]) -> Allocation:
    """Agents take turns in the given cyclic order; on her turn an agent takes
    her minimum-cost remaining item (ties: lowest item index). Always EF1."""
    order = tuple(order)
    if sorted(order) != list(range(instance.n)):
        raise InvalidPermutation(f"{order} is not a permutation of 0..{instance.n - 1}")
    bundles: list[set[int]] = [set() for _ in range(instance.n)]
    remaining = list(range(instance.m))
    pos = 0
    while remaining:
        agent = order[pos % len(order)]
        pick = min(remaining, key=lambda o: (instance.costs[agent][o], o))
        bundles[agent].add(pick)
        remaining.remove(pick)
        pos += 1
    return Allocation(tuple(frozenset(b) for b in bundles))


def cyclic_shifts(n: int) -> list[tuple[int, ...]]:
    """The n cyclic rotations of (0, 1, ..., n-1)."""
    base = list(range(n))
    return [tuple(base[k:] + base[:k]) for k in range(n)]


def ef1_bounded(instance: Instance) -> tuple[Allocation, tuple[int, ...]]:
    """Best-of-n-rotations round robin: EF1 with social cost at most 1 on a
    normalized instance. Ties between rotations break to the lowest shift."""
    _require_normalized(instance)
    best_alloc = None
    best_cost = None
    best_order = None
    for order in cyclic_shifts(instance.n):
        alloc = round_robin(instance, order)
        cost = social_cost(instance, alloc)
        if best_cost is None or cost < best_cost:
            best_alloc, best_cost, best_order = alloc, cost, order
    return best_alloc, best_order


def position_bundle_bound(instance: Instance, agent: int, position: int) -> Fraction:
    """Upper bound on the agent's round-robin cost at a 1-based position:
    the cost of her position-th bundle when her own sorted-cost item list is
    dealt out cyclically over n bundles."""
    n = instance.n
    ranked = sorted(range(instance.m), key=lambda o: (instance.costs[agent][o], o))
    picks = ranked[position - 1::n]
    return instance.bundle_cost(agent, picks)
