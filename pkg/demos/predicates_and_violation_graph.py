"""
Fairness predicates and the violation graph
===========================================

A walkthrough of the five exact predicates (EQ, EF, EQX, EQ1, EF1) on a tiny
chores instance, and of the directed graph that records which agents still
break EQ1 against which others.
"""

from fractions import Fraction

from chorefair import (Allocation, Criterion, Instance, build_violation_graph,
                       implication_check, satisfies)

# Two agents, three chores. Costs are exact rationals; every row sums to 1.
instance = Instance.from_rows([
    [Fraction(1, 2), Fraction(3, 10), Fraction(1, 5)],
    [Fraction(1, 10), Fraction(3, 5), Fraction(3, 10)],
])

# Pile everything on agent 0 and see what survives.
lopsided = Allocation.from_lists([[0, 1, 2], []])
for criterion in Criterion:
    print(f"{criterion.value:>4}: {satisfies(instance, lopsided, criterion)}")

# The graph classifies agents: N0 settled, N1 unenvied violators, N2 violated.
graph = build_violation_graph(instance, lopsided)
print("arcs:", sorted(graph.arcs))
print("N0:", sorted(graph.n0), "N1:", sorted(graph.n1), "N2:", sorted(graph.n2))

# A sensible split is envy-free and equitable up to any item (exact equality
# of costs is rare); the chain EQ => EQX => EQ1 and EF => EF1 is asserted on
# every call.
balanced = Allocation.from_lists([[1], [0, 2]])
report = implication_check(instance, balanced)
print("balanced split:", report.as_dict())
