"""
Bounded-social-cost EQ1 and EF1 algorithms
==========================================

On a normalized instance (every row sums to 1) both constructive algorithms
guarantee social cost at most 1: graph-driven reassignment for EQ1, and the
best of the n cyclic round-robin orders for EF1.
"""

from chorefair import (Criterion, ef1_bounded, eq1_bounded, gen_random,
                       normalize, satisfies, social_cost)

instance = normalize(gen_random(n=4, m=9, seed=2024).instance)

# EQ1: start from the unconstrained optimum and hand items from the worst
# unenvied violator to a violated agent until the violation graph is empty.
alloc, trace = eq1_bounded(instance)
print("EQ1 allocation:", [sorted(b) for b in alloc.bundles])
print("social cost:", social_cost(instance, alloc), "(bound: 1)")
print("moves:", len(trace.records), f"(bound: {2 * instance.n * instance.m})")
for r in trace.records:
    print(f"  agent {r.mover} hands item {r.item} to agent {r.receiver};"
          f" min agent cost now {r.min_agent_cost}")
assert satisfies(instance, alloc, Criterion.EQ1)

# EF1: run round robin under every cyclic rotation and keep the cheapest.
alloc, order = ef1_bounded(instance)
print("EF1 allocation:", [sorted(b) for b in alloc.bundles])
print("picking order:", order, " social cost:", social_cost(instance, alloc))
assert satisfies(instance, alloc, Criterion.EF1)
