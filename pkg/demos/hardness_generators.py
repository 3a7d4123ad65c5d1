"""
Hardness-instance generators
============================

Each generator builds a fair-division instance from a number-partitioning
input so that the optimal fair social cost reveals whether the partition
splits evenly. Passing a known solution attaches the explicit yes-witness.
"""

from chorefair import (Criterion, PartitionInput, gen_ef1_hard,
                       gen_ef1_two_agent_hard, gen_eq1_hard, gen_eqx_hard,
                       opt_fair, satisfies, social_cost)

# {3,1,2,2} splits as {3,1} | {2,2}; both halves sum to T = 4.
p = PartitionInput((3, 1, 2, 2))
solution = (0, 1)
K = 1000

for name, g, criterion in [
    ("EQ1 reduction", gen_eq1_hard(p, 3, K, solution=solution), Criterion.EQ1),
    ("EF1 reduction", gen_ef1_hard(p, 3, K, solution=solution), Criterion.EF1),
    ("EF1 two-agent", gen_ef1_two_agent_hard(p, K, solution=solution), Criterion.EF1),
    ("EQX reduction", gen_eqx_hard(p, 2, K, solution=solution), Criterion.EQX),
]:
    witness_cost = social_cost(g.instance, g.witness)
    oracle_cost = opt_fair(g.instance, criterion)[1]
    print(f"{name}: {g.instance.n} agents, {g.instance.m} items")
    print(f"  witness {criterion.value}: "
          f"{satisfies(g.instance, g.witness, criterion)}, SC = {witness_cost}")
    print(f"  oracle optimum: {oracle_cost}"
          + (f" (threshold W = {g.threshold})" if g.threshold else ""))
