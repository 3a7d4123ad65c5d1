"""
Exhaustive oracle and the cost of fairness
==========================================

The oracle enumerates all n^m allocations to find the cheapest one satisfying
a fairness criterion. Comparing that against the unconstrained optimum gives
the additive gap and the multiplicative ratio, i.e. how much fairness costs.
"""

from fractions import Fraction

from chorefair import Criterion, cof_gap, gen_eq1_cof, gen_eqx_cof

# Worst-case family for EQX: the fair optimum is nearly n times the
# unconstrained one, and the additive gap grows with K without bound.
g = gen_eqx_cof(n=3, K=1000)
report = cof_gap(g.instance, Criterion.EQX)
print("EQX family, n=3, K=1000")
print("  unconstrained optimum:", report.opt_unconstrained)
print("  fair optimum:", report.opt_fair)
print("  gap:", report.gap, " ratio:", report.ratio)
print("  witness:", [sorted(b) for b in report.witness.bundles])

# Lower-bound family for EQ1 on normalized instances: the gap approaches
# (n-1)/n as eps shrinks, matching the closed form exactly.
for n in (2, 3, 4):
    eps = Fraction(1, 1000)
    g = gen_eq1_cof(n, eps)
    report = cof_gap(g.instance, Criterion.EQ1)
    formula = Fraction(n - 1, n) - (n - 1) * eps
    print(f"EQ1 family, n={n}: gap = {report.gap} "
          f"(closed form {formula}, match: {report.gap == formula})")
