"""
Two-agent approximation schemes
===============================

For two agents the package ships an additive scheme for each criterion:
EQ1 via districting plus an exact two-constraint LP, and EF1 via the
goods-chores correspondence (reread the costs as valuations, maximize
welfare under goods-EF1, swap the two bundles back).
"""

from fractions import Fraction

from chorefair import (Criterion, dual_transform, ef1_scheme, eq1_scheme,
                       gen_random, mirror, normalize, opt_fair, satisfies,
                       social_welfare, sw_ef1_goods)

instance = normalize(gen_random(n=2, m=10, seed=7).instance)

# EQ1 scheme: every item costlier than eps for someone is "big" and gets a
# fixed assignment per district; the small items are split by an LP whose
# vertex solution has at most one fractional coordinate to round.
eps = Fraction(1, 4)
alloc, cost = eq1_scheme(instance, eps)
opt = opt_fair(instance, Criterion.EQ1)[1]
print("EQ1 scheme: SC =", cost, " oracle OPT =", opt, " eps =", eps)
print("  additive error:", cost - opt, "<= eps:", cost - opt <= eps)
assert satisfies(instance, alloc, Criterion.EQ1)

# EF1 via duality: on normalized two-agent instances every allocation obeys
# SC(mirror(A)) + SW(A) = 2, so welfare maximization is cost minimization.
goods = dual_transform(instance)
goods_alloc, welfare = sw_ef1_goods(goods)
chores_alloc = mirror(goods_alloc)
print("EF1 via duality: SW =", welfare, " SC =", 2 - welfare)
alloc, cost = ef1_scheme(instance)
print("  scheme SC:", cost, " == oracle OPT:",
      cost == opt_fair(instance, Criterion.EF1)[1])
print("  identity check:", social_welfare(goods, goods_alloc) + cost == 2)
