"""Constructors for the worst-case and hardness instance families.

Every generator emits the unscaled cost table together with metadata: the
family's exact row sum, closed-form expected quantities, and (when a partition
solution is supplied) the explicit yes-witness allocation. Normalization is a
separate downstream call. Generators never solve the partition problem; a
known solution may be passed in to obtain the witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import Allocation, Instance, rational
from .errors import ParameterError


@dataclass(frozen=True)
class PartitionInput:
    """A multiset of positive integers; a yes-instance splits into two halves
    of equal sum T."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values or any(v <= 0 for v in self.values):
            raise ParameterError("partition values must be positive integers")

    @property
    def r(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def half(self) -> int:
        """The target T; requires an even total."""
        if self.total % 2 != 0:
            raise ParameterError(f"partition sum {self.total} is odd")
        return self.total // 2


@dataclass(frozen=True)
class GeneratedInstance:
    instance: Instance
    family: str
    params: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    row_sum: Fraction | None = None
    witness: Allocation | None = None
    threshold: Fraction | None = None


def pad_partition(p: PartitionInput, k: int) -> PartitionInput:
    """Lift a two-way partition input to a k-way one by appending k - 2
    integers, each equal to half the original total."""
    if k < 2:
        raise ParameterError("k must be at least 2")
    half = p.half
    return PartitionInput(p.values + (half,) * (k - 2))


def gen_eqx_cof(n: int, K) -> GeneratedInstance:
    """Worst-case family for EQX: n identity-ish expensive items plus n - 1
    shared doubling items. Any EQX allocation costs almost n times the
    unconstrained optimum."""
    K = rational(K)
    if n < 2:
        raise ParameterError("n must be at least 2")
    if K <= n * 2**n:
        raise ParameterError(f"K must exceed n*2^n = {n * 2**n}")
    rows = []
    for i in range(n):
        row = [K if j == i else Fraction(1) for j in range(n)]
        row += [Fraction(n * 2**j) for j in range(n - 1)]
        rows.append(tuple(row))
    inst = Instance(tuple(rows))
    return GeneratedInstance(
        instance=inst,
        family="eqx-cof",
        params={"n": n, "K": K},
        expected={
            "opt_unconstrained": Fraction(n * 2 ** (n - 1)),
            "opt_eqx": n * K + n * 2 ** (n - 1) - n,
        },
        row_sum=K + n * 2 ** (n - 1) - 1,
    )


def _eqx_hard_rows(p: PartitionInput, n: int, K: Fraction) -> list[tuple[Fraction, ...]]:
    T = Fraction(p.half)
    r = p.r
    rows = []
    for i in range(1, n + 1):  # 1-based agent index, matching the exponents
        if i <= 2:
            o2 = [Fraction(v) for v in p.values]
            o3 = [Fraction(4) * T if j == i else 10 * n ** (i - 1) * T
                  for j in range(1, n + 1)]
        else:
            o2 = [10 * r ** (i - 2) * n ** (n + i - 2) * T] * r
            o3 = [Fraction(5) * T if j == i else 10 * n ** (i - 1) * T
                  for j in range(1, n + 1)]
        x_i = sum(o2, Fraction(0)) + sum(o3, Fraction(0))
        if K - x_i <= 0:
            raise ParameterError(f"K too small: agent {i} needs K > {x_i}")
        o1 = [K - x_i if j == i else Fraction(0) for j in range(1, n + 1)]
        rows.append(tuple(o1 + o2 + o3))
    return rows


def gen_eqx_hard(p: PartitionInput, n: int, K,
                 solution: Sequence[int] | None = None) -> GeneratedInstance:
    """Partition reduction showing EQX optima are hard to approximate.

    Items: n per-agent big items, r partition items, n marker items. Every
    row sums to exactly K. A yes-instance admits an EQX allocation of social
    cost 5nT; pass the solution (indices of one half) to get the witness.
    """
    K = rational(K)
    if n < 2:
        raise ParameterError("n must be at least 2")
    T = p.half
    # the inapproximability argument wants K far above every other entry;
    # only positivity of the diagonal is structurally required (checked in
    # _eqx_hard_rows), so the asymptotic threshold is reported, not enforced
    gap_threshold = 10 * T * n ** (2 * n) * p.r**n
    rows = _eqx_hard_rows(p, n, K)
    inst = Instance(tuple(rows))
    witness = None
    if solution is not None:
        i1 = set(solution)
        i2 = set(range(p.r)) - i1
        if sum(p.values[j] for j in i1) != T:
            raise ParameterError("supplied solution does not split the sum evenly")
        r = p.r
        bundles = [set() for _ in range(n)]
        bundles[0] |= {j for j in range(1, n)}            # O^1 minus o^1_1
        bundles[0] |= {n + j for j in i1}                  # half of O^2
        bundles[0].add(n + r)                              # o^3_1
        bundles[1].add(0)                                  # o^1_1
        bundles[1] |= {n + j for j in i2}
        bundles[1].add(n + r + 1)                          # o^3_2
        for i in range(2, n):
            bundles[i].add(n + r + i)                      # o^3_i
        witness = Allocation(tuple(frozenset(b) for b in bundles))
    return GeneratedInstance(
        instance=inst,
        family="eqx-hard",
        params={"n": n, "K": K, "partition": p.values, "T": T},
        expected={"yes_opt_eqx": Fraction(5 * n * T),
                  "gap_threshold": Fraction(gap_threshold)},
        row_sum=K,
        witness=witness,
    )


def gen_eq1_cof(n: int, eps) -> GeneratedInstance:
    """Lower-bound family for the EQ1 cost of fairness: one agent finds the
    first n items nearly free while everyone else splits them evenly."""
    eps = rational(eps)
    if n < 2:
        raise ParameterError("n must be at least 2")
    if not 0 < eps < Fraction(1, n * n):
        raise ParameterError(f"eps must lie in (0, 1/{n * n})")
    rows = [tuple([eps] * n + [1 - n * eps])]
    for _ in range(1, n):
        rows.append(tuple([Fraction(1, n)] * n + [Fraction(0)]))
    inst = Instance(tuple(rows))
    bundles = [{i} for i in range(n - 1)] + [{n - 1, n}]
    witness = Allocation(tuple(frozenset(b) for b in bundles))
    return GeneratedInstance(
        instance=inst,
        family="eq1-cof",
        params={"n": n, "eps": eps},
        expected={
            "opt_unconstrained": n * eps,
            "opt_eq1": Fraction(n - 1, n) + eps,
            "gap": Fraction(n - 1, n) - (n - 1) * eps,
        },
        row_sum=Fraction(1),
        witness=witness,
    )


def gen_eq1_hard(p: PartitionInput, n: int, K,
                 solution: Sequence[int] | None = None) -> GeneratedInstance:
    """Partition reduction for EQ1 optima with n >= 3 agents."""
    K = rational(K)
    if n < 3:
        raise ParameterError("n must be at least 3")
    T = Fraction(p.half)
    r = p.r
    if K <= 10 * r * T:
        raise ParameterError("K must exceed 10*r*T")
    shared = tuple([Fraction(v, 1) / K for v in p.values]
                   + [r * T, r * T] + [T / K] * (n - 3))
    last = tuple([2 * T] * r + [T / K] * (n - 1))
    rows = [shared] * (n - 1) + [last]
    inst = Instance(tuple(rows))
    witness = None
    if solution is not None:
        i1 = set(solution)
        i2 = set(range(r)) - i1
        if sum(p.values[j] for j in i1) * 2 != p.total:
            raise ParameterError("supplied solution does not split the sum evenly")
        bundles = [set(i1), set(i2)]
        for t in range(n - 3):
            bundles.append({r + 2 + t})
        bundles.append({r, r + 1})
        witness = Allocation(tuple(frozenset(b) for b in bundles))
    return GeneratedInstance(
        instance=inst,
        family="eq1-hard",
        params={"n": n, "K": K, "partition": p.values, "T": T},
        expected={
            "yes_opt_eq1": (n + 1) * T / K,
            "no_opt_eq1_lower": (r + Fraction(n, 1) / K) * T,
        },
        row_sum=(2 * r + Fraction(n - 1, 1) / K) * T,
        witness=witness,
    )


def gen_ef1_cof(n: int, K: int, eps) -> GeneratedInstance:
    """Lower-bound family for the EF1 cost of fairness: K near-free items for
    agent 1 that everyone else prices at 1/K each."""
    eps = rational(eps)
    if n < 2:
        raise ParameterError("n must be at least 2")
    if not isinstance(K, int) or K <= 0 or K % n != 0:
        raise ParameterError("K must be a positive integer multiple of n")
    if not 0 < eps < Fraction(1, K * K):
        raise ParameterError(f"eps must lie in (0, 1/{K * K})")
    rows = [tuple([eps] * K + [1 - K * eps])]
    for _ in range(1, n):
        rows.append(tuple([Fraction(1, K)] * K + [Fraction(0)]))
    inst = Instance(tuple(rows))
    return GeneratedInstance(
        instance=inst,
        family="ef1-cof",
        params={"n": n, "K": K, "eps": eps},
        expected={
            "opt_unconstrained": K * eps,
            "opt_ef1_lower": Fraction(n - 1, n) - Fraction(1, K),
        },
        row_sum=Fraction(1),
    )


def gen_ef1_hard(p: PartitionInput, n: int, K,
                 solution: Sequence[int] | None = None) -> GeneratedInstance:
    """Partition-into-(n-1)-sets reduction for EF1 optima with n >= 3 agents.

    The input is first padded with n - 3 extra integers of value T each
    (pad_partition with k = n - 1); the padded multiset has q items.
    """
    K = rational(K)
    if n < 3:
        raise ParameterError("n must be at least 3")
    padded = pad_partition(p, n - 1)
    T = Fraction(p.half)
    q = padded.r
    if K <= 10 * q * T:
        raise ParameterError("K must exceed 10*q*T after padding")
    scale = (2 * K + n - 1) / (K * n + K)
    shared = tuple([Fraction(v, 1) / K for v in padded.values] + [T, T])
    last = tuple([scale * v for v in padded.values] + [scale * T, scale * T])
    rows = [shared] * (n - 1) + [last]
    inst = Instance(tuple(rows))
    witness = None
    if solution is not None:
        i1 = set(solution)
        i2 = set(range(p.r)) - i1
        if sum(p.values[j] for j in i1) * 2 != p.total:
            raise ParameterError("supplied solution does not split the sum evenly")
        bundles = [set(i1), set(i2)]
        for t in range(n - 3):  # each padding integer is its own set
            bundles.append({p.r + t})
        bundles.append({q, q + 1})
        witness = Allocation(tuple(frozenset(b) for b in bundles))
    return GeneratedInstance(
        instance=inst,
        family="ef1-hard",
        params={"n": n, "K": K, "partition": p.values, "T": T, "q": q},
        expected={
            "yes_opt_ef1": (n - 1) * T / K + (4 * K + 2 * n - 2) * T / (K * n + K),
        },
        row_sum=(Fraction(n - 1, 1) / K + 2) * T,
        witness=witness,
    )


def gen_ef1_two_agent_hard(p: PartitionInput, K,
                           solution: Sequence[int] | None = None) -> GeneratedInstance:
    """Two-agent partition reduction: an EF1 allocation with social cost at
    most W = 13K/2 + 2T exists iff the partition instance is a yes-instance."""
    K = rational(K)
    T = Fraction(p.half)
    r = p.r
    if K <= 10 * T:
        raise ParameterError("K must exceed 10*T")
    row1 = tuple([Fraction(v) for v in p.values] + [6 * K, 2 * K, Fraction(0)])
    row2 = tuple([Fraction(v, 2) for v in p.values]
                 + [5 * K, (3 * K + T) / 2, (3 * K + T) / 2])
    inst = Instance((row1, row2))
    threshold = Fraction(13, 2) * K + 2 * T
    witness = None
    if solution is not None:
        i1 = set(solution)
        i2 = set(range(r)) - i1
        if sum(p.values[j] for j in i1) * 2 != p.total:
            raise ParameterError("supplied solution does not split the sum evenly")
        witness = Allocation((frozenset(i1 | {r + 2}), frozenset(i2 | {r, r + 1})))
    return GeneratedInstance(
        instance=inst,
        family="ef1-2hard",
        params={"K": K, "partition": p.values, "T": T},
        expected={"yes_witness_sc": threshold},
        row_sum=2 * T + 8 * K,
        witness=witness,
        threshold=threshold,
    )


def gen_ef1_mult_hard(p: PartitionInput, n: int, K,
                      solution: Sequence[int] | None = None) -> GeneratedInstance:
    """Partition reduction with unbounded multiplicative EF1 gap (n >= 4);
    agents beyond the fourth are copies of agent 4."""
    K = rational(K)
    if n < 4:
        raise ParameterError("n must be at least 4")
    T = Fraction(p.half)
    r = p.r
    if K <= 10 * T:
        raise ParameterError("K must exceed 10*T")
    row12 = tuple([Fraction(v) for v in p.values] + [K, K, K])
    row3 = tuple([Fraction(v) for v in p.values] + [T, T, 3 * K - 2 * T])
    row4 = tuple([(K + 2 * T) / r] * r + [K, K, Fraction(0)])
    rows = [row12, row12, row3] + [row4] * (n - 3)
    inst = Instance(tuple(rows))
    witness = None
    if solution is not None and n == 4:
        # the yes-allocation is only EF1 for exactly four agents; with copy
        # agents holding empty bundles, agents with two-item bundles envy the
        # empty bundles beyond one item
        i1 = set(solution)
        i2 = set(range(r)) - i1
        if sum(p.values[j] for j in i1) * 2 != p.total:
            raise ParameterError("supplied solution does not split the sum evenly")
        bundles = [set(i1), set(i2), {r, r + 1}, {r + 2}]
        witness = Allocation(tuple(frozenset(b) for b in bundles))
    return GeneratedInstance(
        instance=inst,
        family="ef1-mult",
        params={"n": n, "K": K, "partition": p.values, "T": T},
        expected={"yes_opt_ef1": 4 * T},
        row_sum=3 * K + 2 * T,
        witness=witness,
    )


def gen_random(n: int, m: int, seed: int, granularity: int = 100) -> GeneratedInstance:
    """Seeded random instance: entries uniform over {0,...,g}/g; rows that sum
    to zero are redrawn. Reproducible across runs and platforms."""
    if granularity < 1:
        raise ParameterError("granularity must be at least 1")
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        while True:
            row = tuple(Fraction(rng.randint(0, granularity), granularity)
                        for _ in range(m))
            if m == 0 or any(c > 0 for c in row):
                break
        rows.append(row)
    inst = Instance(tuple(rows))
    return GeneratedInstance(
        instance=inst,
        family="random",
        params={"n": n, "m": m, "seed": seed, "granularity": granularity},
    )
