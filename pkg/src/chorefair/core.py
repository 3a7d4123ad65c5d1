"""Exact-arithmetic instance and allocation model.

All cost magnitudes are arbitrary-precision rationals (``fractions.Fraction``);
there is no floating point anywhere in predicates or objectives. Instances and
allocations are immutable values and safe to share between workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NormalizationError, ParseError, StructureError

Rational = Fraction


def rational(value) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse a canonical rational string: "p/q" in lowest terms (q > 0), or "p"."""
    s = text.strip()
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        try:
            num, den = int(num_s), int(den_s)
        except ValueError:
            raise ParseError(f"malformed rational {text!r}") from None
        if den <= 0:
            raise ParseError(f"rational {text!r} has non-positive denominator")
        f = Fraction(num, den)
        if f.numerator != num or f.denominator != den:
            raise ParseError(f"rational {text!r} is not in lowest terms")
        return f
    try:
        return Fraction(int(s))
    except ValueError:
        raise ParseError(f"malformed rational {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Instance:
    """n agents x m items cost matrix over exact non-negative rationals."""

    costs: tuple[tuple[Fraction, ...], ...]
    item_names: tuple[str, ...] | None = None

    @staticmethod
    def from_rows(rows: Iterable[Iterable], item_names: Sequence[str] | None = None) -> "Instance":
        costs = tuple(tuple(rational(c) for c in row) for row in rows)
        names = tuple(item_names) if item_names is not None else None
        return Instance(costs, names)

    @property
    def n(self) -> int:
        return len(self.costs)

    @property
    def m(self) -> int:
        return len(self.costs[0]) if self.costs else 0

    def cost(self, agent: int, item: int) -> Fraction:
        return self.costs[agent][item]

    def bundle_cost(self, agent: int, items: Iterable[int]) -> Fraction:
        row = self.costs[agent]
        return sum((row[o] for o in items), Fraction(0))

    def row_sum(self, agent: int) -> Fraction:
        return sum(self.costs[agent], Fraction(0))

    def is_normalized(self) -> bool:
        return all(self.row_sum(i) == 1 for i in range(self.n))


@dataclass(frozen=True)
class Allocation:
    """Ordered partition of item indices into n bundles (empty bundles allowed)."""

    bundles: tuple[frozenset[int], ...]

    @staticmethod
    def from_lists(bundles: Iterable[Iterable[int]]) -> "Allocation":
        return Allocation(tuple(frozenset(b) for b in bundles))

    @staticmethod
    def from_assignment(vector: Sequence[int], n: int) -> "Allocation":
        """Build bundles from an item -> agent assignment vector."""
        bundles = [set() for _ in range(n)]
        for item, agent in enumerate(vector):
            bundles[agent].add(item)
        return Allocation(tuple(frozenset(b) for b in bundles))

    @property
    def n(self) -> int:
        return len(self.bundles)


@dataclass(frozen=True)
class ValidationReport:
    """Findings from validate(); carries issues instead of raising."""

    valid: bool
    normalized: bool
    issues: tuple[str, ...] = field(default_factory=tuple)


def validate(instance: Instance) -> ValidationReport:
    """Report dimension mismatches, negative entries, and zero-sum rows."""
    issues = []
    widths = {len(row) for row in instance.costs}
    if len(widths) > 1:
        issues.append(f"rows have inconsistent lengths: {sorted(widths)}")
    if instance.item_names is not None and instance.costs and len(instance.item_names) != instance.m:
        issues.append("item name count does not match column count")
    for i, row in enumerate(instance.costs):
        for j, c in enumerate(row):
            if c < 0:
                issues.append(f"negative cost at agent {i}, item {j}")
    normalized = False
    if not issues:
        for i in range(instance.n):
            if instance.row_sum(i) == 0:
                issues.append(f"agent {i} has zero total cost; normalization impossible")
        normalized = instance.is_normalized()
    return ValidationReport(valid=not any("negative" in s or "length" in s for s in issues),
                            normalized=normalized,
                            issues=tuple(issues))


def normalize(instance: Instance) -> Instance:
    """Scale each agent's row to total exactly 1 (exact rational division)."""
    rows = []
    for i in range(instance.n):
        total = instance.row_sum(i)
        if total == 0:
            raise NormalizationError(f"agent {i} has zero total cost")
        rows.append(tuple(c / total for c in instance.costs[i]))
    return Instance(tuple(rows), instance.item_names)


def check_partition(instance: Instance, allocation: Allocation) -> None:
    """Raise StructureError unless the allocation partitions the instance's items."""
    if allocation.n != instance.n:
        raise StructureError(f"allocation has {allocation.n} bundles, instance has {instance.n} agents")
    seen: set[int] = set()
    count = 0
    for bundle in allocation.bundles:
        for o in bundle:
            if o < 0 or o >= instance.m:
                raise StructureError(f"item index {o} out of range for m={instance.m}")
            count += 1
        seen |= bundle
    if len(seen) != count:
        raise StructureError("bundles are not disjoint")
    if len(seen) != instance.m:
        raise StructureError(f"allocation covers {len(seen)} of {instance.m} items")


def agent_cost(instance: Instance, allocation: Allocation, agent: int) -> Fraction:
    """Cost of the given agent for her own bundle."""
    return instance.bundle_cost(agent, allocation.bundles[agent])


def social_cost(instance: Instance, allocation: Allocation) -> Fraction:
    """Sum over agents of each agent's cost for her own bundle."""
    check_partition(instance, allocation)
    return sum((agent_cost(instance, allocation, i) for i in range(instance.n)), Fraction(0))


# --- JSON schema ------------------------------------------------------------
#
# Instance: {"agents": n, "items": [names...], "costs": [["p/q", ...] x n],
#            "normalized": bool}
# Allocation: {"bundles": [[item indices] x n]}
# Rationals are strings "p/q" with q > 0 in lowest terms; "p" means p/1.


def encode_instance(instance: Instance, meta: dict | None = None) -> bytes:
    names = list(instance.item_names) if instance.item_names is not None \
        else [f"o{j + 1}" for j in range(instance.m)]
    obj = {
        "agents": instance.n,
        "items": names,
        "costs": [[format_rational(c) for c in row] for row in instance.costs],
        "normalized": instance.is_normalized(),
    }
    if meta is not None:
        obj["meta"] = meta
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def decode_instance(data: bytes | str) -> Instance:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict) or "costs" not in obj:
        raise ParseError("instance JSON must be an object with a 'costs' key")
    raw_costs = obj["costs"]
    if not isinstance(raw_costs, list) or not all(isinstance(r, list) for r in raw_costs):
        raise ParseError("'costs' must be a list of rows")
    rows = []
    for i, raw_row in enumerate(raw_costs):
        row = []
        for j, cell in enumerate(raw_row):
            if not isinstance(cell, str):
                raise ParseError(f"costs[{i}][{j}] must be a rational string")
            try:
                row.append(parse_rational(cell))
            except ParseError as exc:
                raise ParseError(f"costs[{i}][{j}]: {exc}") from None
            if row[-1] < 0:
                raise ParseError(f"costs[{i}][{j}] is negative")
        rows.append(tuple(row))
    costs = tuple(rows)
    n_declared = obj.get("agents")
    if n_declared is not None and n_declared != len(costs):
        raise ParseError(f"'agents' is {n_declared} but costs has {len(costs)} rows")
    if len({len(r) for r in rows}) > 1:
        raise ParseError("cost rows have inconsistent lengths")
    names = obj.get("items")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
            raise ParseError("'items' must be a list of strings")
        if costs and len(names) != len(costs[0]):
            raise ParseError("'items' length does not match column count")
        names = tuple(names)
    return Instance(costs, names)


def encode_allocation(allocation: Allocation) -> bytes:
    obj = {"bundles": [sorted(b) for b in allocation.bundles]}
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def decode_allocation(data: bytes | str, m: int | None = None) -> Allocation:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict) or "bundles" not in obj:
        raise ParseError("allocation JSON must be an object with a 'bundles' key")
    raw = obj["bundles"]
    if not isinstance(raw, list) or not all(isinstance(b, list) for b in raw):
        raise ParseError("'bundles' must be a list of lists")
    seen: set[int] = set()
    bundles = []
    for b in raw:
        cur = set()
        for o in b:
            if not isinstance(o, int) or isinstance(o, bool):
                raise ParseError(f"item index {o!r} is not an integer")
            if o in seen:
                raise ParseError(f"item {o} assigned twice")
            if o < 0 or (m is not None and o >= m):
                raise ParseError(f"item index {o} out of range")
            seen.add(o)
            cur.add(o)
        bundles.append(frozenset(cur))
    if m is not None and len(seen) != m:
        missing = sorted(set(range(m)) - seen)
        raise ParseError(f"items {missing} unassigned")
    return Allocation(tuple(bundles))
