"""Command-line front end: gen, check, solve, cof, bench.

Exit codes: 0 success / predicate holds, 1 predicate fails, 2 usage,
precondition, or parse errors. All outputs are UTF-8 JSON or CSV; every
command is deterministic given identical inputs and flags (the elapsed field
is informational only).
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import algorithms, approx2, generators, oracle
from .core import (Allocation, Instance, decode_allocation, decode_instance,
                   encode_instance, format_rational, normalize, parse_rational,
                   social_cost)
from .errors import ChoreFairError
from .fairness import Criterion, implication_check


def _decimal12(x: Fraction) -> str:
    """Exact 12-digit decimal rendering (truncated), platform-stable."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = x.numerator * 10**12 // x.denominator
    whole, frac = divmod(scaled, 10**12)
    return f"{sign}{whole}.{frac:012d}"


def _digest(instance: Instance) -> str:
    return hashlib.sha256(encode_instance(instance)).hexdigest()


def _write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _load_instance(path: str) -> Instance:
    return decode_instance(Path(path).read_bytes())


def _bundles(alloc: Allocation) -> list[list[int]]:
    return [sorted(b) for b in alloc.bundles]


def _meta_to_json(gen: generators.GeneratedInstance) -> dict:
    def render(v):
        if isinstance(v, Fraction):
            return format_rational(v)
        if isinstance(v, tuple):
            return list(v)
        return v

    meta = {
        "family": gen.family,
        "params": {k: render(v) for k, v in gen.params.items()},
        "expected": {k: render(v) for k, v in gen.expected.items()},
    }
    if gen.row_sum is not None:
        meta["row_sum"] = format_rational(gen.row_sum)
    if gen.threshold is not None:
        meta["threshold"] = format_rational(gen.threshold)
    if gen.witness is not None:
        meta["witness"] = _bundles(gen.witness)
    return meta


def _parse_partition(text: str) -> generators.PartitionInput:
    return generators.PartitionInput(tuple(int(s) for s in text.split(",")))


def _parse_solution(text: str | None):
    if text is None:
        return None
    return tuple(int(s) for s in text.split(","))


def cmd_gen(args) -> int:
    fam = args.family
    sol = _parse_solution(args.solution)
    if fam == "eqx-cof":
        gen = generators.gen_eqx_cof(args.n, parse_rational(args.K))
    elif fam == "eqx-hard":
        gen = generators.gen_eqx_hard(_parse_partition(args.partition), args.n,
                                      parse_rational(args.K), solution=sol)
    elif fam == "eq1-cof":
        gen = generators.gen_eq1_cof(args.n, parse_rational(args.eps))
    elif fam == "eq1-hard":
        gen = generators.gen_eq1_hard(_parse_partition(args.partition), args.n,
                                      parse_rational(args.K), solution=sol)
    elif fam == "ef1-cof":
        gen = generators.gen_ef1_cof(args.n, int(args.K), parse_rational(args.eps))
    elif fam == "ef1-hard":
        gen = generators.gen_ef1_hard(_parse_partition(args.partition), args.n,
                                      parse_rational(args.K), solution=sol)
    elif fam == "ef1-2hard":
        gen = generators.gen_ef1_two_agent_hard(_parse_partition(args.partition),
                                                parse_rational(args.K), solution=sol)
    elif fam == "ef1-mult":
        gen = generators.gen_ef1_mult_hard(_parse_partition(args.partition), args.n,
                                           parse_rational(args.K), solution=sol)
    elif fam == "random":
        gen = generators.gen_random(args.n, args.m, args.seed, args.granularity)
    else:
        raise ChoreFairError(f"unknown family {fam!r}")
    data = encode_instance(gen.instance, meta=_meta_to_json(gen)).decode("utf-8")
    _write_output(data, args.out)
    return 0


def cmd_check(args) -> int:
    instance = _load_instance(args.instance)
    allocation = decode_allocation(Path(args.allocation).read_bytes(), m=instance.m)
    criterion = Criterion.parse(args.criterion)
    report = implication_check(instance, allocation)
    verdict = {
        "criterion": criterion.value,
        "holds": report.as_dict()[criterion.value],
        "predicates": report.as_dict(),
    }
    _write_output(json.dumps(verdict, separators=(",", ":")), args.out)
    return 0 if verdict["holds"] else 1


def _run_algorithm(instance: Instance, alg: str, eps: Fraction | None,
                   budget: int):
    trace = None
    if alg == "optimal":
        alloc, cost = algorithms.optimal_allocation(instance)
    elif alg == "eq1-bounded":
        alloc, trace = algorithms.eq1_bounded(instance)
        cost = social_cost(instance, alloc)
    elif alg == "ef1-roundrobin":
        alloc, _order = algorithms.ef1_bounded(instance)
        cost = social_cost(instance, alloc)
    elif alg.startswith("oracle:"):
        criterion = Criterion.parse(alg.split(":", 1)[1])
        alloc, cost = oracle.opt_fair(instance, criterion, budget)
    elif alg == "approx-eq1":
        if eps is None:
            raise ChoreFairError("approx-eq1 requires --eps")
        alloc, cost = approx2.eq1_scheme(instance, eps, budget)
    elif alg == "approx-ef1":
        alloc, cost = approx2.ef1_scheme(instance, eps or Fraction(0),
                                         mode="exact", budget=budget)
    else:
        raise ChoreFairError(f"unknown algorithm {alg!r}")
    return alloc, cost, trace


def cmd_solve(args) -> int:
    instance = _load_instance(args.instance)
    if args.normalize:
        instance = normalize(instance)
    eps = parse_rational(args.eps) if args.eps else None
    start = time.perf_counter()
    alloc, cost, trace = _run_algorithm(instance, args.alg, eps, args.budget)
    elapsed = time.perf_counter() - start
    report = {
        "command": ["solve", "--alg", args.alg],
        "digest": _digest(instance),
        "algorithm": args.alg,
        "allocation": _bundles(alloc),
        "social_cost": format_rational(cost),
        "elapsed_seconds": elapsed,
    }
    if args.trace and trace is not None:
        report["trace"] = trace.as_json_obj()
    _write_output(json.dumps(report, separators=(",", ":")), args.out)
    return 0


def cmd_cof(args) -> int:
    instance = _load_instance(args.instance)
    criterion = Criterion.parse(args.criterion)
    report = oracle.cof_gap(instance, criterion, args.budget)
    obj = {
        "criterion": criterion.value,
        "digest": _digest(instance),
        "opt_unconstrained": format_rational(report.opt_unconstrained),
        "opt_fair": format_rational(report.opt_fair) if report.opt_fair is not None else None,
        "gap": format_rational(report.gap) if report.gap is not None else None,
        "ratio": ("inf" if report.ratio_is_infinite
                  else format_rational(report.ratio) if report.ratio is not None
                  else None),
        "witness": _bundles(report.witness) if report.witness is not None else None,
    }
    _write_output(json.dumps(obj, separators=(",", ":")), args.out)
    return 0


def _bench_trial(trial: int, args) -> list[list[str]]:
    gen = generators.gen_random(args.n, args.m, args.seed + trial, args.granularity)
    instance = normalize(gen.instance)
    _, opt = algorithms.optimal_allocation(instance)
    rows = []

    def add(criterion: str, algorithm: str, sc: Fraction):
        gap = sc - opt
        rows.append([str(trial), criterion, algorithm,
                     format_rational(sc), _decimal12(sc),
                     format_rational(gap), _decimal12(gap)])

    alloc, _trace = algorithms.eq1_bounded(instance)
    add("EQ1", "eq1-bounded", social_cost(instance, alloc))
    alloc, _order = algorithms.ef1_bounded(instance)
    add("EF1", "ef1-roundrobin", social_cost(instance, alloc))
    for crit in (Criterion.EQX, Criterion.EQ1, Criterion.EF1):
        _, fair = oracle.opt_fair(instance, crit, args.budget)
        add(crit.value, "oracle", fair)
    return rows


def cmd_bench(args) -> int:
    if args.family != "random":
        raise ChoreFairError("bench supports only --family random")
    buf = io.StringIO()
    buf.write("trial,criterion,algorithm,sc,sc_decimal,gap,gap_decimal\n")
    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        results = list(pool.map(lambda t: _bench_trial(t, args), range(args.trials)))
    for rows in results:  # ordered by trial regardless of completion order
        for row in rows:
            buf.write(",".join(row) + "\n")
    _write_output(buf.getvalue(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chorefair")
    parser.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                        help="exhaustive-search cap (allocations)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance family")
    p.add_argument("--family", required=True,
                   choices=["eqx-cof", "eqx-hard", "eq1-cof", "eq1-hard",
                            "ef1-cof", "ef1-hard", "ef1-2hard", "ef1-mult",
                            "random"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--K", default="100")
    p.add_argument("--eps", default="1/100")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--granularity", type=int, default=100)
    p.add_argument("--partition", help="comma-separated positive integers")
    p.add_argument("--solution", help="comma-separated indices of one half")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="evaluate fairness predicates")
    p.add_argument("instance")
    p.add_argument("allocation")
    p.add_argument("--criterion", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="run an algorithm")
    p.add_argument("instance")
    p.add_argument("--alg", required=True)
    p.add_argument("--eps")
    p.add_argument("--goods-solver", choices=["exact"], default="exact")
    p.add_argument("--normalize", action="store_true",
                   help="rescale each cost row to sum to 1 before solving")
    p.add_argument("--trace", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("cof", help="cost-of-fairness gap report")
    p.add_argument("instance")
    p.add_argument("--criterion", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_cof)

    p = sub.add_parser("bench", help="seeded benchmark sweep to CSV")
    p.add_argument("--family", default="random")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--granularity", type=int, default=100)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChoreFairError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
