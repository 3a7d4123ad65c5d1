"""Command-line interface: exit codes, JSON reports, CSV determinism."""

import json

import pytest

from chorefair import decode_instance, encode_allocation, gen_eq1_cof, gen_eqx_cof
from chorefair.cli import main
from chorefair.core import encode_instance, rational
from chorefair.algorithms import optimal_allocation


@pytest.fixture
def eq1_cof_files(tmp_path):
    g = gen_eq1_cof(2, rational("1/100"))
    inst_path = tmp_path / "inst.json"
    inst_path.write_bytes(encode_instance(g.instance))
    witness_path = tmp_path / "witness.json"
    witness_path.write_bytes(encode_allocation(g.witness))
    opt_path = tmp_path / "opt.json"
    opt_path.write_bytes(encode_allocation(optimal_allocation(g.instance)[0]))
    return g, inst_path, witness_path, opt_path


def test_gen_writes_instance_with_meta(tmp_path, capsys):
    out = tmp_path / "x.json"
    assert main(["gen", "--family", "eqx-cof", "--n", "2", "--K", "100",
                 "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["meta"]["family"] == "eqx-cof"
    assert decode_instance(out.read_bytes()).costs == gen_eqx_cof(2, 100).instance.costs


def test_gen_partition_family(tmp_path):
    out = tmp_path / "x.json"
    assert main(["gen", "--family", "ef1-2hard", "--partition", "3,1,2,2",
                 "--K", "1000", "--solution", "0,1", "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["meta"]["threshold"] == "6508"
    assert obj["meta"]["witness"] == [[0, 1, 6], [2, 3, 4, 5]]


def test_gen_bad_precondition_exits_2(tmp_path):
    assert main(["gen", "--family", "eqx-cof", "--n", "3", "--K", "24",
                 "-o", str(tmp_path / "x.json")]) == 2


def test_check_exit_codes(eq1_cof_files, capsys):
    _, inst_path, witness_path, opt_path = eq1_cof_files
    assert main(["check", str(inst_path), str(witness_path),
                 "--criterion", "eq1"]) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["holds"] is True
    assert set(verdict["predicates"]) == {"EQ", "EF", "EQX", "EQ1", "EF1"}
    # the unconstrained optimum piles the cheap items on agent 0 and fails EQ1
    assert main(["check", str(inst_path), str(opt_path),
                 "--criterion", "eq1"]) == 1


def test_check_truncated_json_exits_2(tmp_path, eq1_cof_files):
    _, inst_path, _, _ = eq1_cof_files
    bad = tmp_path / "bad.json"
    bad.write_text('{"bundles":[[0,')
    assert main(["check", str(inst_path), str(bad), "--criterion", "eq1"]) == 2


def test_solve_oracle_eqx_on_worst_case(tmp_path, capsys):
    inst_path = tmp_path / "inst.json"
    inst_path.write_bytes(encode_instance(gen_eqx_cof(2, 100).instance))
    assert main(["solve", str(inst_path), "--alg", "oracle:EQX"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["social_cost"] == "202"
    assert len(report["digest"]) == 64


def test_solve_trace_attached(eq1_cof_files, capsys):
    _, inst_path, _, _ = eq1_cof_files
    assert main(["solve", str(inst_path), "--alg", "eq1-bounded",
                 "--trace"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert "trace" in report and report["trace"]["rounds"] >= 0


def test_solve_wrong_agent_count_exits_2(tmp_path):
    g = gen_eq1_cof(3, rational("1/100"))
    inst_path = tmp_path / "inst.json"
    inst_path.write_bytes(encode_instance(g.instance))
    assert main(["solve", str(inst_path), "--alg", "approx-ef1"]) == 2


def test_solve_budget_exceeded_exits_2(tmp_path):
    g = gen_eq1_cof(3, rational("1/100"))
    inst_path = tmp_path / "inst.json"
    inst_path.write_bytes(encode_instance(g.instance))
    assert main(["--budget", "10", "solve", str(inst_path),
                 "--alg", "oracle:EQ1"]) == 2


def test_cof_gap_formula(eq1_cof_files, capsys):
    _, inst_path, _, _ = eq1_cof_files
    assert main(["cof", str(inst_path), "--criterion", "eq1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["gap"] == "49/100"


def test_bench_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["bench", "--trials", "3", "--seed", "7", "--n", "2", "--m", "4"]
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["--workers", "4", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    header, *rows = a.read_text().splitlines()
    assert header == "trial,criterion,algorithm,sc,sc_decimal,gap,gap_decimal"
    assert len(rows) == 3 * 5  # five (criterion, algorithm) rows per trial
