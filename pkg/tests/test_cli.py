"""CLI behaviour: output shapes, exit codes, JSON documents."""

import json
import subprocess
import sys

import pytest

from fibrec import parse
from fibrec.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_worked_example(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "(2n+3)/5*F(n) - n/5*F(n-1)", "--from", "0", "--to", "6"
    )
    assert code == 0
    values = [line.split()[1] for line in out.strip().splitlines()]
    assert values == ["0", "1", "1", "3", "5", "10", "18"]


def test_eval_negative_range(capsys):
    code, out, _ = run_cli(capsys, "eval", "F(n)", "--from", "-4", "--to", "4")
    assert code == 0
    values = [line.split()[1] for line in out.strip().splitlines()]
    assert values == ["-3", "2", "-1", "1", "0", "1", "1", "2", "3"]


def test_eval_constant_rational(capsys):
    code, out, _ = run_cli(capsys, "eval", "1/2", "--from", "0", "--to", "2")
    assert code == 0
    assert [line.split()[1] for line in out.strip().splitlines()] == ["1/2"] * 3


def test_eval_bad_range_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "eval", "F(n)", "--from", "3", "--to", "1")
    assert code == 2
    assert "--from" in err


def test_parse_error_exit_code_and_offset(capsys):
    code, _, err = run_cli(capsys, "eval", "F(q)", "--from", "0", "--to", "1")
    assert code == 2
    assert "offset" in err


def test_canon_output(capsys):
    code, out, _ = run_cli(capsys, "canon", "F(n-2)")
    assert code == 0
    assert "P0 = 1" in out
    assert "P1 = -1" in out


def test_rec_output(capsys):
    code, out, _ = run_cli(capsys, "rec", "(2n+3)/5*F(n) - n/5*F(n-1)")
    assert code == 0
    assert "order: 4" in out
    assert "coefficients: 2, 1, -2, -1" in out
    assert "x^4 - 2*x^3 - x^2 + 2*x + 1" in out
    assert "initial values: 0, 1, 1, 3" in out


def test_check_integer(capsys):
    code, out, _ = run_cli(capsys, "check", "(2n+3)/5*F(n) - n/5*F(n-1)")
    assert code == 0
    assert "INTEGER certificate: 0, 1, 1, 3" in out


def test_check_non_integer_exit_code(capsys):
    code, out, _ = run_cli(capsys, "check", "n/2*F(n)")
    assert code == 3
    assert "NON-INTEGER witness: n=1 value=1/2" in out


def test_theorem_worked_example(capsys):
    code, out, _ = run_cli(capsys, "theorem", "3", "--e", "1", "--z", "1,1,1,2")
    assert code == 0
    assert out.splitlines()[0] == "(1/10*n^2 - 43/50*n + 44/25)*F(n) + (7/25*n + 1)*F(n-1)"


def test_theorem_family_four(capsys):
    code, out, _ = run_cli(capsys, "theorem", "4", "--w", "0,1,2,6,12,26", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficients"] == {
        "a": "4/5",
        "b": "-4/5",
        "c": "3/5",
        "d": "0",
        "e": "1/2",
        "f": "-1/2",
    }
    assert parse(doc["expression"]).at(5) == 26


def test_theorem_missing_params_usage_error(capsys):
    code, _, err = run_cli(capsys, "theorem", "1", "--z", "1,1,3")
    assert code == 2
    assert "needs" in err


def test_synth_command(capsys):
    code, out, _ = run_cli(
        capsys, "synth", "--deg0", "1", "--deg1", "1", "--values", "0,1,1,3", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficients"] == {"a": "2/5", "b": "3/5", "c": "-1/5", "d": "0"}
    assert doc["expression"] == "(2/5*n + 3/5)*F(n) + (-1/5*n)*F(n-1)"


def test_synth_round_trips_through_parse(capsys):
    code, out, _ = run_cli(
        capsys, "synth", "--deg0", "2", "--deg1", "2", "--values", "0,0,1,4,12,31", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    expr = parse(doc["expression"])
    assert [expr.at(n) for n in range(6)] == [0, 0, 1, 4, 12, 31]


def test_oeis_local_hit(capsys):
    code, out, _ = run_cli(capsys, "oeis", "0,1,1,2,3,5,8")
    assert code == 0
    assert "A000045" in out


def test_oeis_local_miss(capsys):
    code, out, _ = run_cli(capsys, "oeis", "1,1,2,2,4,7,15,32,69")
    assert code == 0
    assert "no matches" in out


def test_oeis_remote_is_gated(capsys, monkeypatch):
    monkeypatch.delenv("FIBREC_OEIS_REMOTE", raising=False)
    code, _, err = run_cli(capsys, "oeis", "0,1,1,2", "--remote")
    assert code == 2
    assert "FIBREC_OEIS_REMOTE" in err


def test_oeis_network_failure_exit_code(capsys, monkeypatch):
    from fibrec import OeisTransportError
    from fibrec import cli as cli_module

    monkeypatch.setenv("FIBREC_OEIS_REMOTE", "1")

    def boom(prefix, timeout):
        raise OeisTransportError("no route to oeis.org")

    monkeypatch.setattr(cli_module, "search_remote", boom)
    code, _, err = run_cli(capsys, "oeis", "0,1,1,2", "--remote")
    assert code == 4
    assert "no route" in err


def test_oracle_commands(capsys):
    assert run_cli(capsys, "oracle", "leonardo", "5")[1].strip() == "15"
    assert run_cli(capsys, "oracle", "compositions", "5")[1].strip() == "10"
    assert run_cli(capsys, "oracle", "inversions", "4")[1].strip() == "12"


def test_oracle_cap_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "oracle", "inversions", "26")
    assert code == 2
    assert "capped" in err


def test_eval_json_schema(capsys):
    code, out, _ = run_cli(capsys, "eval", "F(n)", "--from", "0", "--to", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "eval"
    assert doc["values"] == [
        {"n": 0, "value": "0"},
        {"n": 1, "value": "1"},
        {"n": 2, "value": "1"},
        {"n": 3, "value": "2"},
    ]


def test_check_json_schema(capsys):
    code, out, _ = run_cli(capsys, "check", "n/2*F(n)", "--json")
    assert code == 3
    doc = json.loads(out)
    assert doc == {
        "command": "check",
        "expression": "n/2*F(n)",
        "integral": False,
        "witness_n": 1,
        "value": "1/2",
    }


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "fibrec", "eval", "F(n)", "--from", "0", "--to", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert [line.split()[1] for line in proc.stdout.strip().splitlines()] == [
        "0",
        "1",
        "1",
        "2",
        "3",
        "5",
    ]
