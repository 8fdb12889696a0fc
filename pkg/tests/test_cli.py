import json
import math

import pytest
from click.testing import CliRunner

from privword.cli import main


def _run(*args: str, **kwargs):
    return CliRunner().invoke(main, list(args), **kwargs)


def test_check_privileged_word():
    result = _run("check", "aabaa")
    assert result.exit_code == 0
    assert "border array: 0 1 0 1 2" in result.output
    assert 'chain: 2:"aa"x2 1:"a"x4' in result.output
    assert "closed: true" in result.output
    assert "privileged: true" in result.output


def test_check_unbordered_and_empty():
    result = _run("check", "ab")
    assert "privileged: false" in result.output
    assert "closed: false" in result.output
    empty = _run("check", "")
    assert empty.exit_code == 0
    assert "privileged: true" in empty.output
    assert "closed: false" in empty.output


def test_check_malformed_word_exits_2():
    assert _run("check", "aXb").exit_code == 2
    assert _run("check", "abc", "--q", "2").exit_code == 2


def test_census_csv():
    result = _run("census", "--q", "2", "--max-n", "3")
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "n,q,B,C,m1,m2",
        "1,2,2,0,0,0",
        "2,2,2,2,2,0",
        "3,2,4,4,2,2",
    ]


def test_census_threads_and_determinism(tmp_path):
    one, four = tmp_path / "one.csv", tmp_path / "four.csv"
    assert _run("census", "--max-n", "9", "--out", str(one)).exit_code == 0
    assert _run("census", "--max-n", "9", "--threads", "4", "--out", str(four)).exit_code == 0
    assert one.read_bytes() == four.read_bytes()


def test_census_json(tmp_path):
    out = tmp_path / "census.json"
    result = _run("census", "--max-n", "3", "--format", "json", "--out", str(out))
    assert result.exit_code == 0
    rows = json.loads(out.read_text())
    assert rows[2] == {"n": 3, "q": 2, "B": 4, "C": 4, "priv": {"1": 2, "2": 2}}
    assert rows[0]["priv"] == {}


def test_census_budget_exits_3():
    result = _run("census", "--max-n", "12", "--budget", "100")
    assert result.exit_code == 3
    assert "budget" in result.output


def test_census_budget_from_environment():
    result = _run("census", "--max-n", "12", env={"PRIVWORD_BUDGET": "100"})
    assert result.exit_code == 3


def test_census_threads_from_environment(tmp_path):
    one, env = tmp_path / "one.csv", tmp_path / "env.csv"
    assert _run("census", "--max-n", "8", "--out", str(one)).exit_code == 0
    result = _run("census", "--max-n", "8", "--out", str(env), env={"PRIVWORD_THREADS": "2"})
    assert result.exit_code == 0
    assert one.read_bytes() == env.read_bytes()


def test_malformed_environment_exits_2():
    assert _run("census", "--max-n", "3", env={"PRIVWORD_THREADS": "four"}).exit_code == 2
    assert _run("census", "--max-n", "3", env={"PRIVWORD_THREADS": "0"}).exit_code == 2
    assert _run("verify", "--suite", "definitions", env={"PRIVWORD_BUDGET": "lots"}).exit_code == 2


def test_census_usage_error_exits_2():
    assert _run("census").exit_code == 2
    assert _run("census", "--max-n", "3", "--format", "xml").exit_code == 2


def test_verify_list():
    result = _run("verify", "--list")
    assert result.exit_code == 0
    assert "recursive-bound" in result.output.splitlines()
    assert result.output.splitlines()[-1] == "all"


def test_verify_writes_report(tmp_path):
    out = tmp_path / "report.json"
    result = _run("verify", "--suite", "definitions", "--max-n", "10", "--out", str(out))
    assert result.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["suite"] == "definitions"
    assert doc["summary"]["violations"] == 0
    assert doc["config"]["max_n"] == 10


def test_verify_csv_format(tmp_path):
    out = tmp_path / "report.csv"
    result = _run("verify", "--suite", "limits", "--format", "csv", "--out", str(out))
    assert result.exit_code == 0
    assert out.read_text().startswith("check,params,lhs,rhs,verdict\n")


def test_verify_limits_with_empty_range_exits_0():
    assert _run("verify", "--suite", "limits", "--kappa", "50").exit_code == 0


def test_verify_bad_arguments_exit_2():
    assert _run("verify", "--suite", "nope").exit_code == 2
    assert _run("verify", "--suite", "limits", "--kappa", "1.0").exit_code == 2


def test_verify_budget_exits_3():
    result = _run("verify", "--suite", "partition", "--max-n", "12", "--budget", "100")
    assert result.exit_code == 3


def test_bounds_table():
    result = _run("bounds", "--q", "2", "--j", "1", "--n", "100", "--n", "1000")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "n,omega,h,hbar,sigma,rho,log10_rho_qn"
    n, omega, h, hbar, sigma, rho, log_qn = lines[1].split(",")
    assert (n, h, hbar) == ("100", "6", "2")
    assert float(omega) == pytest.approx(4.4406, abs=1e-4)
    assert float(rho) == pytest.approx(0.460517, rel=1e-5)
    assert float(log_qn) == pytest.approx(math.log10(0.4605170) + 100 * math.log10(2), rel=1e-5)
    assert len(lines) == 3


def test_bounds_level_two():
    result = _run("bounds", "--j", "2", "--n", "1000")
    assert result.exit_code == 0
    row = result.output.splitlines()[1].split(",")
    assert float(row[4]) == pytest.approx(1.93264, rel=1e-5)


def test_bounds_below_threshold_exits_2():
    result = _run("bounds", "--j", "3", "--n", "15")
    assert result.exit_code == 2
    assert "N_3=16" in result.output
