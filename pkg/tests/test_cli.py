import json
from fractions import Fraction

import pytest
from typer.testing import CliRunner

import cli
from checks.suites import SuiteResult
from indexing import parse_rational
from series import IdentityReport
from volumes import wp_volume

runner = CliRunner()


def run(*args: str):
    return runner.invoke(cli.app, list(args))


@pytest.mark.parametrize("args,expected", [
    (["--genus", "0", "--tau", "0:3"], "1"),
    (["--genus", "1", "--tau", "0:2", "--kappa", "1:2"], "1/8"),
    (["--genus", "1", "--tau", "0:1,1:1"], "0"),
    (["--genus", "1", "--tau", "1:1"], "1/24"),
    (["--genus", "1", "--kappa", "1:1", "--tau", "0:1"], "1/24"),
    (["--genus", "1", "--tau", "0:1", "--lambda", "1"], "1/24"),
    (["--genus", "0", "--tau", "0:5", "--kappa", "1:2", "--route", "puncture-dilaton"], "5"),
])
def test_number(args, expected):
    result = run("number", *args)
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == expected


def test_number_json():
    result = run("number", "--genus", "1", "--tau", "0:2", "--kappa", "1:2", "--json")
    assert json.loads(result.stdout) == {"genus": 1, "m": "0:2", "p": "1:2", "value": "1/8"}


@pytest.mark.parametrize("args", [
    ["--genus", "0", "--tau", "0:2"],
    ["--genus", "2", "--tau", "1:1"],
    ["--genus", "0", "--tau", "0:x"],
    ["--genus", "0", "--kappa", "0:1", "--tau", "0:3"],
    ["--genus", "1", "--tau", "1:1", "--lambda", "1"],
])
def test_number_usage_errors(args):
    result = run("number", *args)
    assert result.exit_code == 2


def test_missing_genus_is_usage_error():
    assert run("number", "--tau", "0:3").exit_code == 2


def test_table_json():
    result = run("table", "--genus", "0", "--n-max", "5", "--dim-max", "2", "--json")
    assert result.exit_code == 0
    rows = json.loads(result.stdout)["rows"]
    assert {"m": "0:5", "p": "1:2", "bracket": "<tau_0^5 kappa_1^2>_0", "value": "5"} in rows
    assert all(row["value"] != "0" for row in rows)


def test_table_text():
    result = run("table", "--genus", "1", "--n-max", "1", "--dim-max", "1")
    assert result.stdout.splitlines() == ["<tau_0 kappa_1>_1 = 1/24", "<tau_1>_1 = 1/24"]


def test_verify_routes_passes():
    result = run("verify", "routes", "--n-max", "5", "--dim-max", "5")
    assert result.exit_code == 0
    assert result.stdout.strip().endswith("all passed")


def test_verify_json():
    result = run("verify", "charge", "--t-max", "2", "--s-max", "2", "--degree", "5", "--json")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["summary"]["passed"] is True


def test_verify_failure_exit_code(monkeypatch):
    failing = IdentityReport("charge-g0")
    failing.record({"t0": 1}, Fraction(0), Fraction(1))
    monkeypatch.setattr(cli, "run_suite", lambda params: SuiteResult("charge", [failing]))
    result = run("verify", "charge")
    assert result.exit_code == 1
    assert "FAIL charge-g0" in result.stdout


def test_verify_unknown_suite():
    assert run("verify", "bogus").exit_code == 2


def test_verify_getzler_at_point():
    result = run("verify", "getzler", "--s", "1=1", "--u", "2", "--order", "12")
    assert result.exit_code == 0, result.output


def test_wp_rows():
    result = run("wp", "--genus", "1", "--n-max", "3", "--json")
    rows = json.loads(result.stdout)["rows"]
    assert [(row["n"], row["w"]) for row in rows[:2]] == [(1, "1/24"), (2, "1/8")]
    assert len(rows) == 3


def test_wp_genus_zero_text():
    result = run("wp", "--genus", "0", "--n-max", "5")
    assert result.exit_code == 0
    assert result.stdout.split()[-2:] == ["5", "5"]


def test_wp_json_round_trip():
    payload = json.loads(run("wp", "--genus", "0", "--n-max", "9", "--json").stdout)
    for row in payload["rows"]:
        assert parse_rational(row["w"]) == wp_volume(0, row["n"])


def test_wp_unstable_range():
    assert run("wp", "--genus", "0", "--n-max", "2").exit_code == 2


@pytest.mark.slow
def test_wp_asymptotic():
    result = run("wp", "--genus", "1", "--n-max", "50", "--asymptotic", "--json")
    payload = json.loads(result.stdout)
    assert payload["gamma0"] == pytest.approx(2.40482555777, abs=1e-9)
    assert 0.9 < payload["rows"][-1]["ratio"] < 1.1


def test_cohft_json():
    result = run("cohft", "--s", "1=1", "--u", "2", "--order", "10", "--json")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["getzler_ok"] is True
    assert payload["point"] == {"s": {"1": "1"}, "u": "2"}
    assert payload["phi0"][0] == {"exponents": {"x": 3}, "coefficient": "1/6"}


def test_cohft_text():
    result = run("cohft", "--order", "6")
    assert result.stdout.splitlines() == [
        "phi0 = 1/6*x^3 + O(x^7)",
        "phi1 = 0 + O(x^7)",
        "getzler_ok = True",
    ]


def test_cohft_bad_point():
    assert run("cohft", "--s", "1:2").exit_code == 2


def test_bad_environment_is_usage_error(monkeypatch):
    monkeypatch.setenv("MODULI_LOG_LEVEL", "loud")
    assert run("number", "--genus", "0", "--tau", "0:3").exit_code == 2
