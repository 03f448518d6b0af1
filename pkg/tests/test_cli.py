"""Tests for the command-line interface."""

import json

import pytest
from typer.testing import CliRunner

from catalantri.cli import app
from catalantri.config import Config
from catalantri.identities import helpers
from catalantri.identities.registry import identity_ids
from tests.test_formatters import C_ASCII_8

runner = CliRunner()


def test_table_ballot_golden():
    result = runner.invoke(app, ["table", "--triangle", "C", "--rows", "8"])
    assert result.exit_code == 0
    assert result.output == C_ASCII_8 + "\n"


def test_table_weighted_motzkin_matches_admissible():
    weighted = runner.invoke(app, ["table", "-t", "M", "--x", "1", "--y", "2", "-n", "6"])
    admissible = runner.invoke(app, ["table", "-t", "A", "-n", "6"])
    assert weighted.exit_code == admissible.exit_code == 0
    assert weighted.output == admissible.output


def test_table_json():
    result = runner.invoke(app, ["table", "-t", "Z", "-n", "4", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["row_sums"] == ["1", "2", "5", "14"]


def test_verify_shapiro_convolution():
    result = runner.invoke(
        app, ["verify", "-i", "shapiro_convolution", "--n-max", "10", "--m-max", "10"]
    )
    assert result.exit_code == 0
    assert "shapiro_convolution: 121 cases, pass" in result.output


def test_verify_json_report():
    result = runner.invoke(
        app, ["verify", "-i", "thm_1_1", "--param", "n=0..2", "--param", "m=0..2",
              "--param", "l=0..1", "--r-max", "2", "--x", "1/2", "--y", "-1", "-f", "json"]
    )
    assert result.exit_code == 0
    report = json.loads(result.stdout)[0]
    assert report["pass"] is True
    assert report["domain"]["x"] == "1/2"
    assert report["domain"]["r"] == "0..2"


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "-i", "no_such_identity"],
        ["verify", "-i", "row_sum_B", "--m-max", "3"],
        ["verify", "-i", "thm_1_1", "--x", "0.5"],
        ["verify", "-i", "cor_2_5_a", "--param", "n=0..3"],
        ["table", "-t", "M", "--x", "1"],
        ["table", "-t", "C", "--x", "1"],
        ["table", "-t", "Q"],
        ["verify", "--bogus"],
    ],
)
def test_usage_errors_exit_2(args):
    assert runner.invoke(app, args).exit_code == 2


def test_counterexample_exits_1(monkeypatch):
    real = helpers.catalan_g
    monkeypatch.setattr(helpers, "catalan_g", lambda n, m, p: real(n, m, p) + 1)
    result = runner.invoke(app, ["verify", "-i", "thm_3_1_alt", "--n-max", "2", "--m-max", "2"])
    assert result.exit_code == 1
    assert "FAIL at n=0, m=0" in result.output


def test_verify_all_quick_csv():
    result = runner.invoke(app, ["verify-all", "--max-size", "2", "--workers", "2", "-f", "csv"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "id,pass,cases,params,lhs,rhs"
    assert [line.split(",")[0] for line in lines[1:]] == identity_ids()


@pytest.mark.parametrize("check", ["motzkin", "ballot", "dyck"])
def test_oracle(check):
    result = runner.invoke(app, ["oracle", "--check", check, "--n-max", "4", "-f", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)[0]["pass"] is True


def test_bijection_phi_listing():
    result = runner.invoke(app, ["bijection", "--which", "phi", "--n", "0", "--m", "0", "--r", "1", "--list"])
    assert result.exit_code == 0
    assert result.output.strip() == "B(u, -) -> u"


def test_bijection_dyck_split_listing():
    result = runner.invoke(app, ["bijection", "--which", "dyck-split", "--n", "0", "--m", "0", "--list"])
    assert result.exit_code == 0
    assert result.output.strip() == "ud -> u k=0 (-, u)"


@pytest.mark.parametrize("which", ["phi", "dyck-split"])
def test_bijection_checks(which):
    result = runner.invoke(app, ["bijection", "--which", which, "--n", "1", "--m", "2", "-f", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)[0]["pass"] is True


def test_series_checks():
    catalan = runner.invoke(app, ["series", "--check", "catalan", "--order", "10", "-f", "csv"])
    assert catalan.exit_code == 0
    assert catalan.stdout.splitlines()[1] == "series_catalan,true,11,,,"
    riordan = runner.invoke(app, ["series", "--order", "8", "--k-max", "3", "-f", "json"])
    assert riordan.exit_code == 0
    assert json.loads(riordan.stdout)[0]["id"] == "series_riordan"


def test_identities_listing_uses_configured_format(monkeypatch):
    monkeypatch.setattr(Config, "FORMAT", "json")
    result = runner.invoke(app, ["identities"])
    assert result.exit_code == 0
    assert [entry["id"] for entry in json.loads(result.stdout)] == identity_ids()


def test_bad_configured_format_is_a_usage_error(monkeypatch):
    monkeypatch.setattr(Config, "FORMAT", "yaml")
    assert runner.invoke(app, ["identities"]).exit_code == 2


def test_config_check():
    result = runner.invoke(app, ["config-check"])
    assert result.exit_code == 0
    assert "All configuration is valid" in result.output


def test_config_check_reports_errors(monkeypatch):
    monkeypatch.setattr(Config, "WORKERS", "many")
    result = runner.invoke(app, ["config-check"])
    assert result.exit_code == 2
    assert "CATALANTRI_WORKERS" in result.output


def test_verify_certify():
    result = runner.invoke(
        app, ["verify", "-i", "thm_4_1", "--certify", "--n-max", "2", "--m-max", "2",
              "--r-min", "-1", "--r-max", "1", "-f", "json"]
    )
    assert result.exit_code == 0
    report = json.loads(result.stdout)[0]
    assert report["id"] == "thm_4_1_polynomial"
    assert report["pass"] is True


def test_certify_without_degree_bound_is_a_usage_error():
    assert runner.invoke(app, ["verify", "-i", "eplett", "--certify"]).exit_code == 2
