import json

import pytest

from app.base.settings import Settings
from app.enums.env_keys import EnvKeys
from app.main import main
from app.models.verification_report_model import IdentityCheck, VerificationReport

@pytest.fixture
def settings(mocker, monkeypatch):
    for key in EnvKeys:
        monkeypatch.delenv(key.value, raising=False)
    settings = Settings(env_file="tests/missing.env", configure_logging=False)
    mocker.patch("app.main.Settings", return_value=settings)
    return settings

def run_json(capsys, argv):
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)

def test_doublecoset_coefficient(settings, capsys):
    payload = run_json(capsys, ["coeff", "--kind", "doublecoset", "-n", "5", "--lambda", "5", "--mu", "5"])
    assert payload["entries"] == [{"lambda": "5", "mu": "5", "value": "945"}]
    assert payload["kind"] == "doublecoset"

def test_class_coefficient_is_normalised(settings, capsys):
    payload = run_json(capsys, ["coeff", "--kind", "class", "-n", "4", "--lambda", "1.1.1.1", "--mu", "4"])
    assert payload["entries"][0]["value"] == "6"

def test_pi_coefficient_has_no_mu(settings, capsys):
    payload = run_json(capsys, ["coeff", "--kind", "pi", "-n", "4", "--lambda", "4"])
    assert payload["entries"] == [{"lambda": "4", "mu": None, "value": "48"}]

def test_zonal_coefficient_is_rational(settings, capsys):
    payload = run_json(capsys, ["coeff", "--kind", "zonalQ", "-n", "2", "--lambda", "1.1", "--mu", "1.1"])
    assert payload["entries"][0]["value"] == "1/3"

def test_csv_table(settings, capsys):
    assert main(["table", "--kind", "doublecoset", "-n", "3", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "lambda,mu,value"
    assert len(lines) == 10
    assert lines[1] == "3,3,15"

def test_text_table(settings, capsys):
    assert main(["table", "--kind", "class", "-n", "2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].split() == ["lambda", "mu", "value"]

def test_oracle_source_agrees_with_formula(settings, capsys):
    formula = run_json(capsys, ["table", "--kind", "doublecoset", "-n", "3"])
    oracle = run_json(capsys, ["table", "--kind", "doublecoset", "-n", "3", "--source", "oracle"])
    assert formula == oracle

@pytest.mark.parametrize("argv", [
    ["coeff", "--kind", "class", "-n", "4", "--lambda", "3..1", "--mu", "4"],
    ["coeff", "--kind", "class", "-n", "4", "--lambda", "3.1", "--mu", "3"],
    ["coeff", "--kind", "doublecoset", "-n", "3", "--lambda", "3"],
    ["coeff", "--kind", "zonalP", "-n", "6", "--lambda", "2.2.2", "--mu", "6"],
    ["table", "--kind", "class", "-n", "0"],
    ["table", "--kind", "class", "-n", "3", "--threads", "0"],
])
def test_usage_errors(settings, capsys, argv):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err

def test_argparse_errors_are_usage_errors(settings, capsys):
    assert main(["table", "--kind", "nonsense", "-n", "3"]) == 2
    assert main(["coeff", "--kind", "class", "-n", "3"]) == 2

def test_over_cap_exit_code(settings, capsys):
    assert main(["table", "--kind", "doublecoset", "-n", "5", "--source", "oracle"]) == 3
    err = capsys.readouterr().err
    assert "--oracle-cap-coset" in err and "ORACLE_CAP_COSET" in err

def test_cap_flag_is_honoured(settings, capsys):
    assert main(["verify", "--suite", "class-oracle", "-n", "3", "--oracle-cap-class", "2"]) == 3

def test_verify_closed_forms(settings, capsys):
    assert main(["verify", "--suite", "closed-forms", "-n", "3"]) == 0
    assert "All" in capsys.readouterr().out

def test_verify_json_report(settings, capsys):
    payload = run_json(capsys, ["verify", "--suite", "zonal-oracle", "-n", "2", "--format", "json"])
    assert payload["suite"] == "zonal-oracle"
    assert all(check["passed"] for check in payload["checks"])

def test_failed_verification_exit_code(settings, capsys, mocker):
    report = VerificationReport(suite="all", checks=[
        IdentityCheck(identity="x", n=1, passed=True),
        IdentityCheck(identity="y", n=1, passed=False, detail="at ([1]): got 1, expected 2"),
    ])
    mocker.patch("app.main.VerificationController.run", return_value=report)
    assert main(["verify", "--suite", "all", "-n", "1"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "1 of 2 identities failed." in out

@pytest.mark.slow
def test_verify_all_up_to_four(settings, capsys):
    assert main(["verify", "--suite", "all", "-n", "4", "--oracle-cap-coset", "4"]) == 0

def test_pi_table_row(settings, capsys):
    payload = run_json(capsys, ["table", "--kind", "pi", "-n", "4"])
    rows = {entry["lambda"]: entry["value"] for entry in payload["entries"]}
    assert rows["4"] == "48"
    assert rows["1.1.1.1"] == "24"

def test_class_table_diagonal(settings, capsys):
    payload = run_json(capsys, ["table", "--kind", "class", "-n", "2"])
    assert {"lambda": "2", "mu": "2", "value": "1"} in payload["entries"]

def test_coset_oracle_over_cap(settings, capsys):
    assert main(["verify", "--suite", "coset-oracle", "-n", "9"]) == 3
    assert "exceeds" in capsys.readouterr().err

def test_output_does_not_depend_on_threads(settings, capsys):
    serial = run_json(capsys, ["table", "--kind", "zonalP", "-n", "4"])
    threaded = run_json(capsys, ["table", "--kind", "zonalP", "-n", "4", "--threads", "3"])
    assert serial == threaded

def test_kind_help_mentions_class_scaling(settings, capsys):
    assert main(["coeff", "--help"]) == 0
    assert "scaled by 1/n" in " ".join(capsys.readouterr().out.split())
