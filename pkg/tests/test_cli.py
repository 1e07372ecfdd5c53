import json

import pytest

from conftest import fixture_path
from sarxid.cli import main


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_min_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "check-min", fixture_path("example3.json"))
    assert code == 0
    assert json.loads(out)["strong_minimal"] is True
    code, out, _ = run_cli(capsys, "check-min", fixture_path("remark1_counterexample.json"))
    assert code == 1
    assert json.loads(out)["strong_minimal"] is False


def test_malformed_input_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"ny": 2')
    code, _, err = run_cli(capsys, "check-min", bad)
    assert code == 2
    assert "error" in err
    code, _, err = run_cli(capsys, "check-min", tmp_path / "missing.json")
    assert code == 2


def test_output_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run_cli(
            capsys, "check-min", fixture_path("example3.json"), "--method", "both"
        )
        outs.append(out)
    assert outs[0] == outs[1]


def test_text_format_renders_same_data(capsys):
    _, out_json, _ = run_cli(capsys, "check-min", fixture_path("example3.json"))
    _, out_text, _ = run_cli(
        capsys, "check-min", fixture_path("example3.json"), "--format", "text"
    )
    assert "strong_minimal" in out_text
    assert out_text != out_json


def test_simulate_with_lss_comparison(capsys):
    code, out, _ = run_cli(
        capsys,
        "simulate",
        fixture_path("example3.json"),
        fixture_path("example3_word.json"),
        "--compare-lss",
    )
    assert code == 0
    report = json.loads(out)
    assert report["lss_agrees"] is True
    assert report["outputs"][0] == ["0"]


def test_to_lss_and_iso_roundtrip(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "to-lss", fixture_path("example3.json"))
    assert code == 0
    lss_path = tmp_path / "sys.json"
    lss_path.write_text(out)
    code, out, _ = run_cli(capsys, "iso", lss_path, lss_path)
    assert code == 0
    assert json.loads(out)["kind"] == "unique-identity"


def test_param_analyze_reports_region(capsys):
    code, out, _ = run_cli(
        capsys, "param-analyze", fixture_path("example8_first_family.json")
    )
    assert code == 0
    report = json.loads(out)
    assert report["S"]
    assert "I_A" in report["intermediates"]


def test_param_analyze_rejects_mimo(capsys, tmp_path):
    from sarxid import MultiPoly, PolyParametrization

    vars = ("t",)
    t = MultiPoly.variable(vars, 0)
    par = PolyParametrization(
        vars=vars, ny=1, nu=1, p=2, m=1,
        modes={"1": tuple([t] * 6)},
    )
    path = tmp_path / "mimo.json"
    path.write_text(json.dumps(par.to_json_dict()))
    code, _, err = run_cli(capsys, "param-analyze", path)
    assert code == 2
    assert "SISO" in err


def test_param_generic_and_injective(capsys):
    code, out, _ = run_cli(capsys, "param-generic", fixture_path("engine_family.json"))
    assert code == 0
    assert json.loads(out)["witness"] is not None
    code, out, _ = run_cli(
        capsys, "param-injective", fixture_path("theta_squared_param.json")
    )
    assert code == 1
    assert json.loads(out)["kind"] == "collision"


def test_env_seed_overrides(capsys, monkeypatch):
    monkeypatch.setenv("SARX_SEED", "not-an-int")
    code, _, err = run_cli(capsys, "param-generic", fixture_path("engine_family.json"))
    assert code == 2
    assert "SARX_SEED" in err
    monkeypatch.setenv("SARX_SEED", "3")
    code, out, _ = run_cli(capsys, "param-generic", fixture_path("engine_family.json"))
    assert code == 0
