"""CLI: exit codes, JSON reports, determinism, descriptor errors."""

import json
import subprocess
import sys

import pytest

from mvtool import cli


def run_cli(*argv):
    return cli.main(list(argv))


def run_json(capsys, *argv):
    code = cli.main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_exit_codes(capsys):
    assert run_cli("check", "--model", "C", "--sequent", "gamma_3",
                   "--bound", "64") == 0
    assert run_cli("check", "--model", "L(2)", "--sequent", "xi",
                   "--bound", "3") == 1
    capsys.readouterr()


def test_check_json_report(capsys):
    code, rep = run_json(capsys, "check", "--model", "L(2)", "--sequent", "xi",
                         "--bound", "3")
    assert code == 1
    assert rep["schema"] == 1
    assert rep["verdict"] == "counterexample"
    assert rep["counterexample"] == {"x": "1/2"}
    assert rep["model"] == "L(2)"
    assert "elapsed_ms" in rep


def test_inconclusive_exit_code(tmp_path, capsys):
    seq = tmp_path / "seq.txt"
    seq.write_text("true |-[x] bigvee n<=3 . x = n*1\n")
    code = run_cli("check", "--model", "C", "--sequent", f"@{seq}",
                   "--bound", "2")
    assert code == 2
    capsys.readouterr()


def test_usage_errors(capsys):
    assert run_cli("check", "--model", "Nosuch", "--sequent", "xi") == 64
    assert run_cli("check", "--model", "C", "--sequent", "nosuch") == 64
    with pytest.raises(SystemExit) as exc:
        run_cli("check", "--model", "C")  # missing --sequent
    assert exc.value.code == 64
    capsys.readouterr()


def test_carrier_cap(capsys, monkeypatch):
    monkeypatch.setenv("MVTOOL_MAX_CARRIER", "10")
    assert run_cli("check", "--model", "Prod(C,C)", "--sequent", "MV.2",
                   "--bound", "6") == 64
    monkeypatch.setenv("MVTOOL_MAX_CARRIER", "1000000")
    assert run_cli("check", "--model", "Prod(C,C)", "--sequent", "MV.2",
                   "--bound", "3") == 0
    capsys.readouterr()


def test_check_family_json(capsys):
    code, rep = run_json(capsys, "check-family", "--model", "Prod(C,C)",
                         "--sequents", "P.1,P.2,P.3,beta", "--bound", "4")
    assert code == 1
    assert rep["results"]["P.3"]["verdict"] == "counterexample"
    assert rep["results"]["P.3"]["counterexample"] == {"x": "(0,1)"}
    assert rep["family_checks"][0]["agree"] is True


def test_roundtrip_commands(capsys):
    code, rep = run_json(capsys, "roundtrip", "--group", "Z", "--bound", "4")
    assert code == 0
    assert rep["direction"] == "group"
    assert rep["failures"] == []
    code, rep = run_json(capsys, "roundtrip", "--algebra", "C", "--bound", "4")
    assert code == 0
    assert rep["direction"] == "algebra"
    assert rep["failures"] == []


def test_decompose_command(capsys):
    code, rep = run_json(capsys, "decompose", "--model", "Prod(C,C)",
                         "--gens", "(1c,1-1c)", "--bound", "8")
    assert code == 0
    assert rep["atoms"] == ["(0,1)", "(1,0)"]
    assert rep["factor_descriptors"] == ["C", "C"]
    assert rep["perfect_verdicts"] == ["holds", "holds"]
    assert rep["reconstruction_verdict"] == "holds"


def test_ant_check_command(capsys):
    assert run_cli("ant-check", "--group", "Lex(Z,Z)", "--unit", "(1,0)",
                   "--bound", "6") == 0
    assert run_cli("ant-check", "--group", "Z", "--unit", "2",
                   "--bound", "4") == 1
    capsys.readouterr()


def test_decompose_failure_path(capsys):
    code, rep = run_json(capsys, "decompose", "--model", "L(2)",
                         "--gens", "1", "--bound", "3")
    assert code == 1
    assert rep["reconstruction_verdict"] == "failed"
    assert "not perfect" in rep["error"]


def test_roundtrip_flag_validation(capsys):
    assert run_cli("roundtrip", "--group", "Z", "--algebra", "C") == 64
    assert run_cli("roundtrip") == 64
    capsys.readouterr()


def test_registry_list(capsys):
    code, rep = run_json(capsys, "registry-list")
    assert code == 0
    labels = {e["label"] for e in rep["entries"]}
    assert {"MV.1", "P.3'", "gamma_5", "chi_8", "L.12", "M.14",
            "rad_ideal.ix", "Ant.2", "Pstar.2", "phi_sup"} <= labels
    for e in rep["entries"]:
        assert e["doc"] and e["statement"] and e["models"]


def test_sequent_from_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "mvtool.cli", "check", "--model", "C",
         "--sequent", "@-", "--bound", "4"],
        input="true |-[x] x = x\n", capture_output=True, text=True)
    assert proc.returncode == 0
    assert "holds" in proc.stdout


def test_determinism_same_seed_same_json(capsys):
    def snapshot():
        reports = []
        for argv in (
            ["check", "--model", "C", "--sequent", "gamma_2", "--bound", "32",
             "--seed", "7"],
            ["check-family", "--model", "Sigma(Z^2)",
             "--sequents", "P.1,P.3,beta,rad_ideal.vii", "--bound", "4",
             "--seed", "7"],
            ["roundtrip", "--algebra", "B", "--bound", "4", "--seed", "7"],
            ["decompose", "--model", "Prod(C,C)", "--gens", "(1c,1-1c)",
             "--bound", "6", "--seed", "7"],
        ):
            code, rep = run_json(capsys, *argv)
            rep.pop("elapsed_ms")
            reports.append((code, rep))
        return reports

    assert snapshot() == snapshot()
