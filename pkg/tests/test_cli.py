from __future__ import annotations

import json
import subprocess
import sys

import pytest

from pointed_hopf.algebra import TabulatedHopf
from pointed_hopf.algebra.axioms import check_hopf_axioms
from pointed_hopf.cli import main


def run_json(capsys, *argv) -> tuple[int, dict]:
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize("cmd", ["validate", "build", "dual", "integrals", "double", "ribbon"])
def test_commands_on_taft3(capsys, datums_dir, cmd):
    code, data = run_json(capsys, cmd, "--datum", str(datums_dir / "taft3.toml"))
    assert code == 0
    assert data["passed"] is True
    assert data["command"] == cmd


def test_ribbon_verdicts(capsys, datums_dir):
    _, data = run_json(capsys, "ribbon", "--datum", str(datums_dir / "taft3.toml"))
    assert data["ribbon"]["verdict"] == "RIBBON"
    _, data = run_json(capsys, "ribbon", "--datum", str(datums_dir / "taft2.toml"))
    assert data["ribbon"]["verdict"] == "NEITHER"


def test_export_roundtrip_and_determinism(capsys, datums_dir, tmp_path):
    outs = []
    for sub in ("a", "b"):
        assert main(["export", "--datum", str(datums_dir / "taft3.toml"), "--out", str(tmp_path / sub)]) == 0
        outs.append((tmp_path / sub / "taft3.export.json").read_bytes())
    capsys.readouterr()
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    for key in ("algebra", "dual"):
        T = TabulatedHopf.from_json(data[key])
        assert T.dim == 9
        assert check_hopf_axioms(T, "full-basis").passed
    assert data["r_matrix"]["dim"] == 81


def test_export_refuses_large(capsys, datums_dir):
    code, data = run_json(capsys, "export", "--datum", str(datums_dir / "taft3.toml"), "--max-dim", "4")
    assert code == 2
    assert "exceeds --max-dim" in data["failures"][0]


def test_selftest(capsys):
    code, data = run_json(capsys, "selftest")
    assert code == 0 and data["passed"]


def test_invalid_datum_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text('group = [3]\ng = [[0]]\nchi = [[1]]\ncartan = "A1"\n', encoding="utf-8")
    code, data = run_json(capsys, "validate", "--datum", str(bad))
    assert code == 2
    assert data["error"] == "DatumError"
    assert any("χ_i(g_i) ≠ 1" in f for f in data["failures"])


def test_syntax_error_text_mode(capsys, tmp_path):
    bad = tmp_path / "broken.toml"
    bad.write_text("group = [3\n", encoding="utf-8")
    assert main(["validate", "--datum", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "DatumSyntaxError" in err and "broken.toml:" in err


def test_missing_datum_and_file(capsys, tmp_path):
    assert main(["build"]) == 2
    assert main(["build", "--datum", str(tmp_path / "nope.toml")]) == 2


def test_enumeration_cap(capsys, datums_dir):
    code, data = run_json(capsys, "build", "--datum", str(datums_dir / "a2_33.toml"), "--enumeration-cap", "4")
    assert code == 2 and "enumeration cap" in data["failures"][0]


def test_module_entry_point(datums_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "pointed_hopf", "validate", "--datum", str(datums_dir / "taft3.toml")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "valid" in proc.stdout
