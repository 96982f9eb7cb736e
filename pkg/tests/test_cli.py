from __future__ import annotations

import json
import subprocess
import sys

import pytest

from unified_wrt.cli import RunConfig, main, run
from unified_wrt.cyclo import CycloElem
from unified_wrt.qkit import jones_table_to_json, meridian_jones
from unified_wrt.suites import suite_lens
from unified_wrt.wrt import LensPiece, ManifoldSpec, lens_tau_prime_closed


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_lens_command(capsys):
    assert main(["lens", "--b", "9", "--a", "2", "--d", "5", "--roots", "3,9,15"]) == 0
    out = _json(capsys)
    assert [row["equal"] for row in out["results"]] == [True, True, True]
    assert CycloElem.from_json(out["results"][0]["closed"]) == lens_tau_prime_closed(9, 2, 5, 3)


def test_usage_errors(capsys):
    assert main(["lens", "--b", "9"]) == 2
    assert "missing --a" in _json(capsys)["error"]
    assert main(["lens", "--b", "9", "--a", "2", "--root", "4"]) == 2
    capsys.readouterr()
    assert main(["lens", "--b", "6", "--a", "1", "--root", "7"]) == 2
    assert "NonPrimePower" in _json(capsys)["error"]
    assert run(RunConfig("nonsense"))[0] == 2


def test_unknown_command_exits():
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_unified_command_with_manifold_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(ManifoldSpec([LensPiece(3, 1), LensPiece(-5, 2)]).to_json()))
    assert main(["unified", "--manifold", str(path), "--roots", "7,9,11,15"]) == 0
    rows = _json(capsys)["evaluations"]
    assert all(row.get("equal", True) for row in rows)


def test_qbk_and_andrews(capsys):
    assert main(["qbk-verify", "--b", "-9", "--k", "1", "--roots", "9,15"]) == 0
    capsys.readouterr()
    assert main(["andrews-verify", "--b", "9", "--j", "1", "--k", "2"]) == 0
    assert _json(capsys)["equal"] is True


def test_laplace_and_ohtsuki(capsys):
    assert main(["laplace-verify", "--b", "5", "--roots", "3,5,7", "--seed", "3"]) == 0
    capsys.readouterr()
    assert main(["ohtsuki", "--b", "5", "--a", "2", "--primes", "7", "--order", "3"]) == 0


def test_habiro_coeffs(tmp_path, capsys):
    path = tmp_path / "j.json"
    path.write_text(json.dumps(jones_table_to_json(meridian_jones(4, 3), 1, (3,))))
    assert main(["habiro-coeffs", "--jones", str(path)]) == 0
    assert "table" in _json(capsys)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["habiro-coeffs", "--jones", str(bad)]) == 2


def test_out_file_and_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["suite", "gradings", "--seed", "4", "--out", str(a)]) == 0
    assert main(["suite", "gradings", "--seed", "4", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()
    report = json.loads(a.read_text())
    assert report["results"][0]["passed"] is True


def test_failing_suite_exit_status(capsys):
    # the literal tau' conjugation check is known not to hold
    assert main(["suite", "number-theory"]) == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unified_wrt", "lens", "--b", "5", "--a", "2",
                           "--root", "7"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["equal"] is True
    assert "lens: ok" in proc.stderr


def test_mutation_is_caught():
    def wrong_sign(b, a, d, r):
        return -lens_tau_prime_closed(b, a, d, r)

    res = suite_lens(lens_fn=wrong_sign)
    assert not res.ok and res.failures
