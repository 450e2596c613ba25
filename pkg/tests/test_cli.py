import json
from fractions import Fraction
import shutil
import subprocess

import pytest

from pencilforge import reference
from pencilforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_molien_g8(capsys):
    code, out, _ = run(capsys, "molien", "--group", "g8", "--trunc", "14")
    report = json.loads(out)
    assert code == 0 and report["schema"] == 1
    assert report["coefficients"] == [1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 3]


def test_pencil_g12(capsys):
    code, out, _ = run(capsys, "pencil", "--group", "g12")
    report = json.loads(out)
    assert code == 0 and report["n"] == 12
    members = {m["lambda"]: m["orbit_size"] for m in report["members"]}
    assert members["-22/243"] == 600
    assert report["base_locus"]["lines"] == 24
    assert report["bounds"]["context"] == "600 ≤ μ(12) ≤ 645"


def test_report_is_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        assert main(["fixlines", "--group", "g6", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_group_and_invariants(capsys):
    code, out, _ = run(capsys, "group", "--group", "h")
    report = json.loads(out)
    assert code == 0 and report["order"] == 32 and all(report["generator_check"].values())
    code, out, _ = run(capsys, "invariants", "--group", "g6", "--degree", "6")
    report = json.loads(out)
    assert code == 0 and report["dimension"] == 2 and "conventions" in report


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", "--group", "g6")
    report = json.loads(out)
    assert code == 0 and all(a["ok"] for a in report["audits"])


def test_bad_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--bad-flag"])
    assert exc.value.code == 1
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["pencil", "--group", "h"],
    ["molien", "--group", "g5"],
    ["render", "--lambda", "abc", "--image-out", "x.ppm"],
    ["render", "--size", "10by10", "--image-out", "x.ppm"],
    ["render"],
    ["group", "--threads", "0"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 1


def test_verification_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(reference.SINGULAR_MEMBERS, 6, {**reference.SINGULAR_MEMBERS[6], Fraction(-1): 13})
    code, _, err = run(capsys, "pencil", "--group", "g6")
    assert code == 2
    assert "FAIL n=6 lambda=-1" in err


def test_render_outputs(capsys, tmp_path):
    obj, ppm = tmp_path / "m.obj", tmp_path / "i.ppm"
    code, out, _ = run(capsys, "render", "--n", "12", "--lambda", "-22/243", "--size", "32x24", "--grid", "24",
                       "--mesh-out", str(obj), "--image-out", str(ppm))
    report = json.loads(out)
    assert code == 0 and report["mesh"]["faces"] > 0 and report["mesh"]["within_tolerance"]
    assert ppm.read_bytes().startswith(b"P6\n32 24\n255\n")


def test_threads_from_environment(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("PENCILFORGE_THREADS", "2")
    code, _, _ = run(capsys, "render", "--n", "6", "--lambda", "-1", "--size", "16x16", "--grid", "16",
                     "--image-out", str(tmp_path / "i.ppm"))
    assert code == 0


@pytest.mark.skipif(shutil.which("pencilforge") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["pencilforge", "molien", "--group", "h", "--trunc", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coefficients"] == [1, 0, 1, 0, 5]
