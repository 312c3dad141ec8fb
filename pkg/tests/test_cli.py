import json
import subprocess
import sys

import pytest

from shadowcodes import __version__
from shadowcodes.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_then_exact_dmin(tmp_path, capsys):
    desc = tmp_path / "code.json"
    code, _, _ = run_cli(
        capsys, "construct", "deg1", "--q", "25", "--e-size", "21", "--out", str(desc)
    )
    assert code == 0
    stored = json.loads(desc.read_text())
    assert stored["n"] == 21 and stored["k"] == 5
    assert stored["format"] == "shadow-code/1"
    code, out, _ = run_cli(capsys, "dmin", str(desc))
    assert code == 0
    report = json.loads(out)
    assert report["method"] == "exact"
    assert report["dmin"] == 8
    assert report["floor"] == 1
    assert report["floor_met"] is True


def test_dmin_sampled_upper_bound(tmp_path, capsys):
    desc = tmp_path / "code.json"
    run_cli(capsys, "construct", "deg2", "--q", "49", "--k", "3", "--out", str(desc))
    code, out, _ = run_cli(capsys, "dmin", str(desc), "--sample", "400", "--seed", "7")
    assert code == 0
    first = json.loads(out)
    assert first["method"] == "sample"
    assert first["dmin_upper"] >= 24
    code, out, _ = run_cli(capsys, "dmin", str(desc), "--sample", "400", "--seed", "7")
    assert json.loads(out)["dmin_upper"] == first["dmin_upper"]


def test_dmin_missing_file(capsys):
    code, _, err = run_cli(capsys, "dmin", "/nonexistent/code.json")
    assert code == 2
    assert "error:" in err


def test_construct_nk_round_numbers(capsys):
    code, out, _ = run_cli(capsys, "construct", "deg1", "--n", "100", "--k", "10")
    assert code == 0
    desc = json.loads(out)
    assert desc["n"] == 100 and desc["k"] == 10
    assert desc["field"]["p"] == 109


def test_construct_inadmissible_suggests_neighbor(capsys):
    code, _, err = run_cli(capsys, "construct", "deg1", "--n", "99", "--k", "10")
    assert code == 2
    assert "107" in err and "odd prime power" in err


def test_construct_argument_combinations(capsys):
    assert run_cli(capsys, "construct", "deg1")[0] == 2
    assert run_cli(capsys, "construct", "deg1", "--n", "5")[0] == 2
    assert run_cli(capsys, "construct", "deg2", "--q", "49")[0] == 2


def test_construct_deg2_seeded_reproducible(capsys):
    _, out1, _ = run_cli(capsys, "construct", "deg2", "--q", "49", "--k", "3", "--seed", "5")
    _, out2, _ = run_cli(capsys, "construct", "deg2", "--q", "49", "--k", "3", "--seed", "5")
    a, b = json.loads(out1), json.loads(out2)
    assert a["G"] == b["G"] and a["B"] == b["B"]


def test_figure_csv_and_json(capsys):
    code, out, _ = run_cli(capsys, "figure", "fig4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    comments = [ln for ln in lines if ln.startswith("#")]
    assert "# figure=fig4" in comments and "# a=0.49" in comments
    header = next(ln for ln in lines if not ln.startswith("#"))
    assert header == "scheme,n,k,rate,delta,kind"
    code, out, _ = run_cli(capsys, "figure", "fig4", "--format", "json")
    obj = json.loads(out)
    assert obj["config"]["figure"] == "fig4"
    assert len(obj["rows"]) == 18


def test_figure_fig1_and_fig3(tmp_path, capsys):
    out_path = tmp_path / "fig1.csv"
    code, _, _ = run_cli(
        capsys, "figure", "fig1", "--n-max", "1000", "--points", "5", "--out", str(out_path)
    )
    assert code == 0
    text = out_path.read_text()
    assert text.splitlines()[-1].split(",")[0].isdigit()
    code, out, _ = run_cli(capsys, "figure", "fig3", "--n", "64", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert {r["scheme"] for r in rows} >= {"shadow_deg1", "gv", "dg", "rm1", "rm2", "random"}


def test_verify_suites_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "section6")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True and report["failures"] == []
    assert report["config"]["suite"] == "section6"

    code, out, _ = run_cli(capsys, "verify", "theorem7", "--m", "2")
    assert code == 0 and json.loads(out)["ok"] is True

    code, out, _ = run_cli(capsys, "verify", "weil", "--q-max", "27", "--count", "30")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True and report["checks"] == 31

    code, out, _ = run_cli(capsys, "verify", "theorem6", "--n-max", "2000")
    assert code == 0 and json.loads(out)["ok"] is True

    code, out, _ = run_cli(capsys, "verify", "theorem4")
    report = json.loads(out)
    assert code == 0 and report["ok"] is True
    assert report["checks"] > 200


def test_verify_failure_exits_one(capsys, monkeypatch):
    def broken(q_max, count, seed):
        return {"suite": "weil", "checks": 1, "failures": [{"q": 3}], "ok": False}

    monkeypatch.setattr("shadowcodes.cli.verify_weil", broken)
    code, out, _ = run_cli(capsys, "verify", "weil")
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_concat_report(capsys):
    code, out, _ = run_cli(capsys, "concat", "--m", "2", "--N", "4", "--K", "2")
    assert code == 0
    report = json.loads(out)
    assert report["n"] == 16 and report["k"] == 6
    assert report["dmin_lb"] == 6 and report["rate"] == "3/8"
    code, out, _ = run_cli(capsys, "concat", "--m", "2", "--N", "4", "--K", "2", "--matrix")
    report = json.loads(out)
    assert len(report["G"]) == 6 and all(len(r) == 4 for r in report["G"])
    code, _, err = run_cli(capsys, "concat", "--m", "2", "--N", "9", "--K", "2")
    assert code == 2 and "error:" in err


def test_bounds_quantities(capsys):
    code, out, _ = run_cli(capsys, "bounds", "gv", "--n", "16", "--k", "6")
    assert code == 0 and json.loads(out)["d"] == 5
    code, out, _ = run_cli(capsys, "bounds", "dg", "--m", "4", "--d", "2")
    report = json.loads(out)
    assert (report["n"], report["log2_size"], report["dmin"]) == (16, 8, 6)
    code, out, _ = run_cli(capsys, "bounds", "k0", "--n", "113")
    report = json.loads(out)
    assert 0 < report["k0"] - 113**0.5 - 0.5 < 0.5
    assert report["omega_sq"] < 0
    code, out, _ = run_cli(capsys, "bounds", "shadow1", "--n", "113", "--k", "9")
    assert json.loads(out)["floor"] == pytest.approx(14.0)
    code, out, _ = run_cli(capsys, "bounds", "deltacon", "--n", "16", "--k", "3")
    assert json.loads(out)["floor"] == 0.5


def test_bounds_missing_arguments(capsys):
    code, _, err = run_cli(capsys, "bounds", "gv", "--n", "16")
    assert code == 2
    assert "--k" in err


def test_argparse_rejects_unknown(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main([])


def test_console_script_version():
    proc = subprocess.run(
        [sys.executable, "-m", "shadowcodes.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == f"shadowcodes {__version__}"


def test_installed_entry_point_runs():
    proc = subprocess.run(
        ["shadowcodes", "bounds", "gv", "--n", "16", "--k", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["d"] == 5
