import json
import subprocess
import sys

import pytest

from invcayley.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_inv_zn(capsys):
    code, out, _ = run_cli(capsys, "inv", "--n", "16")
    assert code == 0
    assert out == "1 7 9 15 (count 4)\n"


def test_inv_poly(capsys):
    code, out, _ = run_cli(capsys, "inv", "--n", "4", "--degree", "1")
    assert code == 0
    assert out.splitlines() == ["1", "3", "1 + 2*x", "3 + 2*x", "(count 4)"]


def test_inv_brute_agreement(capsys):
    code, out, _ = run_cli(capsys, "inv", "--n", "15", "--degree", "2", "--brute")
    assert code == 0
    assert out.splitlines()[-1] == "agreement: true"
    code, out, _ = run_cli(capsys, "inv", "--n", "16", "--brute")
    assert out.splitlines()[-1] == "agreement: true"


def test_build_dot_stdout(capsys):
    code, out, _ = run_cli(capsys, "build", "--n", "5", "--degree", "0", "--format", "dot")
    assert code == 0
    assert out.startswith("graph G {")
    assert out.count(" -- ") == 5


def test_build_json_file(tmp_path, capsys):
    target = tmp_path / "g.json"
    code, _, _ = run_cli(
        capsys, "build", "--n", "2", "--degree", "1", "--format", "json", "--out", str(target)
    )
    assert code == 0
    obj = json.loads(target.read_text())
    assert obj["vertex_count"] == 4
    assert obj["edges"] == [[0, 1], [2, 3]]


def test_build_deterministic_bytes(tmp_path, capsys):
    a, b = tmp_path / "a.graphml", tmp_path / "b.graphml"
    for target in (a, b):
        run_cli(
            capsys, "build", "--n", "6", "--degree", "1",
            "--format", "graphml", "--out", str(target),
        )
    assert a.read_bytes() == b.read_bytes()


def test_invariants_json(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--n", "6", "--degree", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["component_count"] == 6
    assert obj["girth"] == 6


def test_verify_single_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "9", "--degree", "1")
    assert code == 0
    assert "overall: PASS" in out
    assert "girth" in out


def test_verify_exit_two_on_skip(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "15", "--degree", "2")
    assert code == 2
    assert "SKIPPED" in out


def test_verify_witness_line(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "4", "--degree", "1")
    assert code == 0
    assert "k33_witness: [0, 2, 8] x [1, 3, 9]" in out


def test_verify_grid_report(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--grid", "2..6 x 0..1", "--report", str(report)
    )
    assert code == 0
    assert "grid overall: PASS (10 specs)" in out
    obj = json.loads(report.read_text())
    assert obj["overall"] == "PASS"
    assert len(obj["reports"]) == 10


def test_verify_grid_parallel_matches_serial(tmp_path, capsys):
    serial, parallel = tmp_path / "s.json", tmp_path / "p.json"
    run_cli(capsys, "verify", "--grid", "2..5 x 0..1", "--report", str(serial))
    run_cli(
        capsys, "verify", "--grid", "2..5 x 0..1", "--jobs", "3", "--report", str(parallel)
    )
    assert serial.read_bytes() == parallel.read_bytes()


def test_verify_bad_grid(capsys):
    code, _, err = run_cli(capsys, "verify", "--grid", "nonsense")
    assert code == 3
    assert "grid" in err


def test_verify_needs_target(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 3
    assert "--n or --grid" in err


def test_scan_table(capsys):
    code, out, _ = run_cli(capsys, "scan", "--n", "4", "--dmax", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == [
        "d", "vertices", "components", "involutions", "alpha_lower_bound",
    ]
    assert lines[1:] == [
        "0\t4\t1\t2\t1",
        "1\t16\t2\t4\t2",
        "2\t64\t4\t8\t3",
        "3\t256\t8\t16\t4",
    ]


def test_scan_json(capsys):
    code, out, _ = run_cli(capsys, "scan", "--n", "3", "--dmax", "2", "--json")
    assert code == 0
    assert json.loads(out)["rows"][2]["component_count"] == 9


def test_power_series_alias(capsys):
    code, out, _ = run_cli(
        capsys, "build", "--n", "5", "--degree", "1", "--format", "json",
        "--ring", "zn-power-series",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["spec"]["family"] == "power-series"
    assert "Z_5[[x]]" in obj["spec"]["ring"]


def test_domain_error_exit(capsys):
    code, _, err = run_cli(capsys, "inv", "--n", "1")
    assert code == 3
    assert "error:" in err


def test_cap_exit(capsys, monkeypatch):
    monkeypatch.setenv("INVCAYLEY_VERTEX_CAP", "50")
    code, _, err = run_cli(capsys, "build", "--n", "5", "--degree", "3")
    assert code == 4
    assert "resource limit" in err


def test_io_error_exit(capsys):
    code, _, err = run_cli(
        capsys, "build", "--n", "3", "--degree", "0", "--out", "/missing-dir/out.dot"
    )
    assert code == 5
    assert "io error" in err


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "invcayley", "inv", "--n", "27"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "1 26 (count 2)"


def test_usage_error_exit_code():
    out = subprocess.run(
        [sys.executable, "-m", "invcayley", "frobnicate"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 2
