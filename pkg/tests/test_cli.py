import csv
import io
import json
import shutil
import subprocess

import numpy as np
import pytest

from qfht import fileio
from qfht.cli import main
from qfht.hilbert import RadialSignal, analyze, build_rule, norm


def run(argv):
    return main([str(a) for a in argv])


def make_signal(tmp_path, name="f.csv", alpha=1.0, extra=("--random", "8")):
    path = tmp_path / name
    assert run(["make-signal", "--alpha", alpha, *extra, "--seed", "3", "--output", path]) == 0
    return path


def load(path, alpha):
    nodes, _, values = fileio.read_signal_csv(path)
    return RadialSignal(build_rule(alpha, nodes.size), values)


def test_make_signal_basis(tmp_path):
    path = make_signal(tmp_path, extra=("--basis", "3"))
    c = analyze(load(path, 1.0), 10)
    expected = np.zeros((11, 4))
    expected[3, 0] = 1.0
    assert np.max(np.abs(c.coeffs - expected)) < 1e-13


def test_make_signal_is_deterministic(tmp_path):
    a = make_signal(tmp_path, "a.csv")
    b = make_signal(tmp_path, "b.csv")
    assert a.read_bytes() == b.read_bytes()


def test_identity_transform_is_byte_exact(tmp_path):
    src = make_signal(tmp_path)
    out = tmp_path / "out.csv"
    for path in ("spectral", "quadrature", "bargmann"):
        assert run(["transform", "--theta", "1,0,0,0", "--alpha", 1.0, "--input", src,
                    "--output", out, "--path", path]) == 0
        assert out.read_bytes() == src.read_bytes()


def test_round_trip_through_inverse(tmp_path):
    src = make_signal(tmp_path)
    mid, back = tmp_path / "mid.csv", tmp_path / "back.csv"
    assert run(["transform", "--theta", "0,0.6,0,0.8", "--alpha", 1.0, "--input", src, "--output", mid]) == 0
    assert run(["transform", "--theta=0,-0.6,0,-0.8", "--alpha", 1.0, "--input", mid, "--output", back]) == 0
    f, g = load(src, 1.0), load(back, 1.0)
    assert norm(g - f) < 1e-10 * norm(f)


def test_three_paths_agree(tmp_path):
    src = make_signal(tmp_path, alpha=2.5)
    outs = {}
    for path in ("spectral", "quadrature", "bargmann"):
        outs[path] = tmp_path / f"{path}.csv"
        assert run(["transform", "--theta", "0.3,0.5,0.2,0", "--alpha", 2.5, "--input", src,
                    "--output", outs[path], "--path", path]) == 0
    ref = load(outs["spectral"], 2.5)
    for path in ("quadrature", "bargmann"):
        assert norm(load(outs[path], 2.5) - ref) < 1e-10


def test_bargmann_forward_inverse(tmp_path):
    src = make_signal(tmp_path, extra=("--random", "5"))
    coeffs, back = tmp_path / "F.json", tmp_path / "back.csv"
    assert run(["bargmann", "--alpha", 1.0, "--input", src, "--n", 4, "--out", coeffs]) == 0
    assert len(json.loads(coeffs.read_text())) == 5
    assert run(["bargmann", "--alpha", 1.0, "--inverse", "--coeffs", coeffs, "--unit", "k", "--out", back]) == 0
    assert norm(load(back, 1.0) - load(src, 1.0)) < 1e-10


def test_kernel_table_stdout(capsys):
    assert run(["kernel-table", "--theta", "0,0,0,0", "--alpha", 1.0, "--x", "1,2", "--y", "3", "--unweighted"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert tuple(rows[0]) == fileio.KERNEL_HEADER
    assert len(rows) == 3
    # theta = 0 leaves only phi_0(x) phi_0(y) = 1 / Gamma(2)
    assert all(float(r[2]) == pytest.approx(1.0, rel=1e-15) and float(r[3]) == 0.0 for r in rows[1:])


def test_kernel_table_weighted_file(tmp_path):
    out = tmp_path / "k.csv"
    assert run(["kernel-table", "--theta", "0,0,0.5,0", "--alpha", 1.0, "--x", "2", "--y", "2", "--output", out]) == 0
    row = out.read_text().splitlines()[1].split(",")
    assert [float(v) for v in row[4:]] == [0.0, 1.0, 0.0]


@pytest.mark.parametrize("argv", [
    ["transform", "--theta", "0,2,0,0", "--alpha", "1", "--input", "{src}", "--output", "{tmp}/o.csv"],
    ["transform", "--theta", "1,0,0", "--alpha", "1", "--input", "{src}", "--output", "{tmp}/o.csv"],
    ["transform", "--theta", "0.5,0,0,0", "--alpha", "0", "--input", "{src}", "--output", "{tmp}/o.csv"],
    ["transform", "--theta", "0.5,0,0,0", "--alpha", "2", "--input", "{src}", "--output", "{tmp}/o.csv"],
    ["transform", "--theta", "0.5,0,0,0", "--alpha", "1", "--input", "{tmp}/missing.csv", "--output", "{tmp}/o.csv"],
    ["kernel-table", "--theta", "1,0,0,0", "--alpha", "1"],
    ["kernel-table", "--theta", "0.5,0,0,0", "--alpha", "-1"],
    ["make-signal", "--alpha", "1", "--m", "600", "--basis", "1", "--output", "{tmp}/o.csv"],
    ["bargmann", "--alpha", "1", "--inverse", "--out", "{tmp}/o.json"],
])
def test_usage_errors_exit_2(tmp_path, argv, capsys):
    src = make_signal(tmp_path)
    argv = [a.format(src=src, tmp=tmp_path) for a in argv]
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects malformed values itself
        code = exc.code
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_verify_criteria_only(capsys):
    assert run(["verify", "--criteria-only", "--seed", 7]) == 0
    report = json.loads(capsys.readouterr().out)
    assert {"property", "max_deviation", "tolerance", "pass"} <= set(report[0])
    assert all(entry["pass"] for entry in report)


@pytest.mark.skipif(shutil.which("qfht") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["qfht", "kernel-table", "--theta", "0.5,0,0,0", "--alpha", "1", "--x", "1", "--y", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("x,y,Re")
