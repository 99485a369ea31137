import io
import subprocess
import sys
from pathlib import Path

import pytest

from twoonemaps.cli import main

GOLDEN = Path(__file__).parent / "golden"
DEG8 = "49,-2352,4998,-6160,4851,-2520,847,-168,15"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,golden", [
    (["count", "--edges", "5"], "count_edges_5.txt"),
    (["trees", "--passport", "a1^2 a4 b1^2 b2^2"], "trees_a1^2_a4_b1^2_b2^2.txt"),
    (["enumerate", "--edges", "4"], "enumerate_edges_4.txt"),
    (["analyze", "--passport", "a1^4 a2^2 b1 b7"], "analyze_a1^4_a2^2_b1_b7.txt"),
    (["analyze", "--passport", "a1^3 a2 a3 b1^2 b6"], "analyze_a1^3_a2_a3_b1^2_b6.txt"),
    (["newton", "--coeffs", DEG8, "--prime", "7"], "newton_p7.txt"),
    (["solve", "--passport", "a2 b2"], "solve_a2_b2.txt"),
])
def test_golden(argv, golden):
    code, text = run(*argv)
    assert code == 0
    assert text == (GOLDEN / golden).read_text()


def test_count_lines():
    _, text = run("count", "--edges", "5")
    lines = text.splitlines()
    assert len(lines) == 10
    assert sum(int(ln.rsplit(": ", 1)[1]) for ln in lines) == 14


def test_enumerate_by_passport():
    code, text = run("enumerate", "--passport", "a1^2 a4 b1 b2 b3")
    assert code == 0 and text.count("darts 12") == 4


def test_solve_is_deterministic():
    argv = ["solve", "--passport", "a1^2 a4 b1 b2 b3", "--starts", "300", "--seed", "3"]
    a, b = run(*argv), run(*argv)
    assert a == b and a[0] == 0 and a[1].count("# solution") == 4


def test_render(tmp_path):
    out = tmp_path / "m.ppm"
    code, _ = run("render", "--passport", "a1^2 a4 b1 b2 b3", "--starts", "500", "--solution", "1",
                  "--viewport", "0.5,0,4,2", "--size", "80x40", "--out", str(out))
    assert code == 0
    data = out.read_bytes()
    assert data.startswith(b"P6\n80 40\n255\n") and len(data) == 13 + 80 * 40 * 3
    again = tmp_path / "n.ppm"
    run("render", "--passport", "a1^2 a4 b1 b2 b3", "--starts", "500", "--solution", "1",
        "--viewport", "0.5,0,4,2", "--size", "80x40", "--workers", "4", "--out", str(again))
    assert again.read_bytes() == data


@pytest.mark.parametrize("argv", [
    ["count", "--edges", "0"],
    ["count", "--edges", "x"],
    ["count"],
    ["trees", "--passport", "a1 b2"],
    ["enumerate", "--edges", "11"],
    ["enumerate", "--edges", "3", "--passport", "a2 b2"],
    ["analyze", "--passport", "a1^2 a4 b1 b2 b3 a1"],
    ["analyze", "--passport", "a1^3 a4 b1^2 b5"],
    ["newton", "--coeffs", "0,0", "--prime", "7"],
    ["newton", "--coeffs", "1,a", "--prime", "7"],
    ["solve", "--passport", "a3 b1^3"],
    ["render", "--passport", "a2 b2", "--solution", "3", "--out", "x.ppm"],
    ["render", "--passport", "a2 b2", "--size", "10x10", "--viewport", "0,0,4,1", "--out", "x.ppm"],
    ["render", "--passport", "a2 b2", "--r0", "0.5", "--out", "x.ppm"],
    ["bogus"],
    ["count", "--edges", "3", "--unknown"],
])
def test_validation_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_runtime_failure(tmp_path, capsys):
    code, _ = run("render", "--passport", "a2 b2", "--size", "4x4", "--viewport", "0,0,1,1",
                  "--out", str(tmp_path / "no" / "such" / "dir.ppm"))
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_enumerate_budget_can_be_raised():
    code, text = run("enumerate", "--edges", "3", "--max-edges", "3")
    assert code == 0 and text.count("darts") == 2


def test_help():
    code, _ = run("solve", "--help")
    assert code == 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "twoonemaps.cli", "count", "--edges", "3"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "a1 a2 b3: 1\na3 b1 b2: 1\n"
