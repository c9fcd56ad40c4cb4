import json
import subprocess
import sys

import pytest

from staircase.cli import main
from staircase.path_core import parse_path
from staircase.verify import VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, value", [
    (["--formula", "total1", "s=2", "t=1", "n=1"], "1"),
    (["--formula", "sum", "k=0", "n=3"], "64"),
    (["--formula", "binary", "n=1", "s=4", "r=2"], "8"),
    (["--formula", "exact-changes", "n=2", "s=2"], "28"),
])
def test_count(capsys, argv, value):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0 and out.strip() == value


@pytest.mark.parametrize("argv", [
    ["count", "--formula", "total1", "s=0", "t=1", "n=1"],
    ["count", "--formula", "total1", "s=1"],
    ["count", "--formula", "total1", "s=x", "t=1", "n=1"],
    ["count", "--formula", "nope"],
    ["verify", "--suite", "cor5", "--s", "1"],
    ["render", "EXN"],
    ["render", "EN", "--format", "svg"],
    ["search", "--origin", "0,0", "--period", "EEE"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_cor5(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cor5", "--max-n", "3", "--format", "jsonl")
    reports = [VerificationReport.from_json(line) for line in out.splitlines()]
    assert code == 0
    assert [(r.formula_value, r.oracle_value) for r in reports] == [(6, 6), (70, 70), (924, 924)]
    assert all(json.loads(line).keys() == {"suite", "params", "formula_value", "oracle_value", "match", "note"}
               for line in out.splitlines())


def test_verify_phi(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "phi", "--k", "1", "--n", "1")
    assert code == 0 and "3 round-trips, failures 0+0" in out


def test_verify_known_gap(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm1-part2", "--include", "s=1,t=1,n=1")
    assert code == 1 and "GAP" in out and "known gap" in out
    code, _, _ = run(capsys, "verify", "--suite", "thm1-part2", "--include", "s=1,t=1,n=1",
                     "--allow-known-gaps")
    assert code == 0


def test_verify_ranges(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cor2", "--s", "1..2", "--t", "1,3", "--n", "1",
                       "--format", "jsonl")
    params = [json.loads(line)["params"] for line in out.splitlines()]
    assert code == 0
    assert [(p["s"], p["t"]) for p in params] == [(1, 1), (1, 1), (1, 3), (1, 3), (2, 1), (2, 1), (2, 3), (2, 3)]


def test_verify_plot(capsys, tmp_path):
    out = tmp_path / "cor5.svg"
    code, _, _ = run(capsys, "verify", "--suite", "cor5", "--plot", str(out))
    assert code == 0 and out.read_text().startswith("<?xml")


@pytest.mark.parametrize("argv, expected", [
    (["--map", "phi", "--k", "1", "--n", "1", "EEEN"], "EENEE"),
    (["--map", "phi-inv", "--k", "1", "--n", "2", "ENEEENNEE"], "EENEENEN"),
    (["--map", "raney-s1", "--s", "1", "--t", "1", "--n", "2", "NEEEN"], "shift 2, EEENN"),
    (["--map", "raney-bin", "--s", "0", "--n", "2", "00101"], "shift 1, 00101"),
    (["--map", "interchange", "--s", "1", "--t", "1", "--n", "2", "@1,0:NENE"], "@0,1:ENEE"),
    (["--map", "interchange-inv", "--s", "1", "--t", "1", "--n", "2", "@0,1:NEEE"], "@1,0:NNEE"),
    (["--map", "encode", "--s", "5", "--t", "3", "--n", "2", "@1,3:ENEEEENEEEEENENN"], "100100001 1110011"),
    (["--map", "trisect", "--k", "1", "EEEN"], "a=E middle=@1,0:EE b=@3,0:N"),
    (["--map", "trisect", "--k", "1", "EEEE"], None),
    (["--map", "move-norths", "@1,0:NNEEN"], "@1,2:EENNN"),
])
def test_biject(capsys, argv, expected):
    code, out, _ = run(capsys, "biject", "--check", *argv)
    assert code == 0
    if expected is not None:
        assert out.splitlines()[0] == expected
    assert "FAILED" not in out


def test_biject_decode_fig1(capsys):
    code, out, _ = run(capsys, "biject", "--map", "decode", "--s", "5", "--t", "3", "--n", "2", "--j", "2",
                       "--check", "100100001", "1110011")
    path = parse_path(out.splitlines()[0])
    assert code == 0 and path.start == (1, 3) and path.end == (12, 8)
    assert "round-trip OK" in out


@pytest.mark.parametrize("argv", [
    ["--map", "phi", "--k", "1", "--n", "1", "NEEE"],
    ["--map", "interchange", "--s", "1", "--t", "1", "--n", "2", "@1,0:EENN"],
    ["--map", "decode", "--s", "5", "--t", "3", "--n", "2", "--j", "2", "1", "1110011"],
])
def test_biject_domain_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, "biject", *argv)
    assert code == 1 and err.startswith("error:")


def test_biject_missing_param_is_usage(capsys):
    assert run(capsys, "biject", "--map", "phi", "EEEN")[0] == 2


def test_render_ascii(capsys):
    code, out, _ = run(capsys, "render", "EENEE", "--boundary", "B:2", "--k", "1")
    assert code == 0
    assert out.splitlines()[1].split()[3] == "o"  # waypoint (2,1)


def test_render_files_are_deterministic(capsys, tmp_path):
    for fmt in ("svg", "png"):
        a, b = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
        for out in (a, b):
            assert run(capsys, "render", "@1,0:ENNE", "--boundary", "A:1,1", "--format", fmt,
                       "--out", str(out))[0] == 0
        assert a.read_bytes() == b.read_bytes()


def test_render_empty_path(capsys, tmp_path):
    out = tmp_path / "empty.svg"
    assert run(capsys, "render", "", "--format", "svg", "--out", str(out))[0] == 0
    assert out.stat().st_size > 0


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--origin", "0,2", "--period", "EEENN", "--max-n", "3")
    assert code == 0 and "fit t'=2 s'=3" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "staircase", "count", "--formula", "total2",
                          "s=2", "t=2", "n=1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "2"
