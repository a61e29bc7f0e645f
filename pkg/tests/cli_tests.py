import io
import json
import logging

import pytest

from vcradon.classes import read_class
from vcradon.cli import main
from vcradon.gen import gen_arrangement_class, gen_dented_cube, read_arrangement


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_generate_writes_class_file(capsys):
    code, out = run(capsys, "generate", "dented-cube", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# dented-cube 3"
    assert len(lines) == 16
    assert "1111" not in lines


def test_generate_then_analyze(tmp_path, capsys):
    path = tmp_path / "dented.txt"
    assert main(["generate", "dented-cube", "3", "-o", str(path)]) == 0
    assert read_class(path) == gen_dented_cube(3)
    code, out = run(capsys, "analyze", str(path), "--records")
    assert code == 0
    record = json.loads(out)
    assert (record["vc"], record["vc_star"], record["radon"]) == (3, 2, 4)
    assert record["maximum"] and record["radon_exact"]


def test_analyze_stdin_matches_file(tmp_path, capsys, monkeypatch):
    path = tmp_path / "tight.txt"
    main(["generate", "example-d1", "-o", str(path)])
    _, from_file = run(capsys, "analyze", str(path))
    monkeypatch.setattr("sys.stdin", io.StringIO(path.read_text()))
    code, from_stdin = run(capsys, "analyze", "-")
    assert code == 0

    def without_source(table):
        return [line for line in table.splitlines() if not line.startswith("source")]

    assert without_source(from_stdin) == without_source(from_file)


def test_analyze_reports_line_numbers(tmp_path, capsys, caplog):
    path = tmp_path / "bad.txt"
    path.write_text("010\n01\n")
    with caplog.at_level(logging.ERROR):
        code, out = run(capsys, "analyze", str(path))
    assert code == 2
    assert out == ""
    assert "line 2" in caplog.text


def test_analyze_missing_file(tmp_path, capsys):
    code, _ = run(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "tetrahedron", "3"],
        ["generate", "cube"],
        ["generate", "cube", "0"],
        ["generate", "arrangement", "2", "3"],
        ["generate", "cube", "2", "--arrangement-out", "a.txt"],
        ["enumerate", "--n", "5"],
        ["enumerate", "--n", "0"],
        ["enumerate", "--n", "3", "--sample", "4"],
        ["search", "--goal", "radon", "--d", "1"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    code, out = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_help(capsys):
    code, out = run(capsys, "--help")
    assert code == 0
    assert "analyze" in out


def test_generate_arrangement_roundtrip(tmp_path, capsys):
    cls = tmp_path / "lines.txt"
    arr = tmp_path / "lines.arr"
    code = main(["generate", "arrangement", "2", "3", "--seed", "0", "-o", str(cls), "--arrangement-out", str(arr)])
    assert code == 0
    A = read_arrangement(arr)
    assert read_class(cls) == gen_arrangement_class(A)
    assert len(read_class(cls)) == 7
    code = main(["generate", "arrangement", "--arrangement-in", str(arr), "-o", str(tmp_path / "again.txt")])
    assert code == 0
    assert read_class(tmp_path / "again.txt") == read_class(cls)


def test_generate_simplex_arrangement(capsys):
    code, out = run(capsys, "generate", "simplex-arrangement", "2")
    assert code == 0
    assert len(out.splitlines()) == 1 + 7


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--n", "2", "--workers", "1")
    assert code == 0
    assert "visited   15" in out
    code, out = run(capsys, "enumerate", "--n", "2", "--filter", "maximum", "--records", "--workers", "1")
    record = json.loads(out)
    assert (record["matched"], record["complete"]) == (9, True)


def test_enumerate_streams_reports(tmp_path, capsys):
    path = tmp_path / "reports.jsonl"
    code, out = run(capsys, "enumerate", "--n", "2", "--reports", str(path), "--records", "--workers", "1")
    assert code == 0
    assert json.loads(out)["matched"] == 15
    records = [json.loads(line) for line in path.read_text().splitlines()]
    assert [r["source"] for r in records] == [f"index {i}" for i in range(1, 16)]
    assert {"vc", "vc_star", "radon", "checks"} <= set(records[0])
    code, out = run(capsys, "enumerate", "--n", "2", "--reports", "-", "--records", "--workers", "2")
    lines = out.splitlines()
    assert len(lines) == 16
    assert [json.loads(line) for line in lines[:15]] == records
    assert json.loads(lines[-1])["visited"] == 15


def test_enumerate_limit_and_resume(tmp_path, capsys):
    checkpoint = str(tmp_path / "scan.json")
    common = ["enumerate", "--n", "3", "--chunk-size", "32", "--checkpoint", checkpoint, "--workers", "1"]
    code, _ = run(capsys, *common, "--limit", "32")
    assert code == 3
    code, out = run(capsys, *common, "--resume", "--records")
    assert code == 0
    assert json.loads(out)["visited"] == 255


def test_workers_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("VCRADON_WORKERS", "0")
    code, _ = run(capsys, "enumerate", "--n", "1")
    assert code == 2
    monkeypatch.setenv("VCRADON_WORKERS", "1")
    code, _ = run(capsys, "enumerate", "--n", "1")
    assert code == 0


def test_search(capsys):
    code, out = run(capsys, "search", "--goal", "vcstar", "--d", "1", "--seed", "0", "--budget", "10", "--n", "4",
                    "--restarts", "2", "--records", "--workers", "1")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["seed"] for r in records] == [0, 1]
    assert all(r["best_objective"] <= 1 for r in records)


def test_complex(tmp_path, capsys):
    path = tmp_path / "c.txt"
    path.write_text("000\n010\n110\n100\n001\n")
    code, out = run(capsys, "complex", str(path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n 3 dim 2"
    assert len(lines) == 12
    code, out = run(capsys, "complex", str(path), "--records")
    assert json.loads(out)["f_vector"] == [5, 5, 1]
    target = tmp_path / "q.txt"
    assert main(["complex", str(path), "-o", str(target)]) == 0
    assert target.read_text().splitlines() == lines


@pytest.mark.slow
def test_verify_paper_command(capsys):
    code, out = run(capsys, "verify-paper")
    assert code == 0
    assert out.splitlines()[-1].endswith("lines pass")
    code, alias = run(capsys, "verify-examples")
    assert code == 0
    assert alias == out
