import csv
import io
import json

import pytest

from pracnum import cli, hs


def run_cli(argv, capsys):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check(capsys):
    code, out, _ = run_cli(["check", "150"], capsys)
    assert code == 0
    assert json.loads(out) == {"n": 150, "practical": True, "f": 372, "component": 150}


def test_f(capsys):
    code, out, _ = run_cli(["f", "10"], capsys)
    assert code == 0
    assert json.loads(out) == {"n": 10, "f": 3}
    code, out, _ = run_cli(["f", "10", "--brute"], capsys)
    assert code == 0
    assert json.loads(out) == {"n": 10, "f": 3}


def test_count_and_pr(capsys):
    code, out, _ = run_cli(["count", "--x", "10", "--y", "4"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["count"] == 3 and doc["x"] == 10 and doc["y"] == 4
    code, out, _ = run_cli(["pr", "--x", "12"], capsys)
    doc = json.loads(out)
    assert doc["count"] == 6


def test_window(capsys):
    code, out, _ = run_cli(["window", "23"], capsys)
    assert code == 0
    assert json.loads(out) == {"x": 23, "n": 24}


def test_endpoints(capsys):
    code, out, _ = run_cli(["endpoints", "--limit", "63"], capsys)
    assert code == 0
    assert json.loads(out) == [1, 3, 7, 12, 15, 28, 31, 39, 42, 56, 60, 63]
    code, out, _ = run_cli(["endpoints", "--limit", "31", "--witnesses"], capsys)
    docs = json.loads(out)
    assert docs[0] == {"m": 1, "witness": 1}
    assert {"m": 28, "witness": 12} in docs


def test_density(capsys):
    code, out, _ = run_cli(["density", "--m", "3", "--empirical-x", "1000"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert (doc["rho_num"], doc["rho_den"]) == (1, 6)
    assert doc["sample_limit"] == 1000
    assert abs(doc["empirical"] - 1 / 6) < 0.01
    code, out, _ = run_cli(["density", "--m", "2"], capsys)
    doc = json.loads(out)
    assert (doc["rho_num"], doc["rho_den"]) == (0, 1)
    assert doc["empirical"] is None and doc["sample_limit"] is None


def test_density_sum(capsys):
    code, out, _ = run_cli(["density-sum", "--m-max", "7"], capsys)
    doc = json.loads(out)
    assert (doc["sum_num"], doc["sum_den"]) == (76, 105)


def test_hs_subcommands(capsys):
    code, out, _ = run_cli(["hs-verify", "--limit", "100000"], capsys)
    assert code == 0
    assert json.loads(out) == []
    code, out, _ = run_cli(["hs-near", "--d-limit", "10"], capsys)
    docs = json.loads(out)
    assert code == 0
    assert {d["n"] for d in docs} == {10, 44, 102, 136}
    assert all(d["ratio"] < 1 and d["practical"] is False for d in docs)


def test_robin(capsys):
    code, out, _ = run_cli(["robin", "--limit", "1000"], capsys)
    assert code == 0
    assert json.loads(out) == []


def test_ratio_grid_reports_rejects(capsys):
    code, out, err = run_cli(["ratio-grid", "--xs", "10,100", "--ys", "4,20"], capsys)
    assert code == 0
    docs = json.loads(out)
    assert {(d["x"], d["y"]) for d in docs} == {(10, 4), (100, 4), (100, 20)}
    assert "x=10 y=20" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "150"],
        ["f", "10"],
        ["count", "--x", "100", "--y", "4"],
        ["pr", "--x", "100"],
        ["ratio-grid", "--xs", "10,100", "--ys", "4,10"],
        ["window", "11"],
        ["endpoints", "--limit", "63", "--witnesses"],
        ["density", "--m", "3", "--empirical-x", "1000"],
        ["density-sum", "--m-max", "7"],
        ["hs-near", "--d-limit", "100"],
        ["hs-verify", "--limit", "1000"],
        ["robin", "--limit", "100"],
    ],
)
def test_csv_json_equivalence(argv, capsys):
    code, json_out, _ = run_cli(argv, capsys)
    assert code == 0
    code, csv_out, _ = run_cli(argv + ["--format", "csv"], capsys)
    assert code == 0
    doc = json.loads(json_out)
    rows = list(csv.DictReader(io.StringIO(csv_out)))
    if isinstance(doc, dict):
        doc = [doc]
    elif doc and not isinstance(doc[0], dict):  # bare endpoint list
        doc = [{"m": m} for m in doc]
    assert len(rows) == len(doc)
    for json_row, csv_row in zip(doc, rows):
        assert set(csv_row) == set(map(str, json_row))
        for key, value in json_row.items():
            cell = csv_row[key]
            if value is None:
                assert cell == ""
            elif isinstance(value, bool):
                assert cell == ("true" if value else "false")
            elif isinstance(value, float):
                assert float(cell) == value
            else:
                assert int(cell) == value


def test_determinism_across_threads(capsys):
    runs = []
    for threads in ("1", "4", "8"):
        _, out, _ = run_cli(["endpoints", "--limit", "5000", "--witnesses",
                             "--threads", threads, "--segment-size", "256"], capsys)
        runs.append(out)
    assert runs[0] == runs[1] == runs[2]
    again = run_cli(["endpoints", "--limit", "5000", "--witnesses",
                     "--threads", "1", "--segment-size", "256"], capsys)[1]
    assert again == runs[0]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(["check", "6", "--output", str(target)], capsys)
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text()) == {"n": 6, "practical": True, "f": 12,
                                              "component": 6}


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["check", "0"], "n"),
        (["f", "0"], "n"),
        (["count", "--x", "0", "--y", "4"], "--x"),
        (["count", "--x", "10", "--y", "0"], "--y"),
        (["pr", "--x", "-3"], "--x"),
        (["endpoints", "--limit", "0"], "--limit"),
        (["density", "--m", "0"], "--m"),
        (["density-sum", "--m-max", "0"], "--m-max"),
        (["hs-verify", "--limit", "0"], "--limit"),
        (["hs-near", "--d-limit", "0"], "--d-limit"),
        (["robin", "--limit", "2"], "--limit"),
        (["window", "0"], "x"),
    ],
)
def test_out_of_range_flags(argv, flag, capsys):
    code, out, err = run_cli(argv, capsys)
    assert code == 1
    assert flag in err
    assert out == ""


def test_parse_failures(capsys):
    assert run_cli(["count", "--x", "5"], capsys)[0] == 1  # missing --y
    assert run_cli(["no-such-command"], capsys)[0] == 1
    assert run_cli(["check", "6", "--bogus"], capsys)[0] == 1
    code, _, err = run_cli(["check", "six"], capsys)
    assert code == 1 and "usage" in err


def test_theorem_violation_exit_code(capsys, monkeypatch):
    fake = [hs.HsReport(n=10, f_value=3, threshold=1.0, ratio=3.0, practical=False)]
    monkeypatch.setattr(hs, "verify_hs_theorem",
                        lambda limit, threads=1, segment_size=0: fake)
    code, out, _ = run_cli(["hs-verify", "--limit", "100"], capsys)
    assert code == 2
    assert json.loads(out)[0]["n"] == 10
    monkeypatch.setattr(hs, "robin_violations",
                        lambda limit, threads=1, segment_size=0: [12])
    code, out, _ = run_cli(["robin", "--limit", "100"], capsys)
    assert code == 2
    assert json.loads(out) == [{"n": 12}]
