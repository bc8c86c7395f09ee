import json
import math

import pytest

from plb.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound_json(capsys):
    code, out, _ = _run(
        capsys,
        "bound", "--p", "2", "--n", "3", "--radius", "1", "--method", "double_singular",
    )
    assert code == 0
    body = json.loads(out)
    assert body["method"] == "double_singular"
    assert body["value"] == pytest.approx(4.0, abs=1e-9)
    assert body["applicable"] is True


def test_bound_volume(capsys):
    volume = "%.17g" % (4.0 * math.pi / 3.0)
    code, out, _ = _run(
        capsys,
        "bound", "--p", "2", "--n", "3", "--volume", volume, "--method", "cheeger",
    )
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(2.25, rel=1e-9)


def test_bound_usage_errors(capsys):
    code, _, err = _run(
        capsys, "bound", "--p", "0.5", "--n", "3", "--radius", "1", "--method", "cheeger"
    )
    assert code == 2
    assert "error:" in err
    # radius and volume are mutually exclusive at the parser level.
    code, _, _ = _run(
        capsys,
        "bound", "--p", "2", "--n", "3", "--radius", "1", "--volume", "2",
        "--method", "cheeger",
    )
    assert code == 2
    code, _, _ = _run(capsys, "bound", "--p", "2", "--n", "3", "--radius", "1")
    assert code == 2


def test_bound_human_format(capsys):
    code, out, _ = _run(
        capsys,
        "bound", "--p", "3", "--n", "3", "--radius", "1", "--method", "hardy",
        "--format", "human",
    )
    assert code == 0
    assert "not applicable" in out


def test_sweep_csv_shape_and_order(capsys):
    code, out, _ = _run(
        capsys,
        "sweep", "--p-range", "2:4:1", "--n-list", "3,2", "--methods",
        "cheeger,hardy", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "p,n,R,method,value,applicable,delta_star"
    assert len(lines) == 1 + 2 * 3 * 2
    rows = [line.split(",") for line in lines[1:]]
    key = [(int(r[1]), float(r[0]), r[3]) for r in rows]
    assert key == sorted(key)
    # The inapplicable hardy cell at p = n carries nan but does not abort.
    nan_rows = [r for r in rows if r[4] == "nan"]
    assert all(r[5] == "false" for r in nan_rows)
    assert {(r[0], r[1]) for r in nan_rows} == {("2", "2"), ("3", "3")}


def test_sweep_single_point_matches_bound(capsys):
    _, sweep_out, _ = _run(
        capsys,
        "sweep", "--p-range", "2:2:1", "--n-list", "3", "--methods", "family_sup",
        "--format", "csv",
    )
    _, bound_out, _ = _run(
        capsys,
        "bound", "--p", "2", "--n", "3", "--radius", "1", "--method", "family_sup",
    )
    row = sweep_out.strip().split("\n")[1].split(",")
    body = json.loads(bound_out)
    assert float(row[4]) == pytest.approx(body["value"], rel=1e-12)
    assert float(row[6]) == pytest.approx(body["meta"]["delta_star"], rel=1e-9)


def test_sweep_byte_determinism(capsys):
    argv = (
        "sweep", "--p-range", "1.3:5:0.37", "--n-list", "2,3,4", "--methods",
        "cheeger,picone,family_sup,hardy", "--format", "csv",
    )
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second


def test_sweep_shows_family_picone_crossing(capsys):
    code, out, _ = _run(
        capsys,
        "sweep", "--p-range", "1.5:6:0.5", "--n-list", "3", "--methods",
        "picone,family_sup", "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    diff_signs = set()
    by_p = {}
    for r in rows:
        by_p.setdefault(r["p"], {})[r["method"]] = r["value"]
    for vals in by_p.values():
        diff_signs.add(vals["family_sup"] > vals["picone"])
    assert diff_signs == {True, False}


def test_verify_exit_codes(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "sharpness", "--format", "human")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
    code, out, _ = _run(
        capsys, "verify", "--suite", "all", "--tol", "1e-20", "--format", "human"
    )
    assert code == 1
    assert "FAIL" in out


def test_eig_json(capsys):
    code, out, _ = _run(
        capsys, "eig", "--p", "2", "--n", "3", "--radius", "1", "--grid", "1024"
    )
    assert code == 0
    body = json.loads(out)
    assert body["value"] == pytest.approx(math.pi ** 2, rel=1e-5)


def test_compare_json(capsys):
    code, out, _ = _run(capsys, "compare", "--which", "p0n", "--n", "2")
    assert code == 0
    assert json.loads(out)["p_star"] == pytest.approx(1.5, abs=1e-9)


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "bound.json"
    code, out, _ = _run(
        capsys,
        "bound", "--p", "2", "--n", "3", "--radius", "1", "--method", "cheeger",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["value"] == pytest.approx(2.25, abs=1e-9)


def test_tables_crossovers_csv(capsys):
    code, out, _ = _run(capsys, "tables", "--which", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 9
    stars = [float(line.split(",")[2]) for line in lines[1:]]
    assert stars == sorted(stars, reverse=True)
