import json

import pytest

from superheis.cli import main
from superheis.graded import SuperDim

from conftest import EVEN_GRID, ODD_GRID


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_latex(capsys):
    code, out, _ = run(capsys, "construct", "--family", "hmn", "--m", "1", "--n", "2", "--variant", "standard",
                       "--format", "latex")
    assert code == 0
    assert out.startswith("\\begin{pmatrix}") and "\\overline{d}_{1,2}" in out


def test_construct_hn_json(capsys):
    code, out, _ = run(capsys, "construct", "--family", "hn", "--n", "2", "--r", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["module"] == {"even": 1, "odd": 3}


@pytest.mark.parametrize("argv", [
    ["construct", "--family", "hmn", "--m", "0", "--n", "0"],
    ["construct", "--family", "hn", "--n", "2", "--r", "5"],
    ["construct", "--family", "hmn", "--m", "1", "--n", "1", "--r", "0"],
    ["construct", "--family", "hn", "--n", "2", "--variant", "flipped"],
    ["construct", "--family", "hn"],
    ["report", "--family", "hn", "--m", "1", "--n", "2"],
    ["construct", "--family", "sl2"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


@pytest.mark.parametrize("args", [["hmn", m, n, v] for m, n in EVEN_GRID for v in ("standard", "flipped")][::3]
                         + [["hn", 0, n, r] for n in ODD_GRID for r in range(n + 1)][::2])
def test_construct_verify_round_trip(capsys, tmp_path, args):
    family, m, n, extra = args
    path = tmp_path / "rep.json"
    argv = ["construct", "--family", family, "--n", str(n), "--out", str(path)]
    argv += ["--m", str(m), "--variant", extra] if family == "hmn" else ["--r", str(extra)]
    assert run(capsys, *argv)[0] == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "PASS" in out


def test_verify_z_zeroed(capsys, tmp_path):
    path = tmp_path / "rep.json"
    run(capsys, "construct", "--family", "hmn", "--m", "1", "--n", "1", "--out", str(path))
    obj = json.loads(path.read_text())
    for row in obj["images"]["z"]["entries"]:
        for x in row:
            x["re"], x["im"] = "0", "0"
    path.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and "not faithful: z acts trivially" in out
    code, out, _ = run(capsys, "verify", "--json", str(path))
    report = json.loads(out)
    assert code == 1 and report["faithful"] is False and not report["ok"]


def test_verify_malformed(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(capsys, "verify", str(path))[0] == 2
    path.write_text(json.dumps({"algebra": {}}))
    assert run(capsys, "verify", str(path))[0] == 2
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize("argv, fragments", [
    (["--family", "hmn", "--m", "2", "--n", "3"], ["mu=6", "zeta=3", "(4,2), (2,4)"]),
    (["--family", "hn", "--n", "2"], ["(1,3), (2,2), (3,1)"]),
    (["--family", "hmn", "--m", "0", "--n", "1"], ["mu=3"]),
])
def test_report(capsys, argv, fragments):
    code, out, _ = run(capsys, "report", *argv)
    assert code == 0
    for f in fragments:
        assert f in out


def test_report_json(capsys):
    code, out, _ = run(capsys, "report", "--family", "hn", "--n", "3", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["mu"] == 5 and obj["mu01"] == obj["mu10"] == 5


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--family", "hmn", "--m", "2", "--n", "3")
    assert code == 0 and "(2|1)" in out and "certified" in out
    code, out, _ = run(capsys, "witness", "--family", "hn", "--n", "3", "--even", "1", "--odd", "2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["abelian"] and SuperDim.from_json(obj["superdim"]) == SuperDim(1, 2)
    assert run(capsys, "witness", "--family", "hmn", "--m", "1", "--n", "2", "--even", "2")[0] == 2


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-m", "1", "--max-n", "2", "--max-hn", "2")
    assert code == 0 and "ok" in out


def test_selftest_corrupt(capsys):
    code, out, _ = run(capsys, "selftest", "--max-m", "0", "--max-n", "1", "--max-hn", "0", "--corrupt")
    assert code == 1 and "FAIL verify_representation" in out


def test_selftest_empty_grid(capsys):
    code, _, err = run(capsys, "selftest", "--max-m", "-1", "--max-n", "-1", "--max-hn", "0")
    assert code == 0 and "empty grid" in err


def test_out_file(capsys, tmp_path):
    path = tmp_path / "m.tex"
    assert run(capsys, "construct", "--family", "hmn", "--m", "1", "--n", "2", "--format", "latex", "--out", str(path))[0] == 0
    assert path.read_text().startswith("\\begin{pmatrix}")


def test_selftest_default_grid_under_ten_seconds(capsys):
    import time

    start = time.perf_counter()
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and out.startswith("35 specs")
    assert time.perf_counter() - start < 10
