import json
import shutil
import subprocess

import pytest

from conftest import COLLINEAR4, SQUARE
from greedy_crossings import formats
from greedy_crossings.cli import main
from greedy_crossings.geometry import PointSet


def run(args, capsys=None):
    code = main([str(a) for a in args])
    out = capsys.readouterr() if capsys else None
    return code, out


def write_pts(path, pts):
    formats.write_points(str(path), PointSet(pts))
    return path


def test_generate_uniform_is_reproducible(tmp_path):
    a, b = tmp_path / "a.pts", tmp_path / "b.pts"
    assert run(["generate", "--kind", "uniform", "--n", 128, "--seed", 7, "--out", a])[0] == 0
    assert run(["generate", "--kind", "uniform", "--n", 128, "--seed", 7, "--out", b])[0] == 0
    assert a.read_bytes() == b.read_bytes()
    P = formats.read_points(str(a))
    assert len(P) == 128 and not P.has_duplicates()
    assert P.xy.min() >= 0 and P.xy.max() < 1
    run(["generate", "--kind", "uniform", "--n", 1, "--out", a])
    assert len(formats.read_points(str(a))) == 1


def test_generate_other_kinds(tmp_path):
    out = tmp_path / "arr.pts"
    assert run(["generate", "--kind", "arrangement", "--t", 1.5, "--delta", 0.2, "--columns", 200, "--out", out])[0] == 0
    assert len(formats.read_points(str(out))) == 400
    z = tmp_path / "z.pts"
    assert run(["generate", "--kind", "zigzag", "--n", 5, "--t", 2, "--out", z])[0] == 0
    assert formats.read_points(str(z)).xy[1, 1] == pytest.approx(3**0.5)
    c = tmp_path / "c.pts"
    assert run(["generate", "--kind", "file", "--in", z, "--perturb", 1e-3, "--seed", 1, "--out", c])[0] == 0
    moved = formats.read_points(str(c)).xy - formats.read_points(str(z)).xy
    assert 0 < abs(moved).max() <= 1e-3 * PointSet(formats.read_points(str(z)).xy).diameter()


def test_build_collinear_and_square(tmp_path):
    for pts, m, weight in ((COLLINEAR4, 3, 3.0), (SQUARE, 4, 4.0)):
        p = write_pts(tmp_path / "p.pts", pts)
        assert run(["build", "--in", p, "--t", 1.5, "--out", tmp_path / "g", "--stats", tmp_path / "s.json"])[0] == 0
        s = json.loads((tmp_path / "s.json").read_text())
        assert (s["m"], s["crossing_count"], s["degeneracy"], s["total_weight"]) == (m, 0, 0, weight)
        assert s["schema_version"] == formats.STATS_SCHEMA_VERSION
        assert "separator_size" not in s


def test_build_is_byte_deterministic(tmp_path):
    run(["generate", "--kind", "uniform", "--n", 150, "--seed", 3, "--out", tmp_path / "u.pts"])
    outs = []
    for k in range(2):
        g, s = tmp_path / f"g{k}", tmp_path / f"s{k}.json"
        assert run(["build", "--in", tmp_path / "u.pts", "--t", 1.3, "--out", g, "--stats", s, "--separator"])[0] == 0
        outs.append((g.read_bytes(), s.read_bytes()))
    assert outs[0] == outs[1]
    s = json.loads(outs[0][1])
    assert s["separator_size"] > 0 and s["separator_balance"] <= 2 / 3
    g2 = tmp_path / "naive"
    run(["build", "--in", tmp_path / "u.pts", "--t", 1.3, "--algo", "naive", "--out", g2])
    assert g2.read_bytes().split(b"\n", 1)[1] == outs[0][0].split(b"\n", 1)[1]


def test_verify_and_failure_exit(tmp_path, capsys):
    p = write_pts(tmp_path / "sq.pts", SQUARE)
    run(["build", "--in", p, "--t", 1.5, "--out", tmp_path / "g"])
    code, out = run(["verify", "--in-points", p, "--in-graph", tmp_path / "g", "--t", 1.5], capsys)
    assert code == 0 and json.loads(out.out)["stretch_ok"] is True
    code, out = run(["verify", "--in-graph", tmp_path / "g", "--t", 1.3], capsys)
    assert code == 3
    assert out.err.startswith("ERROR E_VERIFY:") and out.err.count("\n") == 1
    assert json.loads(out.out)["stretch_violations"] == 2


def test_crossings_separator_svg(tmp_path):
    run(["generate", "--kind", "uniform", "--n", 200, "--seed", 9, "--out", tmp_path / "u.pts"])
    run(["build", "--in", tmp_path / "u.pts", "--t", 1.2, "--out", tmp_path / "g"])
    assert run(["crossings", "--in-graph", tmp_path / "g", "--stats", tmp_path / "c.json"])[0] == 0
    c = json.loads((tmp_path / "c.json").read_text())
    assert c["crossing_count"] > 0
    assert sum(c["crossings_per_edge_histogram"].values()) == c["m"]
    assert run(["separator", "--in-graph", tmp_path / "g", "--cutoff", 16, "--stats", tmp_path / "s.json"])[0] == 0
    s = json.loads((tmp_path / "s.json").read_text())
    assert s["max_leaf_size"] <= 16 and s["max_balance"] <= 2 / 3
    assert run(["svg", "--in-graph", tmp_path / "g", "--out", tmp_path / "g.svg"])[0] == 0
    svg = (tmp_path / "g.svg").read_text()
    assert svg.count("<line ") == c["m"] and svg.count("<circle ") == 200
    assert svg.count("<rect ") == c["crossing_count"]
    run(["svg", "--in-graph", tmp_path / "g", "--out", tmp_path / "h.svg", "--no-crossings"])
    assert (tmp_path / "h.svg").read_text().count("<rect ") == 0


@pytest.mark.parametrize(
    "args,code,prefix",
    [
        (["build", "--in", "missing.pts", "--t", 1.5, "--out", "x"], 1, "ERROR E_IO:"),
        (["build", "--in", "bad.pts", "--t", 1.5, "--out", "x"], 1, "ERROR E_PARSE:"),
        (["build", "--in", "dup.pts", "--t", 1.5, "--out", "x"], 1, "ERROR E_DUPLICATE"),
        (["build", "--in", "ok.pts", "--t", 1.0, "--out", "x"], 2, "ERROR E_STRETCH:"),
        (["generate", "--kind", "uniform", "--out", "x"], 2, "ERROR E_PARAMS:"),
        (["generate", "--kind", "arrangement", "--t", 1.9, "--delta", 0.2, "--columns", 9, "--out", "x"], 2, "ERROR E_PARAMS:"),
        (["frobnicate"], 2, "ERROR E_PARAMS:"),
        (["bench", "--suite", "nope"], 2, "ERROR E_PARAMS:"),
        (["separator", "--in-graph", "ok.graph", "--cutoff", 0, "--stats", "s"], 2, "ERROR E_PARAMS:"),
    ],
)
def test_error_codes(tmp_path, monkeypatch, capsys, args, code, prefix):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "bad.pts").write_text("1 2\n3 four\n")
    (tmp_path / "dup.pts").write_text("1 2\n1 2\n")
    write_pts(tmp_path / "ok.pts", SQUARE)
    (tmp_path / "ok.graph").write_text("# points: ok.pts\n0 1\n")
    got, out = run(args, capsys)
    assert got == code
    assert out.err.startswith(prefix)
    assert out.err.count("\n") == 1


def test_parse_error_names_line(tmp_path, capsys):
    (tmp_path / "bad.pts").write_text("1 2\n3 four\n")
    _, out = run(["build", "--in", tmp_path / "bad.pts", "--t", 2, "--out", tmp_path / "g"], capsys)
    assert "bad.pts:2:" in out.err


def test_overlap_hint_and_perturb(tmp_path, capsys):
    # collinear overlapping edges cannot arise in a greedy spanner, so feed a graph file
    p = write_pts(tmp_path / "c.pts", [(0, 0), (2, 0), (1, 0), (3, 0)])
    (tmp_path / "c.graph").write_text("# points: c.pts\n0 1\n2 3\n")
    code, out = run(["crossings", "--in-graph", tmp_path / "c.graph", "--t", 2, "--stats", tmp_path / "s"], capsys)
    assert code == 1 and out.err.startswith("ERROR E_OVERLAP:") and "--perturb" in out.err
    code, _ = run(["build", "--in", p, "--t", 1.5, "--perturb", 1e-6, "--out", tmp_path / "g", "--stats", tmp_path / "s"])
    assert code == 0 and (tmp_path / "g.points").exists()


def test_spanner_threads_validation(tmp_path, monkeypatch, capsys):
    p = write_pts(tmp_path / "sq.pts", SQUARE)
    run(["build", "--in", p, "--t", 1.5, "--out", tmp_path / "g"])
    monkeypatch.setenv("SPANNER_THREADS", "1")
    assert run(["verify", "--in-graph", tmp_path / "g", "--t", 1.5], capsys)[0] == 0
    monkeypatch.setenv("SPANNER_THREADS", "zero")
    code, out = run(["verify", "--in-graph", tmp_path / "g", "--t", 1.5], capsys)
    assert code == 2 and out.err.startswith("ERROR E_PARAMS:")


def test_bench_smoke(capsys):
    code, out = run(["bench", "--suite", "smoke"], capsys)
    assert code == 0
    res = json.loads(out.out)
    assert {r["backend"] for r in res["rows"]} >= {"python"}


@pytest.mark.skipif(shutil.which("greedy-crossings") is None, reason="console script not installed")
def test_console_script(tmp_path):
    r = subprocess.run(
        ["greedy-crossings", "generate", "--kind", "uniform", "--n", "5", "--out", str(tmp_path / "p")],
        capture_output=True, text=True,
    )
    assert r.returncode == 0
    r = subprocess.run(["greedy-crossings", "build"], capture_output=True, text=True)
    assert r.returncode == 2 and r.stderr.startswith("ERROR E_PARAMS:")
