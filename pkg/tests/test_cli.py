import json

import pytest

from h2orbits.cli import expected_planar, main, run_scan, scan_row
from h2orbits.origami import equivalent, parse_origami

FIG = "h=(1,2,3); v=(1,3); n=3"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_small_origami(capsys):
    code, out, _ = run(capsys, "classify", "--origami", FIG, "--json")
    info = json.loads(out)
    assert code == 0
    assert info["stratum"] == [2] and info["in_H2"] and info["primitive"]
    assert info["monodromy"] == "SymmetricFull"
    code, out, _ = run(capsys, "classify", "--origami", FIG)
    assert "H(2)" in out and "canonical" in out


def test_classify_torus_and_alternating(capsys):
    code, out, _ = run(capsys, "classify", "--origami", "h=(1,2); v=(); n=2", "--json")
    info = json.loads(out)
    assert code == 0 and info["stratum"] == [] and not info["in_H2"]
    _, out, _ = run(capsys, "classify", "--origami", "h=(1,2,3,4,5); v=(1,2,3); n=5", "--json")
    info = json.loads(out)
    assert info["stratum"] == [2] and info["monodromy"] == "AlternatingContained"


def test_classify_parse_error_has_column(capsys):
    code, _, err = run(capsys, "classify", "--origami", "h=(1,2,3; v=(); n=3")
    assert code == 2 and "column" in err
    code, _, err = run(capsys, "classify", "--origami", "h=(1,2); v=(3,4); n=4")
    assert code == 2 and "NotConnected" in err


def test_orbit_exports(capsys, tmp_path):
    code, out, _ = run(capsys, "orbit", "--n", "3", "--orbit", "unique", "--format", "dot")
    assert code == 0 and out.startswith("digraph orbit {") and out.count("tooltip") == 3
    code, out, _ = run(capsys, "orbit", "--n", "5", "--orbit", "A", "--format", "json")
    data = json.loads(out)
    assert data["vertex_count"] == 18 and data["edge_count"] == 36
    path = tmp_path / "g7b.json"
    code, _, _ = run(capsys, "orbit", "--n", "7", "--orbit", "B", "--gens", "PR", "--format", "json", "--out", str(path))
    assert code == 0 and json.loads(path.read_text())["vertex_count"] == 36


def test_orbit_invalid_combination(capsys):
    code, _, err = run(capsys, "orbit", "--n", "6", "--orbit", "A")
    assert code == 2 and "InvalidCombination" in err
    code, _, err = run(capsys, "orbit", "--n", "7", "--orbit", "unique")
    assert code == 2


def test_planarity_commands(capsys):
    code, out, _ = run(capsys, "planarity", "--n", "3", "--orbit", "unique", "--expect", "planar")
    assert code == 0 and out.rstrip().endswith(": planar")
    code, out, _ = run(capsys, "planarity", "--n", "5", "--orbit", "B", "--json", "--embedding")
    data = json.loads(out)
    assert data["planar"] and len(data["embedding"]) == 9
    code, out, _ = run(capsys, "planarity", "--n", "8", "--orbit", "unique", "--gens", "PR", "--expect", "non-planar")
    assert code == 0 and "non-planar" in out
    code, _, err = run(capsys, "planarity", "--n", "8", "--orbit", "unique", "--gens", "PR", "--expect", "planar")
    assert code == 1 and "expected planar" in err


def test_verify_minor(capsys):
    code, out, _ = run(capsys, "verify-minor", "--family", "even", "--n", "10")
    assert code == 0 and "verified" in out
    code, out, _ = run(capsys, "verify-minor", "--family", "A", "--n", "9", "--json")
    data = json.loads(out)
    assert code == 0 and data["verified"] and len(data["branch_vertices"]) == 6
    assert "timings_ms" not in data
    code, _, err = run(capsys, "verify-minor", "--family", "B", "--n", "5")
    assert code == 2 and "InvalidFamilyDegree" in err


def test_act(capsys):
    code, out, _ = run(capsys, "act", "--word", "T", "--origami", FIG)
    assert code == 0 and parse_origami(out.strip()) == parse_origami("h=(1,2,3); v=(2,3); n=3")
    code, out, _ = run(capsys, "act", "--word", "", "--origami", FIG)
    assert parse_origami(out.strip()) == parse_origami(FIG)
    lit = "h=(1,2,3,4,5,6); v=(5,6); n=6"
    code, out, _ = run(capsys, "act", "--word", "R R", "--origami", lit, "--show-equivalence")
    first = out.splitlines()[0]
    assert equivalent(parse_origami(first), parse_origami(lit))
    assert out.splitlines()[1] == "equivalent to input"
    code, _, err = run(capsys, "act", "--word", "T Q", "--origami", FIG)
    assert code == 2 and "column 3" in err


def test_scan_rows_and_exit_code(capsys, tmp_path):
    out_path = tmp_path / "scan.json"
    code, out, _ = run(capsys, "scan", "--gens", "TS", "--n-min", "3", "--n-max", "7", "--out", str(out_path))
    assert code == 0
    report = json.loads(out_path.read_text())
    keys = [(r["n"], r["orbit"]) for r in report["rows"]]
    assert keys == [(3, "unique"), (4, "unique"), (5, "A"), (5, "B"), (6, "unique"), (7, "A"), (7, "B")]
    assert all("wall_time_ms" not in r for r in report["rows"])
    assert {r["n"]: r["certificate_verified"] for r in report["rows"] if r["orbit"] == "B"} == {5: None, 7: True}
    code, _, err = run(capsys, "scan", "--gens", "TS", "--n-min", "5", "--n-max", "4")
    assert code == 2


def test_scan_budget_overrun_is_reported_not_raised():
    row = scan_row(13, "A", "TS", budget_seconds=0.0)
    assert row["status"] == "budget_exceeded" and "error" in row


def test_scan_json_deterministic_across_jobs(capsys, tmp_path):
    texts = []
    for jobs in ("1", "2", "1"):
        p = tmp_path / f"s{len(texts)}.json"
        code, _, _ = run(capsys, "scan", "--gens", "PR", "--n-min", "3", "--n-max", "9", "--jobs", jobs,
                         "--spectral", "--out", str(p), "--json")
        assert code == 0
        texts.append(p.read_bytes())
    assert texts[0] == texts[1] == texts[2]


def test_scan_timings_flag_adds_wall_time():
    rows = run_scan("TS", 3, 4)
    assert all(isinstance(r["wall_time_ms"], float) for r in rows)


def test_expected_planar_table():
    assert expected_planar(3, "unique", "TS") and expected_planar(5, "B", "TS")
    assert not expected_planar(5, "A", "TS")
    assert expected_planar(7, "A", "PR") and expected_planar(9, "B", "PR")
    assert not expected_planar(9, "A", "PR") and not expected_planar(8, "unique", "PR")


def test_missing_required_flag_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        main(["orbit"])
    assert exc.value.code != 0
