import json

import pytest

from biquandles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_catalog_algebra(capsys):
    code, out, _ = run(capsys, "check", "dihedral3")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_check_bad_table_exits_one(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "op": [[1, 0], [1, 1]]}))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    report = json.loads(out)
    assert report["violations"][0]["axiom"] == "Q1"


def test_check_malformed_exits_two(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "op": [[1, 7], [1, 0]]}))
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "error" in err


def test_colorings_count_only(capsys):
    code, out, _ = run(capsys, "colorings", "dihedral3", "trefoil_right", "--mode", "q",
                       "--count-only")
    assert code == 0
    assert out.strip() == "9"


def test_colorings_emit_array_and_count_line(capsys):
    code, out, _ = run(capsys, "colorings", "dihedral3", "figure8", "--mode", "q")
    assert code == 0
    body, count_line = out.rsplit("\n", 2)[0], out.strip().rsplit("\n", 1)[1]
    colorings = json.loads(body)
    assert len(colorings) == 3
    assert all(c["kind"] == "quandle" for c in colorings)
    assert count_line == "count: 3"


def test_oracle_agrees_with_colorings(capsys):
    code, out, _ = run(capsys, "oracle", "census3_0", "hopf_pos", "--mode", "bq",
                       "--count-only")
    assert code == 0
    oracle_count = int(out.strip())
    code, out, _ = run(capsys, "colorings", "census3_0", "hopf_pos", "--mode", "bq",
                       "--count-only")
    assert int(out.strip()) == oracle_count


def test_oracle_guard_refusal(capsys):
    code, _, err = run(capsys, "oracle", "dihedral9", "figure8", "--mode", "bq")
    assert code == 2
    assert "guard" in err


def test_psi_phi_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "colorings", "census3_20", "trefoil_right", "--mode", "q")
    colorings = json.loads(out.rsplit("\n", 2)[0])
    some = colorings[-1]
    cpath = tmp_path / "coloring.json"
    cpath.write_text(json.dumps(some))
    code, out, _ = run(capsys, "psi", "census3_20", "trefoil_right", str(cpath))
    assert code == 0
    lifted = json.loads(out)
    assert lifted["kind"] == "biquandle"
    bpath = tmp_path / "biq.json"
    bpath.write_text(json.dumps(lifted))
    code, out, _ = run(capsys, "phi", "census3_20", "trefoil_right", str(bpath))
    assert code == 0
    assert json.loads(out) == some


def test_verify_bijection_command(capsys):
    code, out, _ = run(capsys, "verify-bijection", "alexander3_2_1", "figure8")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] and report["counts_equal"]


def test_verify_naturality_command(capsys):
    code, out, _ = run(capsys, "verify-naturality", "census3_20", "r2_pair")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_invariant_command(capsys, tmp_path):
    theta = {
        "arity": 2,
        "A": [3],
        "values": {f"{a},{b}": [0] for a in range(3) for b in range(3)},
    }
    tpath = tmp_path / "theta.json"
    tpath.write_text(json.dumps(theta))
    code, out, _ = run(capsys, "invariant", "dihedral3", str(tpath), "trefoil_right")
    assert code == 0
    assert json.loads(out) == {"invariant": [{"value": [0], "mult": 9}]}
    code, out, _ = run(capsys, "invariant", "dihedral3", str(tpath), "trefoil_right",
                       "--shadow")
    assert json.loads(out) == {"invariant": [{"value": [0], "mult": 9}]}


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    listing = json.loads(out)
    assert "trefoil_right" in listing["diagrams"]
    assert "r3_pair" in listing["move_pairs"]


def test_unknown_algebra_exits_two(capsys):
    code, _, err = run(capsys, "colorings", "nonsense", "trefoil_right")
    assert code == 2


def test_alexander_rejects_non_units(capsys):
    code, _, err = run(capsys, "check", "alexander4_2_1")
    assert code == 2
    assert "unit" in err


def test_verify_naturality_suite_smoke(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "naturality")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] and report["cells"] == 144


def test_verify_report_dir(capsys, tmp_path):
    report_dir = tmp_path / "report"
    code, out, _ = run(capsys, "verify", "--suite", "naturality", "--report-dir",
                       str(report_dir))
    assert code == 0
    assert (report_dir / "cells.csv").exists()
    assert (report_dir / "matrix.png").exists()
    assert (report_dir / "summary.txt").exists()
    header = (report_dir / "cells.csv").read_text().splitlines()[0]
    assert header == "algebra,diagram,check,passed,detail"
