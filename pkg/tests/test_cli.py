import csv
import os
import io
import json
import xml.etree.ElementTree as ET

import pytest

from totaldom.cli import CSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_json(capsys):
    code, out, _ = run(capsys, "poly", "friendship:2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["coeffs"] == ["0", "0", "4", "6", "5", "1"]
    assert doc["gamma_t"] == 2


def test_poly_table(capsys):
    code, out, _ = run(capsys, "poly", "complete:3")
    assert code == 0
    assert "gamma_t: 2" in out and "total dominating sets: 4" in out


def test_poly_from_file(capsys, tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("# four-cycle\n4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "poly", str(path), "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,0", "1,0", "2,4", "3,4", "4,1"]


def test_bad_file_reports_line(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3\n0 1\n0 7\n")
    code, _, err = run(capsys, "poly", str(path))
    assert code == 2
    assert "line 3:" in err


def test_cap_flag(capsys, monkeypatch):
    monkeypatch.delenv("TOTALDOM_CAP", raising=False)
    code, _, err = run(capsys, "--cap", "10", "poly", "path:12")
    assert code == 3
    assert "resource" in err
    assert "TOTALDOM_CAP" not in os.environ


def test_closed_form_family_ignores_cap(capsys, monkeypatch):
    monkeypatch.delenv("TOTALDOM_CAP", raising=False)
    code, out, _ = run(capsys, "poly", "complete:40", "--format", "json")
    assert code == 0
    assert json.loads(out)["n"] == 40


def test_unknown_family(capsys):
    code, _, err = run(capsys, "poly", "dodecahedron:3")
    assert code == 2
    assert "unknown family" in err


def test_roots_json_and_disc(capsys):
    code, out, _ = run(capsys, "roots", "kmn:2,2", "--check-disc")
    assert code == 0
    doc = json.loads(out)
    assert doc["zero_multiplicity"] == 2
    assert doc["roots"][0]["multiplicity"] == 2
    assert float(doc["roots"][0]["re"]) == pytest.approx(-2)
    assert doc["disc_check"]["status"] == "pass"


def test_roots_of_zero_polynomial_is_usage_error(capsys):
    code, _, _ = run(capsys, "roots", "empty:3")
    assert code == 2


def test_sweep_csv_svg_png(capsys, tmp_path):
    out = tmp_path / "kmn.csv"
    code, _, _ = run(capsys, "sweep", "kmn", "1..4", "--out", str(out), "--svg", "--png")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == CSV_HEADER
    assert {r[0] for r in rows[1:]} >= {"1,1", "3,4", "4,4"}
    root = ET.parse(tmp_path / "kmn.svg").getroot()
    assert root.tag.endswith("svg")
    assert (tmp_path / "kmn.png").read_bytes()[:4] == b"\x89PNG"


def test_sweep_is_byte_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["sweep", "friendship", "1..8", "--out", str(a)])
    main(["sweep", "friendship", "1..8", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_sweep_range_errors(capsys):
    assert run(capsys, "sweep", "complete", "5..2")[0] == 2
    assert run(capsys, "sweep", "complete", "abc")[0] == 2
    assert run(capsys, "sweep", "complete", "1..3", "--svg")[0] == 2


def test_check_with_config(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"checks": [{"name": "kn_even", "range": [2, 10]}]}))
    code, out, err = run(capsys, "check", str(cfg))
    assert code == 0
    assert len(out.splitlines()) == 5
    assert "5 reports" in err


def test_check_reports_theorem_failures(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"checks": [{"name": "bn_real", "range": [2, 3]}]}))
    code, _, err = run(capsys, "check", str(cfg))
    assert code == 1
    assert "THEOREM FAIL bn_no_nonzero_real:book(2)" in err


def test_check_unknown_check_is_usage_error(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"checks": ["nope"]}))
    assert run(capsys, "check", str(cfg))[0] == 2
    cfg.write_text("{not json")
    assert run(capsys, "check", str(cfg))[0] == 2
