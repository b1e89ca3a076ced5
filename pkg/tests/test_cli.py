"""CLI integration: exit codes, report formats, schema conformance."""

from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from drd.cli import build_parser, main, parse_family
from drd.errors import InvalidSpecError
from drd.graph import FamilySpec, parse_graph
from drd.report import load_schema


def run_cli(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code, out = run_cli(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    return code, doc


# --- family spec parsing ---

def test_parse_family():
    assert parse_family("cycle:7") == FamilySpec("cycle", (7,))
    assert parse_family("kpq:2,3") == FamilySpec("complete_bipartite", (2, 3))
    assert parse_family("kn:4") == FamilySpec("complete", (4,))
    assert parse_family("pn:5") == FamilySpec("path", (5,))
    assert parse_family("cn:5") == FamilySpec("cycle", (5,))
    u = parse_family("star:2+trivial:3")
    assert u.kind == "disjoint_union" and len(u.parts) == 2
    with pytest.raises(InvalidSpecError):
        parse_family("cycle:x")
    with pytest.raises(InvalidSpecError):
        parse_family("cycle:3+")


# --- compute ---

def test_compute_cycle(capsys):
    code, doc = run_json(capsys, "compute", "--family", "cycle:7", "--invariant", "gdr")
    assert code == 0 and doc["status"] == "ok"
    assert doc["results"][0]["value"] == 8


def test_compute_all_invariants(capsys):
    for invariant, want in [("gamma", 2), ("gr", 3), ("gdr", 5)]:
        code, doc = run_json(capsys, "compute", "--family", "path:4",
                             "--invariant", invariant)
        assert code == 0 and doc["results"][0]["value"] == want


def test_compute_witness_and_stats(capsys):
    code, doc = run_json(capsys, "compute", "--family", "grid2:4", "--witness", "--stats")
    row = doc["results"][0]
    assert code == 0 and row["value"] == 8
    assert row["witness"].count(",") == 7 and row["nodes"] > 0


def test_compute_from_edge_list(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("3 2\n0 1\n1 2\n")
    code, doc = run_json(capsys, "compute", "--edge-list", str(p), "--invariant", "gamma")
    assert code == 0 and doc["results"][0]["value"] == 1


def test_compute_from_graph6(capsys):
    code, doc = run_json(capsys, "compute", "--graph6", "B_", "--invariant", "gdr")
    assert code == 0 and doc["results"][0]["value"] == 5  # an edge plus an isolate


def test_compute_cap_exit_code(capsys):
    assert main(["compute", "--family", "path:40"]) == 2
    assert "n <= 30" in capsys.readouterr().err


def test_bad_graph6_exit_code(capsys):
    assert main(["compute", "--graph6", "B_!"]) == 2


def test_missing_edge_list_exit_code(capsys):
    assert main(["compute", "--edge-list", "/nonexistent/file"]) == 2


def test_no_graph_source_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute"])
    assert exc.value.code == 2


# --- verify ---

def test_verify_valid(capsys):
    code, doc = run_json(capsys, "verify", "--family", "path:3", "--labeling", "0,3,0")
    assert code == 0 and doc["results"][0]["holds"] is True


def test_verify_invalid_lists_violations(capsys):
    code, doc = run_json(capsys, "verify", "--family", "path:3", "--labeling", "0,2,0")
    assert code == 1 and doc["status"] == "violation"
    row = doc["results"][0]
    assert row["holds"] is False
    assert row["violations"] == [{"vertex": 0, "condition": "i"},
                                 {"vertex": 2, "condition": "i"}]


def test_verify_rdf_and_dominating(capsys):
    code, doc = run_json(capsys, "verify", "--family", "trivial:1",
                         "--labeling", "1", "--kind", "rdf")
    assert code == 0 and doc["results"][0]["holds"] is True
    code, doc = run_json(capsys, "verify", "--family", "path:3",
                         "--labeling", "1", "--kind", "dominating")
    assert code == 0 and doc["results"][0]["holds"] is True


def test_verify_size_mismatch_exit_code(capsys):
    assert main(["verify", "--family", "path:3", "--labeling", "0,3"]) == 2


# --- check suites ---

def test_check_grids_skips_n2(capsys):
    code, doc = run_json(capsys, "check", "grids", "--n", "1..4")
    assert code == 0
    rows = doc["results"]
    assert len(rows) == 4
    skipped = [r for r in rows if r.get("skipped")]
    assert len(skipped) == 1 and skipped[0]["params"]["n"] == 2
    assert all(r["holds"] for r in rows if "holds" in r)


def test_check_pairs(capsys):
    code, doc = run_json(capsys, "check", "pairs", "--a", "2", "--b", "3", "--nmax", "3")
    assert code == 0
    row = doc["results"][0]
    assert row["found"] == "A_" and row["graphs_scanned"] == 2


def test_check_twins_row_count(capsys):
    code, doc = run_json(capsys, "check", "twins", "--family", "cycle:5", "--all-vertices")
    assert code == 0 and len(doc["results"]) == 10
    assert all(r["holds"] for r in doc["results"])


def test_check_fundamental_multiple_sources(capsys):
    code, doc = run_json(capsys, "check", "fundamental",
                         "--family", "path:5", "--family", "cycle:6")
    assert code == 0 and len(doc["results"]) == 8


def test_check_cartesian_single_source_squares(capsys):
    code, doc = run_json(capsys, "check", "cartesian", "--family", "path:3")
    assert code == 0 and len(doc["results"]) == 5


def test_check_corona_variants(capsys):
    code, doc = run_json(capsys, "check", "corona", "--family", "pn:4")
    assert code == 0 and doc["results"][0]["holds"] is True
    code, doc = run_json(capsys, "check", "corona", "--family", "cycle:3",
                         "--with", "path:2")
    assert code == 0 and doc["results"][0]["rhs"] == 9
    code, doc = run_json(capsys, "check", "corona", "--family", "path:2", "--double")
    assert code == 0 and doc["results"][0]["rhs"] == 10


# --- construct ---

def test_construct_family_graph6_raw(capsys):
    code, out = run_cli(capsys, "construct", "family", "--spec", "cycle:5",
                        "--format", "graph6")
    assert code == 0 and out == "Dhc\n"


def test_construct_family_edge_list_raw(capsys):
    code, out = run_cli(capsys, "construct", "family", "--spec", "path:3",
                        "--format", "edge_list")
    assert parse_graph(out, "edge_list").edges() == [(0, 1), (1, 2)]


def test_construct_roman_pair_report(capsys):
    code, doc = run_json(capsys, "construct", "roman_pair", "--b", "8", "--i", "1")
    row = doc["results"][0]
    assert code == 0 and row["params"]["gr"] == 5 and row["params"]["gdr"] == 8
    g = parse_graph(row["graph"], "graph6")
    assert g.n == 10


def test_construct_corona_realization_sidecar(tmp_path, capsys):
    out_file = tmp_path / "g.txt"
    code, _ = run_cli(capsys, "construct", "corona_realization", "--n", "3", "--m", "2",
                      "--output", str(out_file))
    assert code == 0
    g = parse_graph(out_file.read_text(), "edge_list")
    sidecar = json.loads((tmp_path / "g.txt.json").read_text())
    assert sidecar["value"] == 7 and g.n == 6


def test_construct_bad_params_exit_code(capsys):
    assert main(["construct", "corona_realization", "--n", "3", "--m", "5"]) == 2


# --- formats ---

def test_csv_and_json_carry_same_content(capsys):
    _, doc = run_json(capsys, "check", "grids", "--n", "3..5")
    code, out = run_cli(capsys, "check", "grids", "--n", "3..5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == len(doc["results"])
    for csv_row, json_row in zip(rows, doc["results"]):
        assert csv_row["id"] == json_row["id"]
        assert int(csv_row["lhs"]) == json_row["lhs"]
        assert int(csv_row["rhs"]) == json_row["rhs"]
        assert (csv_row["holds"] == "true") == json_row["holds"]


def test_canonical_reports_are_byte_identical(capsys):
    a = run_cli(capsys, "compute", "--family", "grid2:4", "--canonical", "--format", "json")
    b = run_cli(capsys, "compute", "--family", "grid2:4", "--canonical", "--format", "json")
    assert a == b
    assert json.loads(a[1])["elapsed_ms"] == 0


def test_table_format_mentions_status(capsys):
    code, out = run_cli(capsys, "compute", "--family", "cycle:5")
    assert code == 0 and "status: ok" in out and "value=6" in out


# --- console script end to end ---

def test_console_script_end_to_end():
    r = subprocess.run([sys.executable, "-m", "drd.cli", "compute",
                        "--family", "cycle:7", "--format", "json"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["results"][0]["value"] == 8
    r = subprocess.run([sys.executable, "-m", "drd.cli", "verify", "--family", "path:3",
                        "--labeling", "0,2,0"], capture_output=True, text=True)
    assert r.returncode == 1


def test_stdin_edge_list():
    r = subprocess.run([sys.executable, "-m", "drd.cli", "compute", "--edge-list", "-",
                        "--invariant", "gdr", "--format", "json"],
                       input="2 1\n0 1\n", capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["results"][0]["value"] == 3


def test_help_documents_family_syntax():
    parser = build_parser()
    text = parser.format_help()
    assert "compute" in text and "construct" in text
