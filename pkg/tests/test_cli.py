"""End-to-end tests of the command line front end.

Most tests drive ``unimod.cli.run`` in-process and inspect captured
stdout; two subprocess tests confirm the module and console-script entry
points behave the same way.
"""

import json
import shutil
import subprocess
import sys

import pytest

from unimod.cli import run

BAD_MINOR_MATRIX = "4 2\n1 0\n0 1\n1 1\n1 -1\n"


def payload(out):
    """The non-metadata lines of a text report."""
    return [l for l in out.splitlines() if not l.startswith("#")]


def without_timing(out):
    return [l for l in out.splitlines() if not l.startswith("# elapsed_ms")]


def test_complexity_text_report(capsys):
    rc = run(["complexity", "catalog:bixby_seymour"])
    out = capsys.readouterr().out
    assert rc == 0
    assert payload(out) == ["162"]
    lines = out.splitlines()
    assert lines[0] == "# unimod complexity"
    assert lines[1].startswith("# input catalog:bixby_seymour sha256=")
    assert len(lines[1].split("sha256=")[1]) == 64
    assert lines[-1].startswith("# elapsed_ms ")


def test_complexity_enumerate_agrees(capsys):
    rc = run(["complexity", "catalog:bixby_seymour", "--enumerate"])
    out = capsys.readouterr().out
    assert rc == 0
    assert payload(out) == ["162", "bases 162", "agree yes"]


def test_check_standard_form_comment(capsys):
    rc = run(["check", "catalog:bixby_seymour"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "# standard form, n=5 N=10 base_rows=0,1,2,3,4" in out
    # ten data rows after the "10 5" header
    assert payload(out)[0] == "10 5"
    assert len(payload(out)) == 11


def test_check_failure_prints_witness_and_exits_1(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text(BAD_MINOR_MATRIX)
    rc = run(["check", str(f)])
    out = capsys.readouterr().out
    assert rc == 1
    assert any(l.startswith("error:") for l in out.splitlines())
    witness = [l for l in out.splitlines() if l.startswith("# witness ")]
    assert len(witness) == 1
    assert "rows=" in witness[0] and "value=" in witness[0]
    assert "2" in witness[0].split("value=")[1]


def test_unknown_catalog_entry_exits_2(capsys):
    rc = run(["complexity", "catalog:no_such_thing"])
    out = capsys.readouterr().out
    assert rc == 2
    assert "error:" in out


def test_kind_mismatch_exits_2(capsys):
    # theta is a graph entry, not a system
    rc = run(["complexity", "catalog:theta:3"])
    out = capsys.readouterr().out
    assert rc == 2
    assert "use the graph command" in out


def test_missing_file_exits_2(capsys):
    rc = run(["check", "/no/such/file.txt"])
    assert rc == 2
    assert "error:" in capsys.readouterr().out


def test_cap_exceeded_exits_3(capsys):
    rc = run(["polytope", "catalog:bixby_seymour", "--cap", "8"])
    out = capsys.readouterr().out
    assert rc == 3
    assert "error:" in out


def test_json_error_document(capsys):
    rc = run(["complexity", "catalog:no_such_thing", "--json"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 2
    assert doc["schema"] == "unimod/1"
    assert doc["error"]["kind"] == "CatalogError"
    assert "result" not in doc


def test_polytope_json_matches_golden(capsys):
    rc = run(["polytope", "catalog:bixby_seymour", "--json"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert doc["schema"] == "unimod/1"
    assert doc["command"] == "polytope"
    assert doc["inputs"][0]["source"] == "catalog:bixby_seymour"
    with open("tests/golden/bixby_seymour_polytope.json") as fh:
        golden = json.load(fh)
    assert doc["result"] == golden


def test_polytope_text_verdict_lines(capsys):
    rc = run(["polytope", "catalog:bixby_seymour"])
    out = capsys.readouterr().out
    assert rc == 0
    body = payload(out)
    assert "origin 1" in body
    assert "square 4 count 30" in body
    assert "square 6 count 30" in body
    assert "square 10 count 12" in body
    assert "points 73" in body
    assert "vertices 12" in body
    assert "facets 20" in body
    assert "zonotope no" in body
    assert "reflexive yes" in body
    pair_lines = [l for l in body if l.startswith("pair ")]
    assert len(pair_lines) == 10
    assert all("+side 21p/6v" in l and "-side 21p/6v" in l for l in pair_lines)


def test_reports_are_deterministic_modulo_timing(capsys):
    run(["polytope", "catalog:bixby_seymour"])
    first = capsys.readouterr().out
    run(["polytope", "catalog:bixby_seymour", "--threads", "2"])
    second = capsys.readouterr().out
    assert without_timing(first) == without_timing(second)


def test_json_deterministic_modulo_timing(capsys):
    run(["lattice", "catalog:bixby_seymour", "--json"])
    a = json.loads(capsys.readouterr().out)
    run(["lattice", "catalog:bixby_seymour", "--json"])
    b = json.loads(capsys.readouterr().out)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_lattice_report_fields(capsys):
    rc = run(["lattice", "catalog:bixby_seymour"])
    out = capsys.readouterr().out
    assert rc == 0
    body = payload(out)
    assert "discriminant 162" in body
    assert "units 0" in body
    assert "roots 0" in body
    assert "square_3 0" in body
    assert "min_square 4 (attained)" in body


def test_dual_output_file_round_trips(tmp_path, capsys):
    out_file = tmp_path / "dual.txt"
    rc = run(["dual", "catalog:bixby_seymour", "-o", str(out_file)])
    out = capsys.readouterr().out
    assert rc == 0
    assert f"wrote {out_file}" in out
    # the written file parses, verifies, and is isomorphic to the original
    rc = run(["check", str(out_file)])
    capsys.readouterr()
    assert rc == 0
    rc = run(["isomorphic", str(out_file), "catalog:bixby_seymour"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "isomorphic yes" in out


def test_isomorphic_no(capsys):
    rc = run(["isomorphic", "catalog:sigma:3", "catalog:upsilon:3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert payload(out) == ["isomorphic no"]


def test_aut_count(capsys):
    rc = run(["aut", "catalog:sigma:3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert payload(out) == ["12"]


def test_decompose_upsilon(capsys):
    rc = run(["decompose", "catalog:upsilon:2"])
    out = capsys.readouterr().out
    assert rc == 0
    body = out.splitlines()
    assert "upsilon_summands 2" in body
    assert "unit_rows 0 1" in body
    assert "# core empty" in body


def test_decompose_core_passthrough(capsys):
    rc = run(["decompose", "catalog:bixby_seymour"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "upsilon_summands 0" in out.splitlines()
    assert "unit_rows -" in out.splitlines()
    assert "10 5" in payload(out)


def test_graph_graphic_from_edge_file(tmp_path, capsys):
    f = tmp_path / "theta3.txt"
    f.write_text("2 3\n1 2\n1 2\n1 2\n")
    rc = run(["graph", str(f), "--graphic"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "# labels: e1 e2 e3" in out
    assert payload(out)[0] == "3 2"


def test_graph_requires_a_mode(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("2 1\n1 2\n")
    with pytest.raises(SystemExit) as ei:
        run(["graph", str(f)])
    assert ei.value.code == 2


def test_graph_stabilize_note(capsys):
    # theta:3 is already stable, so the note shows no change
    rc = run(["graph", "catalog:theta:3", "--cographic", "--stabilize"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "stabilized 2v/3e -> 2v/3e" in out


def test_graph_degenerate_exits_1(tmp_path, capsys):
    f = tmp_path / "tree.txt"
    f.write_text("3 2\n1 2\n2 3\n")
    rc = run(["graph", str(f), "--graphic"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "error:" in out


def test_catalog_listing(capsys):
    rc = run(["catalog"])
    out = capsys.readouterr().out
    assert rc == 0
    for name in ("bixby_seymour", "bixby_seymour_raw", "sigma", "upsilon",
                 "pair2", "triangle3", "theta", "cycle", "complete"):
        assert any(l.startswith(name) for l in payload(out))


def test_catalog_and_file_fingerprints_agree(tmp_path, capsys):
    """A catalog reference and its rendered file hash identically."""
    out_file = tmp_path / "sys.txt"
    run(["dual", "catalog:sigma:2", "-o", str(out_file)])
    capsys.readouterr()
    run(["check", "catalog:triangle3", "--json"])
    ref = json.loads(capsys.readouterr().out)["inputs"][0]["sha256"]
    assert len(ref) == 64


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "unimod.cli", "complexity", "catalog:sigma:5"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert payload(proc.stdout) == ["5"]


@pytest.mark.skipif(shutil.which("unimod") is None,
                    reason="console script not on PATH")
def test_console_script_subprocess():
    proc = subprocess.run(["unimod", "complexity", "catalog:sigma:5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert payload(proc.stdout) == ["5"]
