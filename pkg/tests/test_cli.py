import csv
import io
import json
import math
import subprocess
import sys

import pytest

from walkforge.cli import main, parse_real


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_real():
    assert parse_real("0.5pi") == pytest.approx(math.pi / 2)
    assert parse_real("-pi") == -math.pi
    assert parse_real("2*pi") == 2 * math.pi
    assert parse_real("1.25") == 1.25


def test_synth_hypercube_json(capsys):
    code, out, _ = run(capsys, "synth", "hypercube(4)", "--t", "1.0")
    assert code == 0
    data = json.loads(out)
    assert data["wires"] == 4 and len(data["gates"]) == 12


def test_synth_qasm_to_file(tmp_path, capsys):
    path = tmp_path / "c.qasm"
    assert run(capsys, "synth", "star(2)", "--format", "qasm", "--out", str(path))[0] == 0
    assert path.read_text().startswith("# walkforge circuit\nwires 3\n")


def test_evolve_path2(capsys):
    code, out, err = run(capsys, "evolve", "path2", "--t", "1.5708", "--init", "0")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    p = [float(r["p_circuit"]) for r in rows]
    assert p == pytest.approx([0.0, 1.0], abs=1e-8)
    assert "max probability deviation" in err


def test_verify_book(capsys):
    code, out, _ = run(capsys, "verify", "book(3)", "--t", "0,1,3.14159")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "expr,dim,t,gamma,max_dist,spec_dist,gates,cost2q,pass"
    assert len(lines) == 4


def test_verify_failure_exit(capsys):
    assert run(capsys, "verify", "hypercube(2)", "--tol", "-1")[0] == 1


def test_scaling(capsys):
    code, out, err = run(capsys, "scaling", "hypercube", "--sizes", "1..4")
    assert code == 0
    assert len(out.splitlines()) == 5
    assert "fitted exponent" in err


def test_export_graph(capsys):
    code, out, _ = run(capsys, "export-graph", "interdep_id(complete(2))")
    assert code == 0 and "dashed" in out
    code, out, _ = run(capsys, "export-graph", "star(1)", "--format", "json")
    assert json.loads(out)["dim"] == 4


@pytest.mark.parametrize("argv,code", [
    (["synth", "star("], 2),
    (["synth", "bipartite(1,3)"], 3),
    (["synth", "interdep_complete(complete(2), hypercube(2))"], 3),
    (["synth", "commuting_sum(star(1), complete(2))"], 4),
    (["verify", "hypercube(4)", "--cap", "3"], 6),
    (["synth", "path2", "--out", "/nonexistent/dir/x.json"], 8),
    (["synth", "path2", "--format", "dot"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_parse_error_message(capsys):
    code, _, err = run(capsys, "synth", "star(3")
    assert code == 2
    assert "walkforge:" in err


def test_help_lists_exit_codes():
    out = subprocess.run([sys.executable, "-m", "walkforge", "--help"], capture_output=True, text=True).stdout
    assert "exit status" in out and "8  I/O error" in out


def test_cap_flag_does_not_leak(capsys):
    import os
    before = os.environ.get("WALKFORGE_CAP")
    run(capsys, "verify", "path2", "--cap", "3")
    assert os.environ.get("WALKFORGE_CAP") == before
