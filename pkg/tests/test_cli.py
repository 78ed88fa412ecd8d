import io
import json
import random
import subprocess
import sys

import pytest

from named_graphs import C5, C6, P4, TUSP8
from skewpart.cli import EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION, CliError, format_graph, main, parse_dimacs, parse_edgelist
from skewpart.colouring import Colouring, verify_colouring
from skewpart.generators import random_bipartite
from skewpart.graph import Graph
from skewpart.oracles import is_berge_bruteforce
from skewpart.skew import classify


def _write(tmp_path, g: Graph, name="g.col", fmt="dimacs"):
    path = tmp_path / name
    path.write_text(format_graph(g, fmt))
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _json(capsys, *argv):
    code, out, err = _run(capsys, *argv, "--json", "--no-timing")
    return code, (json.loads(out) if out else None), err


def test_parse_dimacs_path():
    g = parse_dimacs("c a path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    assert g == P4


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("p edge 2 1\ne 1 1\n", "line 2: self-loop"),
        ("p edge 3 2\ne 1 2\ne 2 1\n", "line 3: duplicate"),
        ("p edge 3 1\ne 1 4\n", "line 2: vertex 4 out of range"),
        ("e 1 2\n", "line 1"),
        ("p edge 3 2\ne 1 2\n", "declares 2"),
        ("p edge x 1\n", "line 1"),
        ("p edge 0 0\n", "line 1"),
    ],
)
def test_parse_dimacs_errors(text, fragment):
    with pytest.raises(CliError) as exc:
        parse_dimacs(text)
    assert exc.value.code == EXIT_INPUT
    assert fragment in str(exc.value)


def test_parse_edgelist():
    g = parse_edgelist("# a path\n1 2\n2 3  # middle\n3 4\n")
    assert g == P4
    assert parse_edgelist("1 2\n", vertices=5).n == 5
    with pytest.raises(CliError):
        parse_edgelist("")
    assert parse_edgelist("", vertices=3) == Graph(3)
    with pytest.raises(CliError):
        parse_edgelist("1 2\n", vertices=1)


def test_self_loop_exit_code(tmp_path, capsys):
    path = tmp_path / "loop.col"
    path.write_text("p edge 1 1\ne 1 1\n")
    code, _, err = _run(capsys, "tight-list", str(path))
    assert code == EXIT_INPUT and "self-loop" in err


def test_empty_edgelist_needs_vertices(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("")
    assert _run(capsys, "tight-list", str(path), "--format", "edgelist")[0] == EXIT_INPUT
    code, doc, _ = _json(capsys, "tight-list", str(path), "--format", "edgelist", "--vertices", "3")
    assert code == EXIT_OK and doc["n"] == 3 and doc["result"] == []


def test_missing_file_and_bad_flags(tmp_path, capsys):
    assert _run(capsys, "loose", str(tmp_path / "nope.col"))[0] == EXIT_INPUT
    path = _write(tmp_path, P4)
    assert _run(capsys, "loose", path, "--jobs", "0")[0] == EXIT_INPUT
    assert _run(capsys, "loose", path, "--budget", "0")[0] == EXIT_INPUT
    assert _run(capsys, "frobnicate", path)[0] == EXIT_INPUT


def test_balanced_on_path(tmp_path, capsys):
    code, doc, _ = _json(capsys, "balanced", _write(tmp_path, P4))
    assert code == EXIT_OK
    assert doc["command"] == "balanced" and doc["n"] == 4 and doc["m"] == 3
    assert doc["result"]["A"] == [1, 4] and doc["result"]["B"] == [2, 3]
    assert doc["result"]["balance"] == "balanced"
    assert set(doc["stats"]) == {"elapsed_ms", "candidates_examined"}
    assert doc["stats"]["elapsed_ms"] is None


def test_colour_on_odd_hole_fails_precondition(tmp_path, capsys):
    code, _, err = _run(capsys, "colour", _write(tmp_path, C5))
    assert code == EXIT_PRECONDITION and "not Berge" in err


def test_tight_list_on_hexagon(tmp_path, capsys):
    code, doc, _ = _json(capsys, "tight-list", _write(tmp_path, C6))
    assert code == EXIT_OK and doc["result"] == []


def test_null_result_is_success(tmp_path, capsys):
    code, doc, _ = _json(capsys, "loose", _write(tmp_path, C6))
    assert code == EXIT_OK and doc["result"] is None
    code, out, _ = _run(capsys, "loose", _write(tmp_path, C6))
    assert code == EXIT_OK and out.strip() == "no loose skew partition"


def test_berge_gating_by_budget(tmp_path, capsys):
    g = random_bipartite(14, 0.3, random.Random(3))
    path = _write(tmp_path, g)
    code, _, err = _run(capsys, "balanced", path)
    assert code == EXIT_PRECONDITION and "--assume-berge" in err
    assert _run(capsys, "balanced", path, "--assume-berge")[0] == EXIT_OK
    assert _run(capsys, "balanced", path, "--budget", "14")[0] == EXIT_OK
    assert _run(capsys, "check-berge", path)[0] == EXIT_PRECONDITION


def test_unbalanced_tight_list_certificates(tmp_path, capsys):
    code, doc, _ = _json(capsys, "unbalanced-tight-list", _write(tmp_path, TUSP8))
    assert code == EXIT_OK and len(doc["result"]) == 1
    part = doc["result"][0]
    sp = classify(TUSP8, sum(1 << (v - 1) for v in part["A"]), sum(1 << (v - 1) for v in part["B"]))
    assert sp is not None and sp.tight
    hole = doc["certificates"][0]["square"]["hole"]
    assert len(hole) == 4


def test_check_berge_reports_witness(tmp_path, capsys):
    code, doc, _ = _json(capsys, "check-berge", _write(tmp_path, C5))
    assert code == EXIT_OK and doc["result"] is False
    assert sorted(doc["certificates"]["hole"]) == [1, 2, 3, 4, 5]
    code, doc, _ = _json(capsys, "check-berge", _write(tmp_path, C6))
    assert doc["result"] is True and doc["certificates"] is None


def test_colour_then_verify(tmp_path, capsys):
    path = _write(tmp_path, TUSP8)
    code, doc, _ = _json(capsys, "colour", path)
    assert code == EXIT_OK
    colours = dict(enumerate(doc["result"]["colours"]))
    assert verify_colouring(TUSP8, Colouring(doc["result"]["palette"], colours))
    assert doc["result"]["palette"] == len(doc["certificates"]["clique"])
    saved = tmp_path / "colouring.json"
    saved.write_text(json.dumps(doc))
    code, check, _ = _json(capsys, "verify", path, "--colouring", str(saved))
    assert code == EXIT_OK and check["result"] == {"valid": True, "palette": doc["result"]["palette"]}


def test_verify_flags_bad_colouring(tmp_path, capsys):
    path = _write(tmp_path, P4)
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n2 1\n3 2\n")
    code, doc, _ = _json(capsys, "verify", path, "--colouring", str(bad))
    assert code == EXIT_OK and doc["result"]["valid"] is False
    assert {"uncoloured": [4]} in doc["certificates"]
    assert {"monochromatic_edges": [[1, 2]]} in doc["certificates"]
    assert _run(capsys, "verify", path)[0] == EXIT_INPUT
    bad.write_text("9 1\n")
    assert _run(capsys, "verify", path, "--colouring", str(bad))[0] == EXIT_INPUT


def test_kr_list_and_cc_tree(tmp_path, capsys):
    path = _write(tmp_path, P4)
    code, doc, _ = _json(capsys, "kr-list", path)
    assert code == EXIT_OK and doc["stats"]["candidates_examined"] == len(doc["result"])
    code, doc, _ = _json(capsys, "cc-tree", path)
    assert code == EXIT_OK
    assert doc["result"]["nodes"][0]["vertices"] == [1, 2, 3, 4]
    assert len(doc["result"]["kernels"]) <= 2


@pytest.mark.parametrize("family", ["bipartite", "line-bipartite", "complement-bipartite", "berge", "random"])
def test_gen_families(family, capsys):
    code, out, _ = _run(capsys, "gen", family, "--vertices", "8", "--seed", "5")
    assert code == EXIT_OK
    g = parse_dimacs(out)
    assert g.n == 8
    if family != "random":
        assert is_berge_bruteforce(g)
    assert _run(capsys, "gen", family, "--vertices", "8", "--seed", "5")[1] == out


def test_gen_tusp8_round_trips(capsys):
    code, out, _ = _run(capsys, "gen", "tusp8", "--format", "edgelist")
    assert code == EXIT_OK and parse_edgelist(out) == TUSP8
    assert _run(capsys, "gen", "random")[0] == EXIT_INPUT


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(format_graph(P4, "dimacs")))
    code, doc, _ = _json(capsys, "loose", "-")
    assert code == EXIT_OK and doc["result"]["B"] == [2, 3]


@pytest.mark.parametrize("command", ["tight-list", "kr-list", "loose", "balanced", "unbalanced-tight-list", "cc-tree", "colour"])
def test_output_is_byte_identical(tmp_path, capsys, command):
    g = random_bipartite(9, 0.45, random.Random(11)).complement()
    path = _write(tmp_path, g)
    outs = {_run(capsys, command, path, "--json", "--no-timing", "--jobs", jobs)[1] for jobs in ("1", "2", "1")}
    assert len(outs) == 1


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "skewpart", "gen", "tusp8"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.startswith("p edge 8")
