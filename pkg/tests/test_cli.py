import json

import pytest

from app.errors import EXIT_DISCREPANCY, EXIT_IO, EXIT_OK, EXIT_USAGE
from app.main import run
from tests.conftest import DIAMOND_TEXT, EDGE_TEXT, N_TEXT, PATH_TEXT, load_golden


def run_json(capsys, argv):
    assert run(argv) == EXIT_OK
    return json.loads(capsys.readouterr().out)


@pytest.fixture
def n_file(tmp_path):
    path = tmp_path / "n.poset"
    path.write_text(N_TEXT, encoding="utf-8")
    return str(path)


def test_classify_from_file(capsys, n_file):
    report = run_json(capsys, ["classify", "--input", n_file])
    assert report["bounded"] is True
    assert report["lattice"] is False
    assert report["dacey"] is False
    assert report["orthomodular"] is False
    assert report["q_size"] == 13
    assert report["witnesses"]["non_dacey"] == {"closed_set": ["0<a", "0<b"], "basis": ["0<a"]}
    assert report["witnesses"]["nonlattice_ideal"] == ["0", "a", "b"]
    assert report["witnesses"]["hexagon"] is not None


def test_classify_diamond_matches_golden(capsys):
    report = run_json(capsys, ["classify", "--text", DIAMOND_TEXT])
    expected = load_golden("diamond_classification.json")
    assert {key: report[key] for key in expected} == expected
    assert report["witnesses"]["disjoint_pair"] is not None


def test_classify_text_format(capsys):
    assert run(["classify", "-t", "elements: x y z; covers: x<y, y<z", "-f", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "chain: yes" in out
    assert "boolean: yes" in out
    assert "logic size: 4" in out


def test_witness_text_on_n(capsys, n_file):
    assert run(["witness", "-i", n_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "non-Dacey set {0<a,0<b} with basis {0<a}" in out
    assert "τ(I) = {0<a,0<b} with basis {0<a}" in out
    assert "non-lattice ideal: {0,a,b}" in out
    assert "hexagon:" in out


def test_witness_json_on_n(capsys, n_file):
    report = run_json(capsys, ["witness", "-i", n_file, "-f", "json"])
    expected = load_golden("n_witness.json")
    assert {key: report[key] for key in expected} == expected
    assert len(report["hexagon"]) == 6


def test_witness_on_a_lattice_finds_nothing(capsys):
    assert run(["witness", "--text", DIAMOND_TEXT]) == EXIT_OK
    assert capsys.readouterr().out == "none\n"


@pytest.mark.parametrize("text, golden", [(PATH_TEXT, "path_logic.json"), (EDGE_TEXT, "edge_logic.json")])
def test_logic_of_a_space(capsys, text, golden):
    assert run_json(capsys, ["logic", "--space", "--text", text]) == load_golden(golden)


def test_logic_of_a_poset_marks_chain_type_sets(capsys):
    dump = run_json(capsys, ["logic", "--text", DIAMOND_TEXT])
    assert dump["size"] == 6
    assert dump["elements"][0]["members"] == []
    assert dump["elements"][0]["maximal"] == []
    assert dump["elements"][-1]["maximal"] == ["0<1"]
    assert dump["orthomodular"] is True


@pytest.mark.parametrize("command", ["logic", "kalmbach", "macneille"])
def test_dot_output(capsys, command):
    assert run([command, "--text", DIAMOND_TEXT, "--format", "dot"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("digraph")
    assert "rankdir=BT" in out
    assert "->" in out


def test_logic_dot_draws_orthocomplements(capsys):
    assert run(["logic", "--space", "--text", PATH_TEXT, "-f", "dot"]) == EXIT_OK
    out = capsys.readouterr().out
    dashed = [line.strip() for line in out.splitlines() if "dashed" in line]
    assert dashed == [
        "0 -> 5 [style=dashed, dir=none, constraint=false];",
        "1 -> 3 [style=dashed, dir=none, constraint=false];",
        "2 -> 4 [style=dashed, dir=none, constraint=false];",
    ]


def test_completion_dot_has_no_orthocomplement(capsys):
    assert run(["macneille", "--text", DIAMOND_TEXT, "-f", "dot"]) == EXIT_OK
    assert "dashed" not in capsys.readouterr().out


def test_kalmbach_json(capsys):
    dump = run_json(capsys, ["kalmbach", "--text", DIAMOND_TEXT])
    assert dump["size"] == 6
    assert dump["ortholattice"] is True
    assert dump["orthomodular"] is True
    assert dump["isomorphism_holds"] is True
    assert len(dump["isomorphism"]) == 6


def test_kalmbach_of_n_skips_the_isomorphism(capsys, n_file):
    dump = run_json(capsys, ["kalmbach", "-i", n_file])
    assert dump["isomorphism"] is None


def test_macneille_text(capsys, n_file):
    assert run(["macneille", "-i", n_file, "-f", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("7 closed ideals")
    assert "every ideal principal: no" in out
    assert "embedding into logic" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert run(["classify", "--text", DIAMOND_TEXT, "--output", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["lattice"] is True


def test_missing_input_file(tmp_path, capsys):
    assert run(["classify", "--input", str(tmp_path / "missing.poset")]) == EXIT_IO
    assert "error: Cannot read" in capsys.readouterr().err


def test_unwritable_output(tmp_path):
    target = tmp_path / "no-such-dir" / "out.json"
    assert run(["classify", "--text", DIAMOND_TEXT, "-o", str(target)]) == EXIT_IO


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["classify", "--text", DIAMOND_TEXT, "--format", "dot"],
    ["classify"],
    ["harness", "--mutate", "everything"],
    ["harness", "--max", "0"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_malformed_poset(capsys):
    assert run(["classify", "--text", "elements: a b; covers: a<b, b<a"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == EXIT_OK
    assert "classify" in capsys.readouterr().out


def test_harness_reports_verification(capsys):
    assert run(["harness", "--max", "4", "--graphs-max", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("checked 5 bounded posets of size <= 4 and 8 graphs")
    assert out.rstrip().endswith("all theorems verified, 0 discrepancies")
    assert "unbounded 2-antichain: 0 quotients, logic size 1" in out
    assert "quoted as 2 (differs)" in out


def test_harness_json(capsys):
    report = run_json(capsys, ["harness", "--max", "3", "--graphs-max", "2", "-f", "json"])
    assert report["verified"] is True
    assert report["catalogue_size"] == 3
    assert all(report["coverage"].values())
    assert report["unbounded"]["stated_logic_size"] == 2
    assert report["unbounded"]["differs_from_stated"] is True
    assert [poset["q_size"] for poset in report["posets"]] == [0, 1, 3]


def test_strict_harness_with_a_mutation(capsys):
    assert run(["harness", "--max", "3", "--graphs-max", "2", "--mutate", "ocompl", "--strict"]) == EXIT_DISCREPANCY
    captured = capsys.readouterr()
    assert "DISCREPANCY" in captured.out
    assert "negative control: ocompl" in captured.out
    assert "error:" in captured.err


def test_mutation_without_strict_still_exits_zero(capsys):
    assert run(["harness", "--max", "3", "--graphs-max", "0", "--mutate", "adjacency"]) == EXIT_OK
    assert "DISCREPANCY" in capsys.readouterr().out
