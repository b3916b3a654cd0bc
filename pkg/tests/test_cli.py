"""Command-line interface: commands, flags, exit codes, JSON output."""

import json

import pytest
from click.testing import CliRunner

from momentangle.cli import main


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def fig1(tmp_path):
    path = tmp_path / "fig1.json"
    path.write_text(json.dumps({
        "m": 5,
        "maximal_faces": [[1, 2], [1, 3, 4], [1, 3, 5], [1, 4, 5],
                          [2, 3, 4], [2, 3, 5], [2, 4, 5]],
    }))
    return str(path)


@pytest.fixture
def counterexample(tmp_path):
    path = tmp_path / "counter.json"
    path.write_text(json.dumps({
        "m": 6,
        "maximal_faces": [[1, 2, 3], [4, 5, 6],
                          [1, 2, 4, 5], [1, 2, 4, 6], [1, 2, 5, 6],
                          [1, 3, 4, 5], [1, 3, 4, 6], [1, 3, 5, 6],
                          [2, 3, 4, 5], [2, 3, 4, 6], [2, 3, 5, 6]],
    }))
    return str(path)


def test_zk_table(runner, fig1):
    result = runner.invoke(main, ["zk", fig1])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].split("|")[0].strip() == "degree"
    rows = [tuple(x.strip() for x in line.split("|")) for line in lines[1:]]
    assert rows == [("5", "4", "-"), ("6", "3", "-"),
                    ("7", "1", "-"), ("8", "1", "-")]


def test_zk_json_matches_table(runner, fig1):
    result = runner.invoke(main, ["zk", fig1, "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc == {"5": {"rank": 4, "torsion": []},
                   "6": {"rank": 3, "torsion": []},
                   "7": {"rank": 1, "torsion": []},
                   "8": {"rank": 1, "torsion": []}}


def test_homology_command(runner, fig1):
    result = runner.invoke(main, ["homology", fig1, "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc == {"1": {"rank": 1, "torsion": []},
                   "2": {"rank": 1, "torsion": []}}


def test_hochster_by_subset(runner, fig1):
    result = runner.invoke(main, ["hochster", fig1, "--by-subset", "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["totals"]["5"]["rank"] == 4
    assert sum(1 for s in doc["by_subset"] if "5" in s["groups"]) == 4


def test_hurewicz_command(runner):
    result = runner.invoke(main, ["hurewicz", "[1,2,[3,4,5]]"])
    assert result.exit_code == 0
    assert "dimension: 8" in result.output
    assert "D1S2D3D4S5" in result.output


def test_minimal_command(runner):
    result = runner.invoke(main, ["minimal", "[1,2,3]"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc == {"m": 3, "maximal_faces": [[1, 2], [1, 3], [2, 3]]}


def test_defined_command(runner, fig1, counterexample):
    result = runner.invoke(main, ["defined", "[1,2,[3,4,5]]", fig1])
    assert result.exit_code == 0
    assert "verdict: DEFINED" in result.output
    result = runner.invoke(main, ["defined", "[1,[2,3,4,5,6]]", counterexample])
    assert result.exit_code == 0
    assert "verdict: UNDEFINED" in result.output


def test_realize_command_json(runner, fig1):
    result = runner.invoke(main, ["realize", "[1,2,[3,4,5]]", fig1, "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["verdict"] == "REALIZED-EVIDENCE"
    claims = {c["claim"]: c["witness"] for c in doc["certificates"]}
    assert claims["class is primitive"] is True


def test_enumerate_command(runner, counterexample):
    result = runner.invoke(main, ["enumerate", counterexample,
                                  "--dim", "10", "--max-brackets", "2"])
    assert result.exit_code == 0
    assert "56 candidates, 0 defined" in result.output


def test_wdelta_command(runner, fig1, counterexample):
    result = runner.invoke(main, ["wdelta", fig1])
    assert result.exit_code == 0
    assert "verdict: MATCHED" in result.output
    result = runner.invoke(main, ["wdelta", counterexample])
    assert result.exit_code == 0
    assert "verdict: UNMATCHED" in result.output
    assert "degree 10 UNMATCHED" in result.output


def test_bad_expression_exit_code(runner, fig1):
    result = runner.invoke(main, ["defined", "[1,2", fig1])
    assert result.exit_code == 2
    result = runner.invoke(main, ["hurewicz", "[1,[1,2]]"])
    assert result.exit_code == 2


def test_missing_file_exit_code(runner):
    result = runner.invoke(main, ["zk", "no-such-file.json"])
    assert result.exit_code == 2


def test_malformed_json_exit_code(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    result = runner.invoke(main, ["zk", str(bad)])
    assert result.exit_code == 2


def test_output_is_deterministic(runner, fig1):
    first = runner.invoke(main, ["hochster", fig1, "--by-subset"]).output
    second = runner.invoke(main, ["hochster", fig1, "--by-subset"]).output
    assert first == second
