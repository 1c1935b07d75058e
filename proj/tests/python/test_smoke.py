"""Smoke tests for the qtorus Python module and the command-line binary."""

import json
import os
import subprocess

import pytest

import qtorus

M3 = "+--/-+-/--+"
M4 = "+---/-+--/--+-/---+"


def valid_grid(n):
    grid = [("main", l) for l in range(n // 2 + 1)]
    grid += [("tau1", l) for l in range((n - 1) // 2 + 1)]
    grid += [("tau2", l) for l in range(1, n // 2 + 1)]
    return grid


def test_normal_form_m3():
    result = qtorus.normal_form(M3)
    assert result["n"] == 3
    assert result["l"] == 1
    assert result["normalForm"] == "+-+/-++/+++"
    assert result["verified"] is True
    assert result["witness"]["det"] in (-1, 1)


def test_classify_goldens():
    first = qtorus.classify(M3, "+++")
    assert (first["kind"], first["l"]) == ("tau1", 1)
    assert first["verified"] is True
    second = qtorus.classify("++/++", "--")
    assert (second["kind"], second["l"]) == ("tau1", 0)
    third = qtorus.classify(M4, "++++")
    assert (third["kind"], third["l"]) == ("tau2", 2)
    assert third["index"] == 6


def test_index_formula_matches_brute_count():
    for n in range(1, 7):
        for kind, l in valid_grid(n):
            assert qtorus.index_formula(kind, l, n) == qtorus.brute_index_count(
                kind, l, n
            )


def test_census_involutive_counts():
    counts = [len(qtorus.census_involutive(n)) for n in range(1, 5)]
    assert counts == [1, 2, 3, 5]
    classes = {(c["kind"], c["l"]) for c in qtorus.census_involutive(4)}
    assert classes == {
        ("main", 0),
        ("main", 1),
        ("main", 2),
        ("tau1", 1),
        ("tau2", 2),
    }
    assert sum(c["population"] for c in qtorus.census_involutive(4)) == 64


def test_census_all_counts():
    assert [qtorus.census_all(n)["count"] for n in range(1, 5)] == [1, 2, 5, 22]


def test_pattern_round_trip_and_similarity():
    pattern = qtorus.from_involution(M3, "+++")
    assert set(pattern.split(",")) == {"000", "100", "010", "001"}
    info = qtorus.semilattice_info(pattern)
    assert info["index"] == 4
    assert info["twist"] == 0
    assert info["semilattice"] is True
    assert info["saturation"] == 3
    witness = qtorus.similar(pattern, pattern)
    assert witness is not None
    assert set(witness) == {"translation", "map"}


def test_lambda_t_twists():
    for t in range(1, 4):
        assert qtorus.semilattice_info(qtorus.lambda_t(4, t))["twist"] == t


def test_count_eala_classes():
    census = qtorus.count_eala_classes(3, 3)
    assert census["count"] == 6
    labels = {label for c in census["classes"] for label in c["labels"]}
    assert "Lambda^(3)" in labels
    assert qtorus.count_eala_classes(4, 4)["count"] == 7


def test_compare_class_sets():
    report = qtorus.compare_class_sets(3, 0)
    assert report["rCount"] == 5
    assert report["lrCount"] == 3
    assert report["lrSubset"] is True
    assert report["strict"] is True
    assert any("2^31" in note for note in report["notes"])


def test_generate_roots_count():
    roots = qtorus.generate_roots(3, 1, "0,1", box=0)
    assert len(roots) == 19
    assert {root["stratum"] for root in roots} <= {"iso", "short", "long"}


def cli_path():
    path = os.environ.get("QTORUS_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("QTORUS_CLI not set")
    return path


def test_cli_classify_deterministic():
    cli = cli_path()
    runs = [
        subprocess.run(
            [cli, "classify", M3, "+++"], capture_output=True, text=True
        )
        for _ in range(2)
    ]
    assert runs[0].returncode == 0
    assert runs[0].stdout == runs[1].stdout
    payload = json.loads(runs[0].stdout)
    assert payload["kind"] == "tau1"
    assert payload["l"] == 1
    assert payload["verified"] is True


def test_cli_normal_form_golden():
    cli = cli_path()
    run = subprocess.run(
        [cli, "normal-form", M4], capture_output=True, text=True
    )
    assert run.returncode == 0
    payload = json.loads(run.stdout)
    assert payload["l"] == 2
    assert payload["verified"] is True


def test_cli_parse_error_exit_code():
    cli = cli_path()
    run = subprocess.run(
        [cli, "classify", "+x/-+", "++"], capture_output=True, text=True
    )
    assert run.returncode == 2
