"""
End-to-end tests for the locascope command line.

Every command is invoked through click's CliRunner on small generated graphs
or temporary graph files.

Run with: uv run pytest tests/test_cli_commands.py -v
"""

import json
import math

import pytest
from click.testing import CliRunner

from locascope import __version__, main
from locascope.generators import cycle, grid2d, path
from locascope.graphs import format_graph, parse_graph, read_graph

from .oracles import fibonacci


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _run(runner: CliRunner, *args: str):
    return runner.invoke(main, list(args), catch_exceptions=False)


def _json(result) -> dict:
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def _error(result) -> dict:
    assert result.exit_code == 1, result.output
    return json.loads(result.output.strip().splitlines()[-1])


class TestGraphCommands:
    """Test generate, stats and decompose."""

    def test_version(self, runner):
        result = _run(runner, "--version")
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_generate_to_stdout(self, runner):
        result = _run(runner, "generate", "--family", "cycle:5")
        assert result.exit_code == 0
        assert parse_graph(result.stdout) == cycle(5)

    def test_generate_to_file(self, runner, tmp_path):
        target = tmp_path / "grid.txt"
        result = _run(runner, "generate", "--family", "grid2d:3x4", "--out", str(target))
        assert result.exit_code == 0
        assert read_graph(target) == grid2d(3, 4)

    def test_generate_infeasible(self, runner):
        payload = _error(_run(runner, "generate", "--family", "cycle:2"))
        assert payload["error"] == "InfeasibleSpec"

    def test_stats_cycle_csv(self, runner, graph_file):
        source = graph_file(format_graph(cycle(8)))
        result = _run(runner, "stats", "--input", str(source), "--radius", "1")
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "radius,code,frequency"
        assert len(lines) == 3
        assert all(line.endswith(",1.0") for line in lines[1:])

    def test_stats_only_radius(self, runner, graph_file):
        cycle_source = graph_file(format_graph(cycle(8)), "c8.txt")
        lines = _run(runner, "stats", "--input", str(cycle_source), "--radius", "1", "--only-radius").stdout.strip().splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("1,") and lines[1].endswith(",1.0")

        path_source = graph_file(format_graph(path(4)), "p4.txt")
        result = _run(runner, "stats", "--input", str(path_source), "--radius", "1", "--only-radius")
        assert sorted(float(line.split(",")[2]) for line in result.stdout.strip().splitlines()[1:]) == [0.5, 0.5]

        payload = _json(_run(runner, "stats", "--input", str(path_source), "--radius", "1", "--only-radius",
                             "--format", "json"))
        assert list(payload["stats"]) == ["1"]

    def test_stats_path_json(self, runner, graph_file):
        source = graph_file(format_graph(path(4)))
        payload = _json(_run(runner, "stats", "--input", str(source), "--radius", "1", "--format", "json"))
        assert sorted(payload["stats"]["1"].values()) == [0.5, 0.5]
        assert payload["sample_size"] is None

    def test_stats_sampled(self, runner):
        payload = _json(
            _run(runner, "stats", "--family", "cycle:40", "--samples", "25", "--seed", "3", "--format", "json")
        )
        assert payload["sample_size"] == 25
        assert list(payload["stats"]["1"].values()) == [1.0]

    def test_malformed_file_names_line(self, runner, graph_file):
        source = graph_file("3 2 2\n0 1\n1 1\n")
        payload = _error(_run(runner, "stats", "--input", str(source)))
        assert payload["error"] == "GraphParseError"
        assert payload["details"]["line"] == 3
        assert "line 3" in payload["message"]

    def test_text_error_format(self, runner, graph_file, monkeypatch):
        monkeypatch.setenv("LOCASCOPE_ERROR_FORMAT", "text")
        source = graph_file("2 1 1\n0 0\n")
        result = _run(runner, "stats", "--input", str(source))
        assert result.exit_code == 1
        assert "Error: line 2" in result.output

    def test_input_and_family_exclusive(self, runner, graph_file):
        source = graph_file(format_graph(cycle(8)))
        payload = _error(_run(runner, "stats", "--input", str(source), "--family", "cycle:8"))
        assert payload["error"] == "InvalidParameter"
        assert _error(_run(runner, "stats"))["error"] == "InvalidParameter"

    def test_decompose(self, runner):
        payload = _json(_run(runner, "decompose", "--family", "cycle:100", "--delta", "0.1"))
        assert payload["n"] == 100
        assert len(payload["removed_edges"]) <= 10
        assert sum(len(c["vertices"]) for c in payload["components"]) == 100
        assert pytest.approx(sum(payload["census"].values())) == 1.0

    def test_decompose_requires_delta(self, runner):
        payload = _error(_run(runner, "decompose", "--family", "cycle:10"))
        assert payload["details"]["missing"] == ["delta"]

    def test_decompose_delta_out_of_range(self, runner):
        assert _error(_run(runner, "decompose", "--family", "cycle:10", "--delta", "1.5"))["error"] == "InvalidParameter"

    def test_decompose_sequence(self, runner):
        result = _run(
            runner, "decompose", "--family", "grid2d", "--sizes", "10,20", "--delta", "0.5", "--format", "csv"
        )
        assert result.exit_code == 0, result.output
        lines = result.stdout.strip().splitlines()
        assert lines[0].split(",")[0] == "size"
        assert "census_drift" in lines[0]
        assert len(lines) == 3


class TestEstimateCommands:
    """Test estimate, approx-mis, spectrum, ids and counterexample."""

    def test_estimate_cycle(self, runner):
        payload = _json(
            _run(runner, "estimate", "--family", "cycle:1000", "--param", "independence_ratio", "--delta", "0.04")
        )
        assert payload["graph"] == "cycle:1000"
        assert payload["value"] == pytest.approx(0.519)
        assert payload["error_bound"] == pytest.approx(0.08)

    def test_estimate_entropy(self, runner):
        payload = _json(
            _run(runner, "estimate", "--family", "path:200", "--param", "log_ind_partition",
                 "--lambda", "1", "--delta", "0.02")
        )
        assert payload["entropy"] == payload["value"]
        expected = (4 * math.log(fibonacci(43)) + math.log(fibonacci(38))) / 200
        assert payload["value"] == pytest.approx(expected, rel=1e-9)

    def test_estimate_dist_to(self, runner, graph_file):
        source = graph_file("6 6 2\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n")
        payload = _json(
            _run(runner, "estimate", "--input", str(source), "--param", "dist_to:bipartite", "--delta", "1")
        )
        assert payload["value"] == pytest.approx(1 / 3)

    def test_estimate_empty_graph(self, runner, graph_file):
        source = graph_file("0 0 1\n")
        payload = _error(
            _run(runner, "estimate", "--input", str(source), "--param", "independence_ratio", "--delta", "0.5")
        )
        assert payload["error"] == "InvalidParameter"
        assert payload["details"]["vertices"] == 0

    def test_estimate_spectral_csv(self, runner):
        result = _run(
            runner, "estimate", "--family", "grid2d:8x8", "--param", "spectral_cdf", "--delta", "0.5",
            "--potential", "0,1", "--seed", "2", "--format", "csv",
        )
        assert result.exit_code == 0, result.output
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "lambda,cdf"
        assert float(lines[-1].split(",")[1]) == pytest.approx(1.0)

    def test_estimate_component_too_large(self, runner):
        payload = _error(
            _run(runner, "estimate", "--family", "rrg:n=100,d=3,g=3,seed=1", "--param", "log_ind_partition:1",
                 "--delta", "0.01", "--rcap", "40")
        )
        assert payload["error"] == "ComponentTooLarge"
        assert payload["details"]["cap"] == 64

    def test_estimate_unknown_parameter(self, runner):
        payload = _error(_run(runner, "estimate", "--family", "cycle:10", "--param", "chromatic", "--delta", "0.5"))
        assert payload["error"] == "InvalidParameter"

    def test_approx_mis(self, runner):
        payload = _json(_run(runner, "approx-mis", "--family", "cycle:100", "--delta", "0.2"))
        members = payload["vertices"]
        assert payload["size"] == len(members) >= 30
        assert all((v + 1) % 100 not in members for v in members)

    def test_spectrum_exact(self, runner):
        result = _run(runner, "spectrum", "--family", "cycle:4")
        assert result.exit_code == 0, result.output
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "lambda,cdf"
        assert [float(line.split(",")[1]) for line in lines[1:]] == pytest.approx([0.25, 0.75, 1.0])

    def test_spectrum_json_eigenvalues(self, runner):
        payload = _json(_run(runner, "spectrum", "--family", "path:2", "--format", "json"))
        assert payload["eigenvalues"] == pytest.approx([0.0, 2.0])

    def test_spectrum_estimated(self, runner):
        payload = _json(
            _run(runner, "spectrum", "--family", "grid2d:10x10", "--delta", "0.5", "--potential", "0,1",
                 "--format", "json")
        )
        assert payload["cdf"]["n"] == 100
        assert payload["error_bound"] == pytest.approx(4.0)

    def test_ids(self, runner):
        result = _run(
            runner, "ids", "--family", "grid2d", "--sizes", "6,12", "--delta", "0.5", "--seeds", "0-1"
        )
        assert result.exit_code == 0, result.output
        lines = result.stdout.strip().splitlines()
        assert lines[0].startswith("comparison,index,n")
        assert len(lines) == 5
        assert sum(1 for line in lines if line.startswith("cross_seed")) == 2

    def test_ids_rejects_torus(self, runner):
        payload = _error(_run(runner, "ids", "--family", "torus2d", "--sizes", "6,12", "--delta", "0.5"))
        assert payload["error"] == "InfeasibleSpec"

    def test_counterexample(self, runner):
        payload = _json(_run(runner, "counterexample", "--n", "30", "--girth", "6", "--radius", "2"))
        assert payload["stats_distance"] == 0.0
        assert payload["girth"]["bipartite"] >= 6
        assert payload["dist_to_bipartite"]["bipartite"] == 0.0
        assert payload["dist_to_bipartite"]["non_bipartite"] > 0.0

    def test_counterexample_rejects_non_cubic(self, runner, graph_file):
        first = graph_file(format_graph(cycle(6)), "first.txt")
        second = graph_file(format_graph(cycle(8)), "second.txt")
        payload = _error(_run(runner, "counterexample", "--input", str(first), "--input", str(second)))
        assert payload["error"] == "InvalidParameter"
        assert payload["details"]["graph"] == "first"


class TestTesterCommands:
    """Test build-db and test."""

    def test_build_and_query(self, runner, tmp_path):
        db_path = tmp_path / "grids.json"
        result = _run(
            runner, "build-db", "--family", "grid2d:8", "--family", "grid2d:16", "--radius", "1",
            "--delta", "0.5", "--db", str(db_path),
        )
        assert result.exit_code == 0, result.output
        assert "Saved 2 entries" in result.stdout
        assert json.loads(db_path.read_text())["radius"] == 1

        payload = _json(
            _run(runner, "test", "--family", "grid2d:16", "--db", str(db_path), "--samples", "2000", "--seed", "1")
        )
        assert payload["label"] == "grid2d:16x16"
        assert payload["distance"] <= 0.1
        assert 0 < payload["queries"] <= 2000 * 5

    def test_malformed_db_reports_json_error(self, runner, tmp_path):
        db_path = tmp_path / "cycles.json"
        _run(runner, "build-db", "--family", "cycle:20", "--radius", "1", "--delta", "0.5", "--db", str(db_path))
        data = json.loads(db_path.read_text())
        data["entries"][0]["zeta"] = "abc"
        db_path.write_text(json.dumps(data))
        result = runner.invoke(main, ["test", "--family", "cycle:20", "--db", str(db_path)])
        payload = _error(result)
        assert payload["error"] == "DatabaseFormatError"
        assert "zeta" in payload["message"]

    def test_build_db_needs_graphs(self, runner, tmp_path):
        payload = _error(_run(runner, "build-db", "--delta", "0.5", "--db", str(tmp_path / "db.json")))
        assert payload["error"] == "InvalidParameter"

    def test_no_match(self, runner, tmp_path):
        db_path = tmp_path / "cycles.json"
        _run(runner, "build-db", "--family", "cycle:50", "--radius", "1", "--delta", "0.5", "--db", str(db_path))
        payload = _error(
            _run(runner, "test", "--family", "grid2d:10", "--db", str(db_path), "--samples", "200")
        )
        assert payload["error"] == "NoMatchWithinTolerance"
        assert payload["details"]["label"] == "cycle:50"
