"""Commands that produce graphs, statistics and decompositions."""

import logging
from pathlib import Path

import click

from ..decompose.census import census_drift, component_census
from ..decompose.hyperfinite import hyperfinite_decompose
from ..generators.families import folner_sequence, generate
from ..generators.spec_parser import FamilySpec
from ..graphs.fileio import format_graph
from ..graphs.stats import neighborhood_distribution
from ..tester.sampling import sample_stats
from ..utils.output import emit, render_csv, render_json
from .common import (
    RunConfig,
    delta_option,
    family_option,
    format_option,
    input_option,
    load_graph,
    out_option,
    parse_folner_family,
    parse_sizes,
    rcap_option,
)

logger = logging.getLogger(__name__)


def register_graph_commands(cli: click.Group):
    """Register generate, stats and decompose."""

    @cli.command("generate")
    @click.option("--family", required=True, help="Family spec, e.g. cycle:5, grid2d:20x20, rrg:n=30,d=3,g=6")
    @out_option
    def generate_command(family: str, out: str | None):
        """Write a generated graph in the text format."""
        config = RunConfig.create(command="generate", family=family, out=out)
        spec = FamilySpec.parse(family)
        graph = generate(spec)
        emit(format_graph(graph), config.out)
        logger.info(f"Generated {spec.label}: {graph.n} vertices, {graph.num_edges} edges")

    @cli.command("stats")
    @input_option
    @family_option
    @click.option("--radius", type=int, default=1, show_default=True)
    @click.option("--samples", type=int, default=None, help="Sample this many roots instead of all vertices")
    @click.option("--seed", type=int, default=0, show_default=True)
    @click.option("--only-radius", is_flag=True,
                  help="Report only balls of radius exactly --radius (default: every radius s <= --radius)")
    @out_option
    @format_option("csv")
    def stats_command(input_path: Path | None, family: str | None, radius: int, samples: int | None,
                      seed: int, only_radius: bool, out: str | None, output_format: str):
        """Ball-class frequencies for every radius s <= --radius, one row per (s, class)."""
        config = RunConfig.create(
            command="stats", input=input_path, family=family, radius=radius,
            samples=samples, seeds=(seed,), out=out, format=output_format,
        )
        graph, _ = load_graph(config)
        if config.samples is None:
            distribution = neighborhood_distribution(graph, radius)
        else:
            distribution = sample_stats(graph, radius, config.samples, config.seed)
        radii = [radius] if only_radius else list(range(radius + 1))
        if config.format == "json":
            payload = distribution.to_dict()
            payload["stats"] = {str(s): payload["stats"].get(str(s), {}) for s in radii}
            emit(render_json(payload), config.out)
            return
        rows = [
            (s, code.hex(), float(freq))
            for s in radii
            for code, freq in sorted(distribution.at(s).items())
        ]
        emit(render_csv(["radius", "code", "frequency"], rows), config.out)

    @cli.command("decompose")
    @input_option
    @family_option
    @delta_option
    @rcap_option
    @click.option("--sizes", default=None, help="Comma-separated Følner sizes; reports census drift per step")
    @out_option
    @format_option("json")
    def decompose_command(input_path: Path | None, family: str | None, delta: float | None,
                          r_cap: int | None, sizes: str | None, out: str | None, output_format: str):
        """Hyperfinite decomposition with its component census."""
        if sizes:
            config = RunConfig.create(
                command="decompose-sequence", family=family, delta=delta, r_cap=r_cap,
                out=out, format=output_format,
            )
            config.require("family", "delta")
            _census_drift_report(config, parse_sizes(sizes))
            return
        config = RunConfig.create(
            command="decompose", input=input_path, family=family, delta=delta, r_cap=r_cap,
            out=out, format=output_format,
        )
        config.require("delta")
        graph, _ = load_graph(config)
        decomposition = hyperfinite_decompose(graph, config.delta, config.r_cap)
        census = component_census(decomposition)
        emit(render_json(decomposition.to_dict(census)), config.out)


def _census_drift_report(config: RunConfig, sizes: list[int]) -> None:
    assert config.family is not None and config.delta is not None
    elements = folner_sequence(parse_folner_family(config.family), sizes)
    rows = []
    previous = None
    for element in elements:
        decomposition = hyperfinite_decompose(element.graph, config.delta, config.r_cap)
        census = component_census(decomposition)
        drift = census_drift(previous, census) if previous is not None else None
        rows.append({
            "size": element.size,
            "n": element.graph.n,
            "boundary_ratio": element.boundary_ratio,
            "removed_edges": len(decomposition.removed_edges),
            "k_observed": decomposition.k_observed,
            "budget_exceeded": decomposition.budget_exceeded,
            "classes": len(census.vertices),
            "census_drift": drift,
        })
        previous = census
    if config.format == "json":
        emit(render_json(rows), config.out)
    else:
        header = list(rows[0])
        emit(render_csv(header, ([row[key] for key in header] for row in rows)), config.out)
