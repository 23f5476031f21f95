"""Commands that estimate parameters and run the convergence experiments."""

import logging
from pathlib import Path

import click

from ..estimate.baker import approx_max_independent_set
from ..estimate.ids import ids_experiment
from ..estimate.parameters import ParameterSpec
from ..estimate.pipeline import estimate_parameter
from ..generators.families import folner_sequence
from ..generators.girth import girth, random_regular_girth
from ..graphs.base import Graph, InvalidParameter
from ..graphs.fileio import read_graph
from ..graphs.stats import neighborhood_distribution, stats_distance
from ..solvers.potential import PotentialSpec, sample_potential
from ..solvers.properties import dist_to_property
from ..solvers.spectral import StepFunction, laplacian_spectrum, spectral_cdf
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
    parse_seeds,
    parse_sizes,
    rcap_option,
)

logger = logging.getLogger(__name__)

_PARTITIONS = ("log_ind_partition", "log_match_partition")


def _emit_cdf(cdf: StepFunction, config: RunConfig, extra: dict | None = None) -> None:
    if config.format == "csv":
        emit(render_csv(["lambda", "cdf"], cdf.to_rows()), config.out)
    else:
        emit(render_json({**(extra or {}), "cdf": cdf.to_dict()}), config.out)


def _require_cubic(graph: Graph, label: str) -> None:
    offending = [v for v in range(graph.n) if graph.degree(v) != 3]
    if offending:
        raise InvalidParameter(
            f"{label} is not cubic: vertex {offending[0]} has degree {graph.degree(offending[0])}",
            {"graph": label, "vertex": offending[0]},
        )


def register_estimate_commands(cli: click.Group):
    """Register estimate, approx-mis, spectrum, ids and counterexample."""

    @cli.command("estimate")
    @input_option
    @family_option
    @click.option("--param", "parameter", required=True,
                  help="independence_ratio, matching_ratio, log_ind_partition[:λ], "
                       "log_match_partition[:λ], dist_to:<property>, spectral_cdf")
    @delta_option
    @rcap_option
    @click.option("--lambda", "lam", type=float, default=None, help="Activity λ of the log-partition functions")
    @click.option("--potential", default=None, help="Random potential for spectral_cdf, e.g. 0,1 or 0:0.3,1:0.7")
    @click.option("--seed", type=int, default=0, show_default=True)
    @out_option
    @format_option("json")
    def estimate_command(input_path: Path | None, family: str | None, parameter: str, delta: float | None,
                         r_cap: int | None, lam: float | None, potential: str | None, seed: int,
                         out: str | None, output_format: str):
        """Estimate a graph parameter by decompose, solve and aggregate."""
        config = RunConfig.create(
            command="estimate", input=input_path, family=family, delta=delta, r_cap=r_cap,
            lam=lam, seeds=(seed,), out=out, format=output_format,
        )
        config.require("delta")
        extra: dict = {"seed": config.seed}
        if config.lam is not None:
            extra["lam"] = config.lam
        if potential:
            extra["potential"] = PotentialSpec.parse(potential)
        spec = ParameterSpec.parse(parameter, **extra)
        graph, label = load_graph(config)
        estimate = estimate_parameter(graph, config.delta, config.r_cap, spec)
        if estimate.cdf is not None and config.format == "csv":
            _emit_cdf(estimate.cdf, config)
            return
        payload = {"graph": label, **estimate.to_dict()}
        if spec.kind in _PARTITIONS and spec.lam == 1.0:
            payload["entropy"] = estimate.value
        emit(render_json(payload), config.out)

    @cli.command("approx-mis")
    @input_option
    @family_option
    @delta_option
    @rcap_option
    @out_option
    def approx_mis_command(input_path: Path | None, family: str | None, delta: float | None,
                           r_cap: int | None, out: str | None):
        """Independent set within delta*n of the maximum."""
        config = RunConfig.create(
            command="approx-mis", input=input_path, family=family, delta=delta, r_cap=r_cap, out=out,
        )
        config.require("delta")
        graph, label = load_graph(config)
        result = approx_max_independent_set(graph, config.delta, config.r_cap)
        emit(render_json({"graph": label, **result.to_dict()}), config.out)

    @cli.command("spectrum")
    @input_option
    @family_option
    @click.option("--potential", default=None, help="Random potential, e.g. 0,1")
    @click.option("--seed", type=int, default=0, show_default=True)
    @delta_option
    @rcap_option
    @out_option
    @format_option("csv")
    def spectrum_command(input_path: Path | None, family: str | None, potential: str | None, seed: int,
                         delta: float | None, r_cap: int | None, out: str | None, output_format: str):
        """Normalized spectral distribution, exact or estimated with --delta."""
        config = RunConfig.create(
            command="spectrum", input=input_path, family=family, seeds=(seed,), delta=delta,
            r_cap=r_cap, out=out, format=output_format,
        )
        graph, label = load_graph(config)
        potential_spec = PotentialSpec.parse(potential) if potential else None
        if config.delta is not None:
            spec = ParameterSpec(kind="spectral_cdf", potential=potential_spec, seed=config.seed)
            estimate = estimate_parameter(graph, config.delta, config.r_cap, spec)
            assert estimate.cdf is not None
            _emit_cdf(estimate.cdf, config, {"graph": label, "error_bound": estimate.error_bound})
            return
        omega = sample_potential(potential_spec, graph.n, config.seed) if potential_spec else None
        eigs = laplacian_spectrum(graph, omega)
        _emit_cdf(spectral_cdf(eigs, graph.n), config, {"graph": label, "eigenvalues": list(eigs)})

    @cli.command("ids")
    @click.option("--family", required=True, help="Følner family, e.g. grid2d, cube3d, path")
    @click.option("--sizes", required=True, help="Comma-separated sizes, e.g. 16,32,64")
    @click.option("--potential", default="0,1", show_default=True)
    @delta_option
    @rcap_option
    @click.option("--seeds", default="0,1", show_default=True, help="Seeds, e.g. 0,1,2 or 0-4")
    @out_option
    @format_option("csv")
    def ids_command(family: str, sizes: str, potential: str, delta: float | None, r_cap: int | None,
                    seeds: str, out: str | None, output_format: str):
        """Cross-seed and consecutive sup distances of estimated IDS."""
        config = RunConfig.create(
            command="ids", family=family, delta=delta, r_cap=r_cap, seeds=parse_seeds(seeds),
            out=out, format=output_format,
        )
        config.require("delta", "seeds")
        elements = folner_sequence(parse_folner_family(family), parse_sizes(sizes))
        report = ids_experiment(
            [element.graph for element in elements],
            PotentialSpec.parse(potential),
            config.delta,
            config.seeds,
            config.r_cap,
        )
        if config.format == "csv":
            emit(report.to_csv(), config.out)
        else:
            emit(render_json([row.model_dump() for row in report.rows]), config.out)

    @cli.command("counterexample")
    @click.option("--n", "n", type=int, default=30, show_default=True, help="Vertices per cubic graph")
    @click.option("--girth", "target_girth", type=int, default=6, show_default=True)
    @click.option("--radius", type=int, default=1, show_default=True)
    @click.option("--seed", type=int, default=7, show_default=True)
    @click.option("--input", "inputs", multiple=True,
                  type=click.Path(exists=True, dir_okay=False, path_type=Path),
                  help="Two cubic graph files to compare instead of generating")
    @out_option
    def counterexample_command(n: int, target_girth: int, radius: int, seed: int,
                               inputs: tuple[Path, ...], out: str | None):
        """Equal local statistics, different distance to bipartiteness."""
        config = RunConfig.create(command="counterexample", radius=radius, seeds=(seed,), out=out)
        if inputs:
            if len(inputs) != 2:
                raise InvalidParameter(f"counterexample compares exactly two graphs, got {len(inputs)}")
            graphs = [(path.stem, read_graph(path)) for path in inputs]
        else:
            graphs = [
                ("bipartite", random_regular_girth(n, 3, target_girth, config.seed, bipartite=True)),
                ("non_bipartite", random_regular_girth(n, 3, target_girth, config.seed, bipartite=False)),
            ]
        for label, graph in graphs:
            _require_cubic(graph, label)

        girths = {label: girth(graph) for label, graph in graphs}
        safe_radius = (min(girths.values()) - 2) // 2
        if radius > safe_radius:
            logger.warning(f"Radius {radius} exceeds the tree-like radius {safe_radius}; balls may differ")

        (first_label, first), (second_label, second) = graphs
        distance = stats_distance(
            neighborhood_distribution(first, radius), neighborhood_distribution(second, radius)
        )
        report = {
            "radius": radius,
            "seed": config.seed,
            "girth": {label: (None if g == float("inf") else g) for label, g in girths.items()},
            "stats_distance": distance,
            "dist_to_bipartite": {
                label: dist_to_property(graph, "bipartite", cap=graph.n) for label, graph in graphs
            },
            "vertices": {first_label: first.n, second_label: second.n},
        }
        emit(render_json(report), config.out)
