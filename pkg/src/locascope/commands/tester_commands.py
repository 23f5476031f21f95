"""Commands that build tester databases and run the tester."""

import logging
from pathlib import Path

import click

from ..estimate.parameters import ParameterSpec
from ..generators.families import generate
from ..generators.spec_parser import FamilySpec
from ..graphs.base import InvalidParameter
from ..graphs.fileio import read_graph
from ..tester.database import TesterDatabase, build_database, run_tester
from ..tester.sampling import CountingGraph, sample_stats
from ..utils.output import emit, render_json
from .common import RunConfig, delta_option, family_option, input_option, load_graph, out_option, rcap_option

logger = logging.getLogger(__name__)


def register_tester_commands(cli: click.Group):
    """Register build-db and test."""

    @cli.command("build-db")
    @click.option("--family", "families", multiple=True, help="Reference family; repeat for several graphs")
    @click.option("--input", "inputs", multiple=True,
                  type=click.Path(exists=True, dir_okay=False, path_type=Path),
                  help="Reference graph file; repeat for several graphs")
    @click.option("--radius", type=int, default=2, show_default=True)
    @click.option("--param", "parameter", default="independence_ratio", show_default=True)
    @click.option("--lambda", "lam", type=float, default=None)
    @click.option("--match-delta", type=float, default=0.1, show_default=True, help="Match tolerance")
    @delta_option
    @rcap_option
    @click.option("--db", "db_path", required=True, type=click.Path(dir_okay=False, path_type=Path))
    def build_db_command(families: tuple[str, ...], inputs: tuple[Path, ...], radius: int, parameter: str,
                         lam: float | None, match_delta: float, delta: float | None, r_cap: int | None,
                         db_path: Path):
        """Exact statistics and parameter values of reference graphs."""
        config = RunConfig.create(
            command="build-db", radius=radius, delta=delta, r_cap=r_cap, lam=lam, db=db_path,
        )
        config.require("delta")
        if not families and not inputs:
            raise InvalidParameter("build-db needs at least one --family or --input")
        specs = [FamilySpec.parse(text) for text in families]
        references = [(family.label, generate(family)) for family in specs]
        references += [(path.stem, read_graph(path)) for path in inputs]
        spec = ParameterSpec.parse(parameter, **({"lam": config.lam} if config.lam is not None else {}))
        db = build_database(references, radius, spec, match_delta, config.delta, config.r_cap)
        db.save(db_path)
        click.echo(f"Saved {len(db.entries)} entries to {db_path}")

    @cli.command("test")
    @input_option
    @family_option
    @click.option("--db", "db_path", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
    @click.option("--samples", type=int, default=1000, show_default=True)
    @click.option("--seed", type=int, default=0, show_default=True)
    @out_option
    def test_command(input_path: Path | None, family: str | None, db_path: Path, samples: int, seed: int,
                     out: str | None):
        """Sample ball statistics and answer with the nearest reference value."""
        config = RunConfig.create(
            command="test", input=input_path, family=family, db=db_path, samples=samples,
            seeds=(seed,), out=out,
        )
        db = TesterDatabase.load(db_path)
        graph, label = load_graph(config)
        counted = CountingGraph(graph)
        sample = sample_stats(counted, db.radius, samples, config.seed)
        output = run_tester(sample, db)
        logger.info(f"Tester matched '{output.label}' for {label} at distance {output.distance:.4g}")
        emit(
            render_json({"graph": label, **output.model_dump(), "queries": counted.queries}),
            config.out,
        )
