"""Integrated density of states experiments over Følner sequences."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, ConfigDict

from ..graphs.base import Graph, InvalidParameter
from ..solvers.potential import PotentialSpec
from ..solvers.spectral import StepFunction, sup_distance
from ..utils.output import render_csv
from .parameters import ParameterSpec, SolverCaps
from .pipeline import EstimationWorkflow

logger = logging.getLogger(__name__)


class ConvergenceRow(BaseModel):
    """One comparison in a convergence report.

    ``consecutive`` rows compare graph ``index`` with ``index + 1`` under the
    same seed; ``cross_seed`` rows compare two seeds on graph ``index``.
    """

    model_config = ConfigDict(frozen=True)

    comparison: Literal["consecutive", "cross_seed"]
    index: int
    n: int
    other_n: int
    seed: int
    other_seed: int
    sup_distance: float

    @staticmethod
    def header() -> list[str]:
        return list(ConvergenceRow.model_fields)

    def values(self) -> list:
        return [getattr(self, name) for name in self.header()]


@dataclass(frozen=True)
class ConvergenceReport:
    potential: PotentialSpec
    delta: float
    sizes: tuple[int, ...]
    seeds: tuple[int, ...]
    cdfs: dict[tuple[int, int], StepFunction]
    rows: tuple[ConvergenceRow, ...]

    def cross_seed(self, index: int) -> list[float]:
        return [
            row.sup_distance
            for row in self.rows
            if row.comparison == "cross_seed" and row.index == index
        ]

    def consecutive(self, seed: int) -> list[float]:
        return [
            row.sup_distance
            for row in self.rows
            if row.comparison == "consecutive" and row.seed == seed
        ]

    def to_csv(self) -> str:
        return render_csv(ConvergenceRow.header(), (row.values() for row in self.rows))


def ids_experiment(
    graphs: Sequence[Graph],
    potential: PotentialSpec,
    delta: float,
    seeds: Sequence[int],
    r_cap: int | None = None,
    caps: SolverCaps | None = None,
) -> ConvergenceReport:
    """Estimated Schrödinger CDFs for every ``(graph, seed)`` and their sup distances."""
    if not graphs:
        raise InvalidParameter("ids_experiment needs at least one graph")
    if not seeds:
        raise InvalidParameter("ids_experiment needs at least one seed")

    workflow = EstimationWorkflow(delta, r_cap, caps)
    cdfs: dict[tuple[int, int], StepFunction] = {}
    for index, graph in enumerate(graphs):
        for seed in seeds:
            spec = ParameterSpec(kind="spectral_cdf", potential=potential, seed=seed)
            estimate = workflow.run(graph, spec)
            assert estimate.cdf is not None
            cdfs[index, seed] = estimate.cdf
        logger.info(f"IDS estimated on graph {index} ({graph.n} vertices) for {len(seeds)} seeds")

    rows: list[ConvergenceRow] = []
    for index in range(len(graphs) - 1):
        for seed in seeds:
            rows.append(
                ConvergenceRow(
                    comparison="consecutive",
                    index=index,
                    n=graphs[index].n,
                    other_n=graphs[index + 1].n,
                    seed=seed,
                    other_seed=seed,
                    sup_distance=sup_distance(cdfs[index, seed], cdfs[index + 1, seed]),
                )
            )
    for index, graph in enumerate(graphs):
        for seed, other in zip(seeds, seeds[1:]):
            rows.append(
                ConvergenceRow(
                    comparison="cross_seed",
                    index=index,
                    n=graph.n,
                    other_n=graph.n,
                    seed=seed,
                    other_seed=other,
                    sup_distance=sup_distance(cdfs[index, seed], cdfs[index, other]),
                )
            )
    return ConvergenceReport(
        potential=potential,
        delta=delta,
        sizes=tuple(g.n for g in graphs),
        seeds=tuple(seeds),
        cdfs=cdfs,
        rows=tuple(rows),
    )
