"""Reference databases and the nearest-entry tester."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..estimate.parameters import ParameterSpec, SolverCaps
from ..estimate.pipeline import EstimationWorkflow
from ..graphs.base import Graph, InvalidParameter, LocascopeError
from ..graphs.stats import NeighborhoodDistribution, RadiusMismatch, neighborhood_distribution, stats_distance
from ..utils.output import render_json, write_text_atomic

logger = logging.getLogger(__name__)


class DuplicateLabel(LocascopeError, ValueError):
    """Raised when two database entries share a label."""

    def __init__(self, label: str):
        super().__init__(f"Duplicate database label '{label}'", {"label": label})
        self.label = label


class DatabaseFormatError(LocascopeError, ValueError):
    """Raised when a database file does not have the expected shape."""


class NoMatchWithinTolerance(LocascopeError):
    """No reference graph is within the match tolerance of the sample."""

    def __init__(self, label: str, distance: float, tolerance: float):
        super().__init__(
            f"Nearest entry '{label}' is at distance {distance:.6g} > tolerance {tolerance:g}",
            {"label": label, "distance": distance, "tolerance": tolerance},
        )
        self.label = label
        self.distance = distance


class TestOutput(BaseModel):
    """Answer of one tester run."""

    model_config = ConfigDict(frozen=True)

    value: float
    label: str
    distance: float


class EntryRecord(BaseModel):
    """One entry of a database file."""

    label: str
    stats: dict[str, dict[str, float]]
    zeta: float


class DatabaseFile(BaseModel):
    """On-disk layout of a tester database."""

    radius: int = Field(ge=0)
    param: ParameterSpec
    delta: float = Field(gt=0)
    degree_bound: int = Field(default=1, ge=1)
    entries: list[EntryRecord] = Field(min_length=1)


@dataclass(frozen=True)
class DatabaseEntry:
    label: str
    stats: NeighborhoodDistribution
    zeta: float


@dataclass(frozen=True)
class TesterDatabase:
    """Reference statistics and parameter values at one radius."""

    radius: int
    parameter: ParameterSpec
    delta: float
    entries: tuple[DatabaseEntry, ...]
    degree_bound: int = 1

    def __post_init__(self):
        if self.delta <= 0:
            raise InvalidParameter(f"Match tolerance must be positive, got {self.delta}")
        if not self.entries:
            raise InvalidParameter("A tester database needs at least one entry")
        seen: set[str] = set()
        for entry in self.entries:
            if entry.label in seen:
                raise DuplicateLabel(entry.label)
            seen.add(entry.label)
            if entry.stats.radius != self.radius:
                raise RadiusMismatch(
                    f"Entry '{entry.label}' has radius {entry.stats.radius}, database has {self.radius}",
                    {"label": entry.label},
                )

    def labels(self) -> list[str]:
        return [entry.label for entry in self.entries]

    def to_dict(self) -> dict[str, Any]:
        return {
            "radius": self.radius,
            "param": self.parameter.model_dump(mode="json"),
            "delta": self.delta,
            "degree_bound": self.degree_bound,
            "entries": [
                {"label": e.label, "stats": e.stats.to_dict()["stats"], "zeta": e.zeta}
                for e in self.entries
            ],
        }

    @classmethod
    def from_record(cls, record: "DatabaseFile") -> "TesterDatabase":
        try:
            entries = tuple(
                DatabaseEntry(
                    label=item.label,
                    stats=NeighborhoodDistribution.from_dict(
                        {"radius": record.radius, "stats": item.stats}, record.degree_bound
                    ),
                    zeta=item.zeta,
                )
                for item in record.entries
            )
        except ValueError as e:
            raise DatabaseFormatError(f"Malformed tester database: {e}") from e
        return cls(
            radius=record.radius,
            parameter=record.param,
            delta=record.delta,
            entries=entries,
            degree_bound=record.degree_bound,
        )

    def save(self, path: str | Path) -> None:
        write_text_atomic(path, render_json(self.to_dict()))
        logger.info(f"Saved tester database with {len(self.entries)} entries to {path}")

    @classmethod
    def load(cls, path: str | Path) -> "TesterDatabase":
        try:
            record = DatabaseFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
        except ValidationError as e:
            problems = "; ".join(
                f"{'.'.join(str(part) for part in err['loc']) or '<root>'}: {err['msg']}"
                for err in e.errors()
            )
            raise DatabaseFormatError(f"{path}: malformed tester database ({problems})", {"path": str(path)}) from e
        return cls.from_record(record)


def build_database(
    graphs: Sequence[tuple[str, Graph]],
    r: int,
    spec: ParameterSpec,
    delta_match: float,
    delta_solve: float,
    r_cap: int | None = None,
    caps: SolverCaps | None = None,
) -> TesterDatabase:
    """Exact statistics and estimated ``ζ`` for every reference graph."""
    if not graphs:
        raise InvalidParameter("build_database needs at least one graph")
    if not spec.is_scalar:
        raise InvalidParameter(f"The tester needs a scalar parameter, got {spec.label}")
    labels = [label for label, _ in graphs]
    for label in labels:
        if labels.count(label) > 1:
            raise DuplicateLabel(label)

    workflow = EstimationWorkflow(delta_solve, r_cap, caps)
    entries = []
    for label, graph in graphs:
        stats = neighborhood_distribution(graph, r)
        estimate = workflow.run(graph, spec)
        assert estimate.value is not None
        entries.append(DatabaseEntry(label, stats, estimate.value))
        logger.info(f"Database entry '{label}': {spec.label} = {estimate.value:.6g}")
    return TesterDatabase(
        radius=r,
        parameter=spec,
        delta=delta_match,
        entries=tuple(entries),
        degree_bound=max(graph.degree_bound for _, graph in graphs),
    )


def nearest_entry(sample: NeighborhoodDistribution, db: TesterDatabase) -> tuple[DatabaseEntry, float]:
    """Closest entry by statistics distance; ties go to the smaller label."""
    if sample.radius != db.radius:
        raise RadiusMismatch(
            f"Sample radius {sample.radius} differs from database radius {db.radius}",
            {"sample": sample.radius, "database": db.radius},
        )
    scored = [(stats_distance(sample, entry.stats), entry.label, entry) for entry in db.entries]
    distance, _, entry = min(scored, key=lambda item: (item[0], item[1]))
    return entry, distance


def run_tester(sample: NeighborhoodDistribution, db: TesterDatabase) -> TestOutput:
    """``ζ`` of the nearest entry, provided it lies within the match tolerance."""
    entry, distance = nearest_entry(sample, db)
    if distance > db.delta:
        raise NoMatchWithinTolerance(entry.label, distance, db.delta)
    logger.debug(f"Matched '{entry.label}' at distance {distance:.6g}")
    return TestOutput(value=entry.zeta, label=entry.label, distance=distance)
