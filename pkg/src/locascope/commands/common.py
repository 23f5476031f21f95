"""Options, run configuration and graph loading shared by every command."""

import logging
from pathlib import Path
from typing import Literal

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..generators.families import generate
from ..generators.spec_parser import FamilySpec
from ..graphs.base import Graph, InvalidParameter
from ..graphs.fileio import read_graph

logger = logging.getLogger(__name__)

_GRAPH_COMMANDS = {"stats", "decompose", "estimate", "spectrum", "test", "approx-mis"}


class RunConfig(BaseModel):
    """Validated arguments of one command invocation."""

    model_config = ConfigDict(frozen=True)

    command: str
    input: Path | None = None
    family: str | None = None
    radius: int | None = Field(default=None, ge=0)
    samples: int | None = Field(default=None, ge=1)
    delta: float | None = Field(default=None, gt=0, le=1)
    r_cap: int | None = Field(default=None, ge=1)
    lam: float | None = Field(default=None, gt=0)
    seeds: tuple[int, ...] = ()
    db: Path | None = None
    out: str | None = None
    format: Literal["json", "csv"] = "json"

    @model_validator(mode="after")
    def _check_source(self) -> "RunConfig":
        if self.command in _GRAPH_COMMANDS and (self.input is None) == (self.family is None):
            raise ValueError("give exactly one of --input and --family")
        if any(seed < 0 for seed in self.seeds):
            raise ValueError("seeds must be non-negative")
        return self

    @classmethod
    def create(cls, **values) -> "RunConfig":
        try:
            return cls(**values)
        except ValidationError as e:
            message = "; ".join(
                f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
            )
            raise InvalidParameter(f"Invalid arguments for {values.get('command')}: {message}") from e

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) in (None, ())]
        if missing:
            raise InvalidParameter(
                f"{self.command} needs --{', --'.join(name.replace('_', '-') for name in missing)}",
                {"missing": missing},
            )

    @property
    def seed(self) -> int:
        return self.seeds[0] if self.seeds else 0


def load_graph(config: RunConfig) -> tuple[Graph, str]:
    """The command's graph and a label for it."""
    if config.input is not None:
        logger.info(f"Reading graph from {config.input}")
        return read_graph(config.input), config.input.stem
    assert config.family is not None
    spec = FamilySpec.parse(config.family)
    return generate(spec), spec.label


def parse_seeds(text: str | None) -> tuple[int, ...]:
    """``"1,2,3"`` or ``"0-4"``."""
    if not text:
        return ()
    try:
        if "-" in text and "," not in text:
            low, high = (int(part) for part in text.split("-", 1))
            return tuple(range(low, high + 1))
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise InvalidParameter(f"Cannot read seeds '{text}'", {"seeds": text}) from e


def parse_folner_family(text: str) -> FamilySpec:
    """A family for :func:`folner_sequence`; the size in ``text`` is optional and ignored."""
    return FamilySpec.parse(text if ":" in text else f"{text}:3")


def parse_sizes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise InvalidParameter(f"Cannot read sizes '{text}'", {"sizes": text}) from e


input_option = click.option(
    "--input", "input_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Graph file in the 'n m d' text format",
)
family_option = click.option(
    "--family",
    help="Generated family, e.g. grid2d:20x20, cube3d:3, rrg:n=30,d=3,g=6,seed=7",
)
out_option = click.option("--out", default=None, help="Output path (default: stdout)")
delta_option = click.option("--delta", type=float, default=None, help="Boundary budget per vertex, in (0, 1]")
rcap_option = click.option("--rcap", "r_cap", type=int, default=None, help="Radius cap of the decomposer")


def format_option(default: str):
    return click.option(
        "--format", "output_format",
        type=click.Choice(["json", "csv"], case_sensitive=False),
        default=default,
        show_default=True,
        help="Output format",
    )
