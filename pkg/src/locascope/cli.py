"""Command-line entry point: one click group with every command registered on it."""

import json
import logging
import os
from pathlib import Path

import click
from dotenv import load_dotenv

from . import __version__
from .commands import register_estimate_commands, register_graph_commands, register_tester_commands
from .config.settings import cli_config, reload_config
from .graphs.base import LocascopeError

logger = logging.getLogger(__name__)


def setup_logging(level: str, quiet: bool = False):
    """Set up logging configuration."""
    if quiet:
        logging.disable(logging.CRITICAL)
        return

    log_level = getattr(logging, level.upper(), logging.INFO)
    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )


class LocascopeGroup(click.Group):
    """Reports library errors as JSON on stderr with exit code 1."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except LocascopeError as e:
            logger.debug(f"{type(e).__name__}: {e.message}")
            if cli_config.error_format == "text":
                click.echo(f"Error: {e.message}", err=True)
            else:
                click.echo(json.dumps(e.to_dict()), err=True)
            ctx.exit(1)


@click.group(cls=LocascopeGroup)
@click.option(
    "--env-file",
    type=click.Path(exists=True, path_type=Path),
    help="Path to environment file (.env)",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Set logging level (default: LOG_LEVEL or INFO)",
)
@click.option(
    "--quiet", "-q",
    is_flag=True,
    help="Suppress all logging output",
)
@click.version_option(version=__version__, prog_name="locascope")
def main(env_file: Path | None = None, log_level: str | None = None, quiet: bool = False):
    """
    Estimate parameters of large bounded-degree graphs from local statistics.

    Graphs come from a file (--input, 'n m d' header then one edge per line)
    or from a generated family (--family). Single results are written as
    JSON, sequences as CSV.
    """
    if env_file and env_file.exists():
        load_dotenv(env_file)
    elif os.path.exists(".env"):
        load_dotenv()
    reload_config()
    setup_logging(log_level or cli_config.log_level, quiet)


register_graph_commands(main)
register_estimate_commands(main)
register_tester_commands(main)
