"""Local statistics, hyperfinite decompositions and parameter estimation for bounded-degree graphs."""

__version__ = "0.1.0"

from .cli import main, setup_logging  # noqa: E402

__all__ = ["main", "setup_logging", "__version__"]
