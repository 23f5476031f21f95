"""Click command groups of the locascope CLI."""

from .estimate_commands import register_estimate_commands
from .graph_commands import register_graph_commands
from .tester_commands import register_tester_commands

__all__ = ["register_graph_commands", "register_estimate_commands", "register_tester_commands"]
