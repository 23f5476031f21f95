"""Configuration for locascope."""

from .settings import CliConfig, LocascopeConfig, cli_config, locascope_config, reload_config

__all__ = ["LocascopeConfig", "CliConfig", "locascope_config", "cli_config", "reload_config"]
