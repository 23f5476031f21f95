"""Configuration settings for locascope."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LocascopeConfig(BaseSettings):
    """Limits and defaults for the estimation kernels."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",  # Ignore extra environment variables
        populate_by_name=True,
    )

    threads: int = Field(default=1, ge=1, alias="LOCASCOPE_THREADS")
    component_cap: int = Field(default=64, ge=1, alias="LOCASCOPE_COMPONENT_CAP")
    coloring_cap: int = Field(default=20, ge=1, alias="LOCASCOPE_COLORING_CAP")
    spectral_cap: int = Field(default=256, ge=1, alias="LOCASCOPE_SPECTRAL_CAP")
    r_cap: int = Field(default=40, ge=1, alias="LOCASCOPE_R_CAP")
    girth_retries: int = Field(default=10_000, ge=1, alias="LOCASCOPE_GIRTH_RETRIES")
    canon_cache_size: int = Field(default=65_536, ge=0, alias="LOCASCOPE_CANON_CACHE")


class CliConfig(BaseSettings):
    """Configuration for the command-line front end."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        populate_by_name=True,
    )

    log_level: str = Field(default="INFO", alias="LOG_LEVEL")
    error_format: str = Field(default="json", alias="LOCASCOPE_ERROR_FORMAT")


# Global configuration instances
locascope_config = LocascopeConfig()
cli_config = CliConfig()


def reload_config() -> None:
    """Re-read the environment into the global instances, e.g. after loading a .env file."""
    for config in (locascope_config, cli_config):
        fresh = type(config)()
        for name in type(config).model_fields:
            object.__setattr__(config, name, getattr(fresh, name))
