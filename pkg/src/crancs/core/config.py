"""Configuration management using pydantic-settings."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings loaded from environment variables.

    Only runtime concerns live here. Experiment parameters come from the
    experiment config file, never from the environment.
    """

    model_config = SettingsConfigDict(
        env_prefix="CRANCS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    debug: bool = False

    # Output
    output_dir: str = Field(default="./results", description="Directory for result files")

    # Worker pool
    max_workers: int = Field(default=1, ge=1, description="Processes used for Monte Carlo trials")

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    log_format: Literal["json", "console"] = "console"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
