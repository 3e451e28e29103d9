"""Settings module for Jammer Localization application."""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Using pydantic-settings for easy environment variable loading


class AppSettings(BaseSettings):
    """Settings for the Jammer Localization application."""

    # Application settings
    log_level: str = "INFO"
    log_file: Optional[str] = None  # Also write records to this file

    # Monte Carlo execution
    threads: int = Field(default=1, ge=1)  # Number of trial workers
    parallel_backend: str = "loky"  # joblib backend: "loky", "threading" or "multiprocessing"

    # Output settings
    output_dir: str = "results"

    model_config = SettingsConfigDict(
        env_prefix="JAMLOC_",
        env_file=".env",  # Load .env file if exists
        env_file_encoding="utf-8",
        extra="ignore",  # Ignore extra fields from env
    )
