"""Application settings and configuration."""

import logging
from pathlib import Path

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings

logger = logging.getLogger(__name__)


class EnumerationConfig(BaseModel):
    """Coloring enumeration configuration."""

    chunk_size: int = Field(
        default=4096, description="Initial states handed to a worker per task"
    )
    parallel_threshold: int = Field(
        default=200_000,
        description="State count below which enumeration stays in-process",
    )
    show_progress: bool = Field(default=True, description="Show tqdm progress bars")


class ComplexConfig(BaseModel):
    """Cochain complex construction configuration."""

    max_tuple_count: int = Field(
        default=8**7, description="Largest number of tuples a boundary matrix may index"
    )
    verify_complex: bool = Field(
        default=False, description="Check d∘d = 0 whenever a complex is assembled"
    )


class OutputConfig(BaseModel):
    """JSON output configuration."""

    json_indent: int = Field(default=2, description="Indentation of JSON documents")
    sort_keys: bool = Field(default=True, description="Sort keys in JSON documents")


class Settings(BaseSettings):
    """Application settings."""

    # Basic settings
    debug: bool = Field(default=False, description="Enable debug mode")
    verbose: bool = Field(default=False, description="Enable verbose output")
    state_budget: int = Field(
        default=10**8, description="Largest coloring state space enumerated"
    )
    workers: int | None = Field(
        default=None, description="Enumeration workers (None: available parallelism)"
    )

    # Configuration sections
    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig)
    complex: ComplexConfig = Field(default_factory=ComplexConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    class Config:
        env_prefix = "HEAPKNOT_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False
        env_nested_delimiter = "__"

    @classmethod
    def from_yaml(cls, path: Path) -> "Settings":
        """Build settings from a YAML mapping.

        Values in the file take precedence over environment variables.

        Args:
            path: YAML file with the same section names as the model

        Returns:
            Settings instance
        """
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        logger.debug(f"Loaded settings file {path} with keys {sorted(data)}")
        return cls(**data)


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def set_settings(settings: Settings) -> None:
    """Replace the global settings instance."""
    global _settings
    _settings = settings


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads the environment."""
    global _settings
    _settings = None
