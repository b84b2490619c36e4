"""
Runtime configuration.

Settings come from (lowest to highest precedence) the model defaults, a YAML
file passed with ``--config`` and environment variables (optionally from a
``.env`` file).
"""

import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

OUTPUT_DIR_ENV = "CONTINUANT_LAB_OUTPUT_DIR"
CACHE_DIR_ENV = "CONTINUANT_LAB_CACHE_DIR"


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class LoggingSettings(_Section):
    level: str = "INFO"
    file: str = "logs/continuant-lab.log"
    rotation: str = "1 MB"


class OutputSettings(_Section):
    directory: str = "output"
    format: str = "table"
    colors: bool = True


class SearchSettings(_Section):
    unit_cache_dir: str = "cache/units"
    unit_cache_limit: int = 20_000_000
    stabilizer_limit: int = 100_000
    exhaustive_limit: int = 1 << 20
    default_samples: int = 1_000_000
    bone_shard_bits: int = 10


class ContinuantSettings(_Section):
    symbolic_max_k: int = 10
    samples: int = 100_000
    exhaustive_limit: int = 1 << 24


class GroupSettings(_Section):
    ord_limit: int = 10_000_000
    simplicity_limit: int = 1_000_000


class Settings(_Section):
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
    search: SearchSettings = Field(default_factory=SearchSettings)
    continuants: ContinuantSettings = Field(default_factory=ContinuantSettings)
    groups: GroupSettings = Field(default_factory=GroupSettings)


_settings: Optional[Settings] = None


def load_settings(path: Optional[str] = None) -> Settings:
    """
    Load settings from an optional YAML file and the environment.

    Args:
        path: YAML file whose top-level keys mirror ``Settings``

    Returns:
        Settings: validated settings, also installed as the process default
    """
    global _settings
    load_dotenv()

    data = {}
    if path:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
        logger.debug(f"Loaded configuration from {path}")

    settings = Settings.model_validate(data)

    if os.environ.get(OUTPUT_DIR_ENV):
        settings.output.directory = os.environ[OUTPUT_DIR_ENV]
    if os.environ.get(CACHE_DIR_ENV):
        settings.search.unit_cache_dir = os.environ[CACHE_DIR_ENV]

    _settings = settings
    return settings


def get_settings() -> Settings:
    """Return the process-wide settings, loading defaults on first use"""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def cache_path(*parts: str) -> Path:
    path = Path(get_settings().search.unit_cache_dir).joinpath(*parts)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path
