"""
Runtime settings, read from the environment (and an optional .env file).
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

load_dotenv()

REPO_ROOT = Path(__file__).resolve().parent.parent


class Settings(BaseModel):
    """Engine-wide knobs. Every field has a working default."""

    model_config = ConfigDict(frozen=True)

    window_cap: int = Field(default=5000, ge=1)
    max_n: Optional[int] = Field(default=None, ge=0, le=8)
    trials: Optional[int] = Field(default=None, ge=0)
    seed: int = 0
    debug_checks: bool = False
    cache_dir: Path = REPO_ROOT / "Data" / "cache"
    results_dir: Path = REPO_ROOT / "Data" / "results"
    log_level: str = "INFO"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {value}")
        return value

    @classmethod
    def from_env(cls) -> "Settings":
        raw = {
            "window_cap": os.getenv("SEMIORDER_WINDOW_CAP"),
            "max_n": os.getenv("SEMIORDER_MAX_N"),
            "trials": os.getenv("SEMIORDER_TRIALS"),
            "seed": os.getenv("SEMIORDER_SEED"),
            "debug_checks": os.getenv("SEMIORDER_DEBUG"),
            "cache_dir": os.getenv("SEMIORDER_CACHE_DIR"),
            "results_dir": os.getenv("SEMIORDER_RESULTS_DIR"),
            "log_level": os.getenv("SEMIORDER_LOG_LEVEL"),
        }
        return cls(**{key: value for key, value in raw.items() if value is not None})

    def with_overrides(self, **overrides) -> "Settings":
        """Copy with CLI flags applied; None means 'not given'."""
        given = {key: value for key, value in overrides.items() if value is not None}
        return self.model_validate({**self.model_dump(), **given}) if given else self


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
