"""Environment configuration and logging setup."""

import logging
import os
import sys
from functools import lru_cache
from typing import Mapping

from pydantic import BaseModel, Field, field_validator

ENV_PREFIX = "MODULI_"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseModel):
    """Process-wide knobs, read once from MODULI_* environment variables."""
    cache_limit: int = Field(default=2_000_000, ge=0, description="Entries per memo table, 0 = unlimited")
    log_level: str = "WARNING"
    default_order: int = Field(default=12, ge=3, description="Default x-order of CohFT potentials")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return value

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "Settings":
        environ = os.environ if environ is None else environ
        values = {
            name: environ[ENV_PREFIX + name.upper()]
            for name in cls.model_fields
            if ENV_PREFIX + name.upper() in environ
        }
        return cls.model_validate(values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()


def reset_settings():
    """Forget the cached settings so the next call re-reads the environment."""
    get_settings.cache_clear()


def configure_logging(level: str | int | None = None):
    """Send library logs to stderr; stdout is reserved for results."""
    if level is None:
        level = get_settings().log_level
    root = logging.getLogger()
    if not any(getattr(h, "_moduli_handler", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._moduli_handler = True
        root.addHandler(handler)
    root.setLevel(level)
