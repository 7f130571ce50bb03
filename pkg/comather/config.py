# comather/config.py
import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

# Load environment variables from the repository-level .env, if any
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
env_path = os.path.join(BASE_DIR, ".env")
load_dotenv(dotenv_path=env_path, override=False)

LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


class Settings(BaseModel):
    cache_dir: Optional[Path] = None
    max_interval: int = Field(default=250_000, gt=0)
    log_level: str = "INFO"
    jobs: int = Field(default=1, gt=0)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    cache_dir = os.getenv("COMATHER_CACHE_DIR")
    return Settings(
        cache_dir=Path(cache_dir) if cache_dir else None,
        max_interval=int(os.getenv("COMATHER_MAX_INTERVAL", "250000")),
        log_level=os.getenv("COMATHER_LOG_LEVEL", os.getenv("LOG_LEVEL", "INFO")),
        jobs=int(os.getenv("COMATHER_JOBS", "1")),
    )


def configure_logging(level: Optional[str] = None) -> None:
    level = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
