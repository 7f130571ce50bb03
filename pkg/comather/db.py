import logging
from typing import Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine

from .config import get_settings

logger = logging.getLogger(__name__)

CACHE_FILENAME = "kl_cache.sqlite"


def get_engine() -> Optional[Engine]:
    """Engine for the on-disk KL cache, or None when COMATHER_CACHE_DIR is unset."""
    cache_dir = get_settings().cache_dir
    if cache_dir is None:
        return None
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / CACHE_FILENAME
    logger.debug("KL cache at %s", path)
    return create_engine(f"sqlite:///{path}", future=True)
