"""Runtime settings read from the environment (and an optional .env file)"""
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv

from app.core.exceptions import UsageError

load_dotenv()


@dataclass(frozen=True)
class Settings:
    """Process-wide settings; build with get_settings()."""
    threads: int
    log_level: str
    log_file: Optional[str]
    parallel_threshold: int
    cache_size: int
    api_max_elements: int


def _int_env(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise UsageError(f"{name} must be >= {minimum}, got {value}")
    return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Read settings once per process.

    Keys:
        MAHON_THREADS       cap on parallel fold partitions (default: cpu count)
        MAHON_LOG_LEVEL     loguru level for the stderr sink (default: INFO)
        MAHON_LOG_FILE      optional path of a rotating DEBUG log file
        MAHON_PARALLEL_MIN  smallest domain size folded in parallel (default: 50000)
        MAHON_CACHE_SIZE    histograms kept per VerificationService, least recently used evicted (default: 256)
        MAHON_API_MAX_ELEMENTS  largest domain an HTTP request may fold (default: 3000000)
    """
    return Settings(
        threads=_int_env("MAHON_THREADS", os.cpu_count() or 1),
        log_level=os.getenv("MAHON_LOG_LEVEL", "INFO").upper(),
        log_file=os.getenv("MAHON_LOG_FILE") or None,
        parallel_threshold=_int_env("MAHON_PARALLEL_MIN", 50000),
        cache_size=_int_env("MAHON_CACHE_SIZE", 256),
        api_max_elements=_int_env("MAHON_API_MAX_ELEMENTS", 3_000_000),
    )
