"""Routes package for the Mahonian verification API."""

from .health import router as health_router
from .identities import router as identities_router
from .stats import router as stats_router
from .verify import router as verify_router

__all__ = ["health_router", "identities_router", "stats_router", "verify_router"]
