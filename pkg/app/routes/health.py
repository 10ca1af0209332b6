"""Health check endpoint for API status monitoring"""
from fastapi import APIRouter

from app.application import RegistryService
from app.core.config import get_settings
from app.core.logging import logger

router = APIRouter()

registry_service = RegistryService()


@router.get("/")
def health_check():
    """
    Health check reporting:
    - number of registered identities
    - worker processes available to parallel folds
    """
    identities = len(registry_service)
    threads = get_settings().threads
    logger.info(f"Health check: identities={identities}, threads={threads}")
    return {"status": "ok", "identities": identities, "threads": threads}
