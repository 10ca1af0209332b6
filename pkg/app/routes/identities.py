"""Identity catalog listing - thin controller over RegistryService"""
from typing import Optional

from fastapi import APIRouter

from app.application import RegistryService
from app.core.logging import logger
from app.infrastructure.formatters import record_summary

router = APIRouter()

registry_service = RegistryService()


@router.get("/")
def list_identities(filter: Optional[str] = None, tag: Optional[str] = None):
    """Catalog entries matching a group name, id prefix or tag."""
    records = registry_service.list_identities(filter, tag)
    logger.info(f"Identity listing: filter={filter}, tag={tag}, {len(records)} records")
    return [record_summary(record) for record in records]
