"""Identity catalog"""
from app.infrastructure.registry.identity_catalog import CATALOG, CATALOG_BY_ID

__all__ = ["CATALOG", "CATALOG_BY_ID"]
