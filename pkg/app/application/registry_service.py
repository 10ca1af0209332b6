"""
Registry Service - Facade Pattern Implementation

Design Pattern: Facade
- Provides a simplified interface to the identity catalog
- Orchestrates: catalog lookup, filtering, closed-form expansion

SOLID Principles:
- SRP: Only handles identity lookup
- DIP: Receives the record list through its constructor
"""
from typing import List, Optional, Sequence

from app.core.exceptions import UnknownIdentityError
from app.core.logging import logger
from app.domain.identities import IdentityRecord
from app.domain.polynomials import Poly2
from app.infrastructure.registry import CATALOG


class RegistryService:
    """
    Facade over the identity catalog.

    Filters:
        None / "all"    every record
        "S", "B", ...   records of that group (G and G5 are distinct groups)
        "B.len"         records whose id starts with the prefix
    """

    def __init__(self, records: Optional[Sequence[IdentityRecord]] = None):
        """
        Initialize with the catalog (Dependency Injection).

        Args:
            records: Identity records (defaults to the built-in catalog)
        """
        self._records: List[IdentityRecord] = list(records if records is not None else CATALOG)
        self._by_id = {record.id: record for record in self._records}
        logger.debug(f"RegistryService initialized with {len(self._records)} identities")

    def __len__(self) -> int:
        return len(self._records)

    def get(self, identity_id: str) -> IdentityRecord:
        record = self._by_id.get(identity_id)
        if record is None:
            raise UnknownIdentityError(identity_id)
        return record

    def list_identities(self, filter: Optional[str] = None, tag: Optional[str] = None) -> List[IdentityRecord]:
        """Records matching the filter and tag, in catalog order."""
        selected = [r for r in self._records if self._matches(r, filter)]
        if tag:
            selected = [r for r in selected if tag in r.tags]
        return selected

    @staticmethod
    def _matches(record: IdentityRecord, filter: Optional[str]) -> bool:
        if not filter or filter.lower() == "all":
            return True
        if record.group.lower() == filter.lower():
            return True
        return record.id == filter or record.id.startswith(filter + ".")

    def rhs_closed_form(self, identity_id: str, n: int, r: Optional[int] = None,
                        a: Optional[int] = None, b: Optional[int] = None) -> Poly2:
        """Expand a record's right side; raises ConstraintViolationError outside its constraints."""
        return self.get(identity_id).closed_form(n, r, a, b)
