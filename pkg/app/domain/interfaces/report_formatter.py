"""Interface for output formatters - Strategy Pattern"""
from abc import ABC, abstractmethod
from typing import Sequence, TYPE_CHECKING

from app.domain.identities import IdentityRecord
from app.domain.polynomials import Poly2

if TYPE_CHECKING:
    from app.application.selftest_service import SelftestCheck
    from app.application.verification_service import VerifyReport


class IReportFormatter(ABC):
    """
    Abstract interface for rendering command output.

    Implements: Strategy Pattern
    Enables: Swap human, JSON and TSV output without touching the services
    """

    @abstractmethod
    def format_poly(self, poly: Poly2) -> str:
        """Render a single polynomial (the `dist` output)."""
        pass

    @abstractmethod
    def format_reports(self, reports: Sequence["VerifyReport"]) -> str:
        """Render verification reports in order."""
        pass

    @abstractmethod
    def format_identities(self, records: Sequence[IdentityRecord]) -> str:
        """Render the identity catalog listing."""
        pass

    @abstractmethod
    def format_selftest(self, checks: Sequence["SelftestCheck"]) -> str:
        """Render self-test checks."""
        pass

    @property
    @abstractmethod
    def style(self) -> str:
        """Style name used on the command line (human, json, tsv)"""
        pass
