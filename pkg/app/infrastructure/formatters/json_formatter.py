"""JSON output: one compact document per command."""
import json
from typing import Sequence

from app.domain.identities import IdentityRecord
from app.domain.interfaces.report_formatter import IReportFormatter
from app.domain.polynomials import Poly2


def record_summary(record: IdentityRecord) -> dict:
    """Catalog entry as served by `list` and GET /identities/."""
    data = {
        "id": record.id,
        "group": record.group,
        "family": record.family.value,
        "domain": record.domain.describe(),
        "weight": record.weight.describe(),
        "constraints": record.constraints(),
        "statement": record.statement,
        "expected": record.expected.value,
        "tags": sorted(record.tags),
    }
    if record.note:
        data["note"] = record.note
    return data


class JsonFormatter(IReportFormatter):
    """
    Machine-readable rendering; reports follow VerifyReport.to_json.

    Implements: IReportFormatter (Strategy Pattern)
    """

    @property
    def style(self) -> str:
        return "json"

    @staticmethod
    def _dump(data) -> str:
        return json.dumps(data, separators=(",", ":"), ensure_ascii=False)

    def format_poly(self, poly: Poly2) -> str:
        return self._dump(poly.to_json())

    def format_reports(self, reports) -> str:
        return self._dump([report.to_json() for report in reports])

    def format_identities(self, records: Sequence[IdentityRecord]) -> str:
        return self._dump([record_summary(record) for record in records])

    def format_selftest(self, checks) -> str:
        return self._dump({
            "passed": all(check.passed for check in checks),
            "checks": [check.to_json() for check in checks],
        })
