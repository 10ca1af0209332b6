"""Plain-text output for terminals."""
from typing import List, Sequence

from app.domain.elements import format_element
from app.domain.identities import IdentityRecord
from app.domain.interfaces.report_formatter import IReportFormatter
from app.domain.polynomials import Poly2, format_human


class HumanFormatter(IReportFormatter):
    """
    Human-readable rendering.

    Implements: IReportFormatter (Strategy Pattern)
    """

    @property
    def style(self) -> str:
        return "human"

    def format_poly(self, poly: Poly2) -> str:
        return format_human(poly)

    def format_reports(self, reports) -> str:
        blocks: List[str] = []
        for report in reports:
            lines = [
                f"{report.identity_id} (n={report.n}, r={report.r}, a={report.a}, b={report.b}): "
                f"{report.verdict.value}",
                f"  lhs:  {format_human(report.lhs)}",
                f"  rhs:  {format_human(report.rhs)}",
            ]
            if not report.difference.is_zero():
                lines.append(f"  diff: {format_human(report.difference)}")
            lines.append(f"  {report.count} elements, {report.elapsed_ms:.1f} ms")
            if report.witness is not None:
                lines.append(f"  witness: {format_element(report.witness)}")
            if report.note:
                lines.append(f"  note: {report.note}")
            blocks.append("\n".join(lines))
        return "\n".join(blocks)

    def format_identities(self, records: Sequence[IdentityRecord]) -> str:
        width = max((len(record.id) for record in records), default=0)
        return "\n".join(f"{record.id:<{width}}  {record.statement}" for record in records)

    def format_selftest(self, checks) -> str:
        lines = []
        for check in checks:
            mark = "ok  " if check.passed else "FAIL"
            line = f"{mark} {check.name}: {check.actual}"
            if not check.passed:
                line += f" (expected {check.expected})"
            if check.note:
                line += f"  [{check.note}]"
            lines.append(line)
        passed = sum(check.passed for check in checks)
        lines.append(f"{passed}/{len(checks)} checks passed")
        return "\n".join(lines)
