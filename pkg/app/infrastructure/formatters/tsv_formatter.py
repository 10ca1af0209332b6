"""Tab-separated output for spreadsheets and shell pipelines."""
from typing import Iterable, Sequence

from app.domain.identities import IdentityRecord
from app.domain.interfaces.report_formatter import IReportFormatter
from app.domain.polynomials import Poly2, format_human

TERM_HEADER = ("q", "t", "coefficient")
REPORT_HEADER = ("id", "n", "r", "a", "b", "verdict", "count", "ms", "diff")
LIST_HEADER = ("id", "family", "domain", "constraints", "statement")
SELFTEST_HEADER = ("name", "expected", "actual", "passed")


def _clean(value: object) -> str:
    return str(value).replace("\t", " ").replace("\n", " ")


def _table(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(_clean(cell) for cell in row) for row in rows)
    return "\n".join(lines)


class TsvFormatter(IReportFormatter):
    """
    One header line, then one row per item.

    Implements: IReportFormatter (Strategy Pattern)
    """

    @property
    def style(self) -> str:
        return "tsv"

    def format_poly(self, poly: Poly2) -> str:
        return _table(TERM_HEADER, ((qe, te, c.format()) for (qe, te), c in poly.sorted_terms()))

    def format_reports(self, reports) -> str:
        return _table(REPORT_HEADER, (
            (rep.identity_id, rep.n, rep.r, rep.a, rep.b, rep.verdict.value,
             rep.count, f"{rep.elapsed_ms:.3f}", format_human(rep.difference))
            for rep in reports
        ))

    def format_identities(self, records: Sequence[IdentityRecord]) -> str:
        return _table(LIST_HEADER, (
            (rec.id, rec.family.value, rec.domain.describe(), rec.constraints(), rec.statement)
            for rec in records
        ))

    def format_selftest(self, checks) -> str:
        return _table(SELFTEST_HEADER, (
            (check.name, check.expected, check.actual, "yes" if check.passed else "no")
            for check in checks
        ))
