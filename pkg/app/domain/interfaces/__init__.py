"""Abstract interfaces for dependency inversion"""
from app.domain.interfaces.summation_domain import ISummationDomain
from app.domain.interfaces.report_formatter import IReportFormatter

__all__ = [
    "ISummationDomain",
    "IReportFormatter",
]
