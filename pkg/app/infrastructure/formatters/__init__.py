"""Output formatters - Strategy + Factory Pattern"""
from app.infrastructure.formatters.formatter_factory import FormatterFactory
from app.infrastructure.formatters.human_formatter import HumanFormatter
from app.infrastructure.formatters.json_formatter import JsonFormatter, record_summary
from app.infrastructure.formatters.tsv_formatter import TsvFormatter

__all__ = ["FormatterFactory", "HumanFormatter", "JsonFormatter", "TsvFormatter", "record_summary"]
