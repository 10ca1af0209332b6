"""
Report Formatter Factory - Factory Method Pattern

Adding a new output style requires only:
1. Creating a new class implementing IReportFormatter
2. Registering it in this factory

Design Pattern: Factory Method
"""
from typing import Dict, Type

from app.core.exceptions import UsageError
from app.core.logging import logger
from app.domain.interfaces.report_formatter import IReportFormatter
from app.infrastructure.formatters.human_formatter import HumanFormatter
from app.infrastructure.formatters.json_formatter import JsonFormatter
from app.infrastructure.formatters.tsv_formatter import TsvFormatter


class FormatterFactory:
    """
    Factory for creating formatters by style name.

    Usage:
        formatter = FormatterFactory.create("json")
        print(formatter.format_poly(poly))
    """

    _formatters: Dict[str, Type[IReportFormatter]] = {}

    @classmethod
    def _initialize_default_formatters(cls) -> None:
        """Register default formatters if registry is empty"""
        if not cls._formatters:
            cls.register("human", HumanFormatter)
            cls.register("json", JsonFormatter)
            cls.register("tsv", TsvFormatter)

    @classmethod
    def register(cls, style: str, formatter_class: Type[IReportFormatter]) -> None:
        cls._formatters[style.lower()] = formatter_class
        logger.debug(f"Registered formatter {formatter_class.__name__} for '{style}'")

    @classmethod
    def create(cls, style: str) -> IReportFormatter:
        """
        Raises:
            UsageError: If no formatter exists for the style
        """
        cls._initialize_default_formatters()
        formatter_class = cls._formatters.get(style.lower())
        if formatter_class is None:
            raise UsageError(
                f"Unsupported format: '{style}'. Supported formats: {cls.supported_styles()}"
            )
        return formatter_class()

    @classmethod
    def supported_styles(cls) -> list:
        cls._initialize_default_formatters()
        return list(cls._formatters.keys())
