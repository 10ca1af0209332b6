"""Core package initialization"""
from app.core.logging import logger
from app.core.config import Settings, get_settings
from app.core.exceptions import (
    MahonianBaseException,
    RingError,
    RingMismatchError,
    CoefficientOverflowError,
    ElementError,
    InvalidElementError,
    ElementParseError,
    StatisticError,
    UnknownStatisticError,
    FamilyMismatchError,
    RegistryError,
    UnknownIdentityError,
    ConstraintViolationError,
    ValidationError,
    UsageError,
)

__all__ = [
    "logger",
    "Settings",
    "get_settings",
    "MahonianBaseException",
    "RingError",
    "RingMismatchError",
    "CoefficientOverflowError",
    "ElementError",
    "InvalidElementError",
    "ElementParseError",
    "StatisticError",
    "UnknownStatisticError",
    "FamilyMismatchError",
    "RegistryError",
    "UnknownIdentityError",
    "ConstraintViolationError",
    "ValidationError",
    "UsageError",
]
