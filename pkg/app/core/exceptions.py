"""
Custom Exceptions for the Signed Mahonian Verifier

Purpose: Define specific exception types for each component.
This allows us to:
1. Catch specific errors (not just generic Exception)
2. Map them to HTTP status codes and CLI exit codes
3. Give user-friendly error messages while logging technical details

Exception Hierarchy:
    MahonianBaseException (base for all our exceptions)
    ├── RingError (cyclotomic / polynomial arithmetic)
    ├── ElementError (colored permutation construction and parsing)
    ├── StatisticError (statistic or character used outside its family)
    ├── RegistryError (identity lookup and parameter constraints)
    └── ValidationError (CLI / HTTP input validation)
"""
from typing import Optional


class MahonianBaseException(Exception):
    """
    Base exception for all verifier errors.

    All custom exceptions inherit from this, making it easy to:
    - Catch ALL our custom exceptions with one handler
    - Keep a user-facing message apart from technical details
    """

    def __init__(self, message: str, details: Optional[str] = None):
        self.message = message
        self.details = details  # Technical details for logging
        super().__init__(self.message)


# ============================================================
# RING ARITHMETIC EXCEPTIONS
# ============================================================

class RingError(MahonianBaseException):
    """
    Raised when exact arithmetic in Z[ω] or Z[ω][q, t] fails.

    Edge cases this handles:
    - Operands living in different cyclotomic rings
    - Coefficients leaving the signed 64-bit range
    """
    pass


class RingMismatchError(RingError):
    """Raised when two operands have different ring orders r."""

    def __init__(self, left_r: int, right_r: int):
        super().__init__(
            message=f"Cannot combine values over Z[ω_{left_r}] and Z[ω_{right_r}].",
            details=f"Ring order mismatch: {left_r} != {right_r}"
        )


class CoefficientOverflowError(RingError):
    """Raised when a coefficient would not fit a signed 64-bit integer."""

    def __init__(self, value: int):
        super().__init__(
            message="Coefficient overflow: result exceeds the signed 64-bit range.",
            details=f"Overflowing coefficient magnitude has {abs(value).bit_length()} bits"
        )


# ============================================================
# ELEMENT EXCEPTIONS
# ============================================================

class ElementError(MahonianBaseException):
    """
    Raised when a colored permutation is malformed.

    Edge cases this handles:
    - sigma not a bijection on {1..n}
    - colors outside {0..r-1}
    - letters invalid for a letter order
    - unparsable element text
    """
    pass


class InvalidElementError(ElementError):
    """Raised when element data violates the group invariants."""

    def __init__(self, reason: str):
        super().__init__(
            message=f"Invalid element: {reason}",
            details=f"Element invariant violated: {reason}"
        )


class ElementParseError(ElementError):
    """Raised when element text does not follow the element grammar."""

    def __init__(self, text: str, reason: str):
        super().__init__(
            message=f"Cannot parse element '{text}': {reason}",
            details=f"Element parse failure for {text!r}: {reason}"
        )


# ============================================================
# STATISTIC / CHARACTER EXCEPTIONS
# ============================================================

class StatisticError(MahonianBaseException):
    """Raised when a statistic or character cannot be evaluated."""
    pass


class UnknownStatisticError(StatisticError):
    """Raised when a statistic name is not known."""

    def __init__(self, name: str):
        super().__init__(
            message=f"Unknown statistic '{name}'.",
            details=f"Statistic lookup failed: {name}"
        )


class FamilyMismatchError(StatisticError):
    """Raised when a statistic or character is applied outside its family."""

    def __init__(self, what: str, family: str, reason: Optional[str] = None):
        super().__init__(
            message=f"'{what}' is not defined on family {family}"
                    + (f": {reason}" if reason else "."),
            details=f"Family mismatch: {what} on {family} ({reason})"
        )


# ============================================================
# REGISTRY EXCEPTIONS
# ============================================================

class RegistryError(MahonianBaseException):
    """Raised when an identity cannot be looked up or evaluated."""
    pass


class UnknownIdentityError(RegistryError):
    """Raised when an identity id is not registered."""

    def __init__(self, identity_id: str):
        super().__init__(
            message=f"Unknown identity '{identity_id}'. Use `list` to see registered ids.",
            details=f"Registry lookup failed: {identity_id}"
        )


class ConstraintViolationError(RegistryError):
    """Raised when parameters fall outside an identity's constraint set."""

    def __init__(self, identity_id: str, reason: str):
        super().__init__(
            message=f"Identity '{identity_id}' does not apply: {reason}",
            details=f"Constraint violation for {identity_id}: {reason}"
        )


# ============================================================
# INPUT VALIDATION EXCEPTIONS
# ============================================================

class ValidationError(MahonianBaseException):
    """
    Raised when input validation fails.

    Edge cases this handles:
    - Missing or conflicting flags
    - Non-integer or out-of-range parameters
    - Malformed environment configuration
    """
    pass


class UsageError(ValidationError):
    """Raised for command-line or request argument problems."""

    def __init__(self, reason: str):
        super().__init__(
            message=reason,
            details=f"Usage error: {reason}"
        )
