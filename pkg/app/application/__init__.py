"""
Application Services - Service Layer + Facade Pattern

This package contains application services that orchestrate
infrastructure components (enumerators, the histogram fold, the identity
catalog) behind small facades shared by the CLI and the HTTP routes.

Design Patterns:
- Facade: Services provide simplified interface to complex subsystems
- Dependency Injection: Services receive dependencies through constructor
"""
from .registry_service import RegistryService
from .verification_service import VerificationService, VerifyReport, Verdict, exit_code
from .distribution_service import DistributionService
from .selftest_service import SelftestCheck, SelftestService

__all__ = [
    "RegistryService",
    "VerificationService",
    "VerifyReport",
    "Verdict",
    "exit_code",
    "DistributionService",
    "SelftestCheck",
    "SelftestService",
]
