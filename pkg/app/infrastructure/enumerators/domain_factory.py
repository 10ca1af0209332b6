"""
Summation Domain Factory - Factory Method Pattern

This factory creates the summation domain an identity record names.
Adding a new kind of domain requires only:
1. Creating a new class implementing ISummationDomain
2. Registering it in this factory

Design Pattern: Factory Method
SOLID Principles:
    - Open/Closed (extend without modifying existing code)
    - Dependency Inversion (returns interface, not concrete class)
"""
from typing import Callable, Dict

from app.core.exceptions import UsageError
from app.core.logging import logger
from app.domain.elements import Family
from app.domain.identities import DomainKind, DomainSpec
from app.domain.interfaces.summation_domain import ISummationDomain
from app.infrastructure.enumerators.group_domain import GroupDomain
from app.infrastructure.enumerators.useset_domain import USetDomain

DomainConstructor = Callable[[DomainSpec, Family, int, int], ISummationDomain]


class DomainFactory:
    """
    Factory for creating summation domains from a DomainSpec.

    Usage:
        domain = DomainFactory.create(DomainSpec(), Family.B, n=3, r=2)
        for pi in domain.elements(): ...
    """

    # Registry mapping domain kinds to constructors
    _constructors: Dict[DomainKind, DomainConstructor] = {}

    @classmethod
    def _initialize_default_domains(cls) -> None:
        """Register default domains if registry is empty"""
        if not cls._constructors:
            cls.register(DomainKind.GROUP, lambda spec, family, n, r: GroupDomain(family, n, r))
            cls.register(DomainKind.USET, lambda spec, family, n, r: USetDomain(family, n, r, spec.order))

    @classmethod
    def register(cls, kind: DomainKind, constructor: DomainConstructor) -> None:
        """
        Register a constructor for a domain kind.

        Args:
            kind: The DomainKind handled
            constructor: Callable (spec, family, n, r) -> ISummationDomain
        """
        cls._constructors[kind] = constructor
        logger.debug(f"Registered summation domain for {kind.value}")

    @classmethod
    def create(cls, spec: DomainSpec, family: Family, n: int, r: int) -> ISummationDomain:
        """
        Get the summation domain for a record's DomainSpec.

        Raises:
            UsageError: If no constructor exists for the kind
        """
        cls._initialize_default_domains()
        constructor = cls._constructors.get(spec.kind)
        if constructor is None:
            raise UsageError(
                f"Unsupported domain kind: {spec.kind}. "
                f"Supported kinds: {[k.value for k in cls.supported_kinds()]}"
            )
        domain = constructor(spec, family, n, r)
        logger.debug(f"Using {type(domain).__name__} for {domain.label}")
        return domain

    @classmethod
    def supported_kinds(cls) -> list:
        """Return list of all supported domain kinds"""
        cls._initialize_default_domains()
        return list(cls._constructors.keys())
