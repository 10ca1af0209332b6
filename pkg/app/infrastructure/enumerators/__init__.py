"""Summation domain implementations - Factory Pattern"""
from app.infrastructure.enumerators.domain_factory import DomainFactory
from app.infrastructure.enumerators.group_domain import GroupDomain
from app.infrastructure.enumerators.useset_domain import USetDomain

__all__ = ["DomainFactory", "GroupDomain", "USetDomain"]
