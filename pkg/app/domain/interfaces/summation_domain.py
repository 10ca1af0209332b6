"""Interface for summation domains - Strategy Pattern"""
from abc import ABC, abstractmethod
from typing import Hashable, Iterator, List

from app.domain.elements import ColoredPerm


class ISummationDomain(ABC):
    """
    Abstract interface for the sets a signed Mahonian sum runs over.

    Implements: Strategy Pattern
    Enables: Swap whole groups and U-sets without touching the fold
    """

    @abstractmethod
    def elements(self) -> Iterator[ColoredPerm]:
        """
        Stream every element exactly once, in a deterministic order.

        Returns:
            Lazy iterator of ColoredPerm values
        """
        pass

    @abstractmethod
    def partitions(self) -> List[Hashable]:
        """
        Labels of disjoint sub-streams covering the domain.

        Returns:
            Picklable labels accepted by elements_in(); with fewer than two
            labels the domain is folded in one piece
        """
        pass

    @abstractmethod
    def elements_in(self, partition: Hashable) -> Iterator[ColoredPerm]:
        """Stream the elements of one partition."""
        pass

    @property
    @abstractmethod
    def size(self) -> int:
        """Theoretical number of elements"""
        pass

    @property
    @abstractmethod
    def label(self) -> str:
        """Short description, e.g. 'B_3' or 'U-set[IntegerB] of G(3,2)'"""
        pass
