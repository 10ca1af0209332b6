"""Whole-group summation domains: S_n, B_n, D_n and G(r, n)"""
from typing import Hashable, Iterator, List

from app.domain.elements import ColoredPerm, Family, enumerate_group, enumerate_partition, first_letters
from app.domain.interfaces.summation_domain import ISummationDomain


class GroupDomain(ISummationDomain):
    """
    Every element of the group, lexicographic in (σ, z).

    Partitions are first letters (v, c); each partition is the set of
    elements starting with that letter.
    """

    def __init__(self, family: Family, n: int, r: int):
        self._family = family
        self._n = n
        self._r = r

    def elements(self) -> Iterator[ColoredPerm]:
        return enumerate_group(self._family, self._n, self._r)

    def partitions(self) -> List[Hashable]:
        return first_letters(self._n, self._r)

    def elements_in(self, partition: Hashable) -> Iterator[ColoredPerm]:
        return enumerate_partition(self._family, self._n, self._r, partition)

    @property
    def size(self) -> int:
        return self._family.group_order(self._n, self._r)

    @property
    def label(self) -> str:
        if self._family is Family.G:
            return f"G({self._r},{self._n})"
        return f"{self._family.value}_{self._n}"
