"""U-set summation domains: the order-increasing coset representatives"""
from typing import Hashable, Iterator, List

from app.core.exceptions import UsageError
from app.domain.elements import ColoredPerm, Family, LetterOrder, enumerate_useset, useset_size
from app.domain.interfaces.summation_domain import ISummationDomain

WHOLE = "all"


class USetDomain(ISummationDomain):
    """
    {τ : τ_1 < τ_2 < ... < τ_n under `order`}, one element per color
    assignment; for D_n only the even ones.

    U-sets are at most r^n elements, so they form a single partition.
    """

    def __init__(self, family: Family, n: int, r: int, order: LetterOrder):
        self._family = family
        self._n = n
        self._r = r
        self._order = order

    def elements(self) -> Iterator[ColoredPerm]:
        return enumerate_useset(self._family, self._n, self._r, self._order)

    def partitions(self) -> List[Hashable]:
        return [WHOLE]

    def elements_in(self, partition: Hashable) -> Iterator[ColoredPerm]:
        if partition != WHOLE:
            raise UsageError(f"{self.label} has the single partition {WHOLE!r}, got {partition!r}")
        return self.elements()

    @property
    def size(self) -> int:
        return useset_size(self._family, self._n, self._r)

    @property
    def label(self) -> str:
        group = f"G({self._r},{self._n})" if self._family is Family.G else f"{self._family.value}_{self._n}"
        return f"U-set[{self._order.value}] of {group}"
