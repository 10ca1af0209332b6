"""
Identity records: a summation domain, a weight and a closed-form right side.

The catalog of concrete records lives in
app/infrastructure/registry/identity_catalog.py; this module only defines
their shape and the parameter rules every record obeys.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, FrozenSet, Iterator, List, Optional, Tuple

from app.core.exceptions import ConstraintViolationError
from app.domain.characters import CharSpec
from app.domain.elements import Family, LetterOrder
from app.domain.polynomials import Poly2
from app.domain.statistics import StatRef


class DomainKind(str, Enum):
    GROUP = "group"
    USET = "useset"


@dataclass(frozen=True)
class DomainSpec:
    """The whole group, or its order-increasing U-set under a named order."""
    kind: DomainKind = DomainKind.GROUP
    order: Optional[LetterOrder] = None

    def describe(self) -> str:
        if self.kind is DomainKind.GROUP:
            return "group"
        return f"U-set[{self.order.value}]"


class Expectation(str, Enum):
    MATCH = "match"
    ERRATUM = "known-erratum"


class Comparison(str, Enum):
    CLOSED_FORM = "closed-form"
    TRANSPOSE = "transpose"


@dataclass(frozen=True)
class Weight:
    """
    weight(π) = χ(π) · (-1)^{Σ sign_stats(π)} · q^{q_stat(π)} · t^{t_stat(π)}

    character: None (trivial), a named character, or "chi" for χ_{a,b}.
    """
    character: Optional[str] = None
    sign_stats: Tuple[StatRef, ...] = ()
    q_stat: Optional[StatRef] = None
    t_stat: Optional[StatRef] = None

    def describe(self) -> str:
        parts = []
        if self.character:
            parts.append("chi_{a,b}" if self.character == "chi" else self.character)
        if self.sign_stats:
            parts.append("(-1)^(" + "+".join(s.label() for s in self.sign_stats) + ")")
        if self.t_stat:
            parts.append(f"t^{self.t_stat.label()}")
        if self.q_stat:
            parts.append(f"q^{self.q_stat.label()}")
        return "*".join(parts) or "1"


RhsBuilder = Callable[[int, int, int, int], Poly2]


@dataclass(frozen=True)
class IdentityRecord:
    """A registered identity Σ_{π ∈ domain} weight(π) = rhs(n, r, a, b)."""
    id: str
    group: str
    family: Family
    domain: DomainSpec
    weight: Weight
    statement: str
    rhs: Optional[RhsBuilder] = None
    expected: Expectation = Expectation.MATCH
    note: Optional[str] = None
    tags: FrozenSet[str] = field(default_factory=frozenset)
    even_r: bool = False
    min_n: int = 1
    compare: Comparison = Comparison.CLOSED_FORM

    @property
    def uses_chi(self) -> bool:
        return self.weight.character == "chi"

    def constraints(self) -> str:
        rules = [f"n>={self.min_n}"]
        fixed = self.family.fixed_r
        if fixed is not None:
            rules.append(f"r={fixed}")
        elif self.even_r:
            rules.append("r even")
        else:
            rules.append("r>=1")
        if self.uses_chi:
            rules.append("a in {0,1}, 0<=b<r")
        return "; ".join(rules)

    def resolve(self, n: int, r: Optional[int], a: Optional[int], b: Optional[int]) -> Tuple[int, int, int]:
        """Validate parameters against the constraint set; return (r, a, b)."""
        if n < self.min_n:
            raise ConstraintViolationError(self.id, f"n must be >= {self.min_n}, got {n}")
        fixed = self.family.fixed_r
        if fixed is not None:
            if r is not None and r != fixed:
                raise ConstraintViolationError(self.id, f"family {self.family.value} fixes r={fixed}, got r={r}")
            r = fixed
        elif r is None:
            raise ConstraintViolationError(self.id, "r is required for G(r,n) identities")
        if r < 1:
            raise ConstraintViolationError(self.id, f"r must be >= 1, got {r}")
        if self.even_r and r % 2:
            raise ConstraintViolationError(self.id, f"only known for even r, got r={r}")
        a = a or 0
        b = b or 0
        if self.uses_chi:
            if a not in (0, 1) or not 0 <= b < r:
                raise ConstraintViolationError(self.id, f"need a in {{0,1}} and 0 <= b < r, got a={a}, b={b}")
        elif a or b:
            raise ConstraintViolationError(self.id, "a and b apply only to χ_{a,b} identities")
        return r, a, b

    def character_spec(self, r: int, a: int = 0, b: int = 0) -> CharSpec:
        if self.weight.character == "chi":
            return CharSpec.chi(r, a, b)
        return CharSpec(self.family, r, self.weight.character or "trivial")

    def closed_form(self, n: int, r: Optional[int] = None, a: Optional[int] = None,
                    b: Optional[int] = None) -> Poly2:
        """Expand the right side for validated parameters."""
        r, a, b = self.resolve(n, r, a, b)
        if self.rhs is None:
            raise ConstraintViolationError(
                self.id, "no closed form; the sum is compared against its q<->t transpose"
            )
        return self.rhs(n, r, a, b)

    def r_values(self, max_r: int) -> List[int]:
        fixed = self.family.fixed_r
        if fixed is not None:
            return [fixed]
        return [r for r in range(1, max_r + 1) if not (self.even_r and r % 2)]

    def ab_values(self, r: int) -> Iterator[Tuple[int, int]]:
        if not self.uses_chi:
            yield 0, 0
            return
        for a in (0, 1):
            for b in range(r):
                yield a, b
