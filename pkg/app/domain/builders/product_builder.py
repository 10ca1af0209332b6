"""
Product Builder - Builder Pattern Implementation

Design Pattern: Builder
- Separates the construction of closed-form products from their evaluation
- Every closed form is assembled step-by-step from q-bracket factors

SOLID Principles:
- SRP: Only handles closed-form construction
- OCP: New identities add builder functions, not builder methods
"""
from dataclasses import dataclass, field
from typing import List

from app.domain.cyclotomic import CycInt, signed_omega
from app.domain.polynomials import Poly2, q_bracket


@dataclass
class ProductComponents:
    """Data class holding the factors collected so far."""
    factors: List[Poly2] = field(default_factory=list)


class ProductBuilder:
    """
    Concrete Builder for products of q-brackets over Z[ω_r].

    Usage:
        rhs = (ProductBuilder(r=1)
            .bracket(2, qpow=1)
            .bracket(4, qpow=1)
            .build())
    """

    def __init__(self, r: int):
        self._r = r
        self._components = ProductComponents()

    @property
    def r(self) -> int:
        return self._r

    def unit(self, sign: int = 1, omega_power: int = 0) -> CycInt:
        """The scalar sign·ω^omega_power of this builder's ring."""
        return signed_omega(self._r, sign, omega_power)

    def bracket_poly(self, k: int, sign: int = 1, omega_power: int = 0,
                     qpow: int = 1, tpow: int = 0) -> Poly2:
        """[k]_u for u = sign·ω^omega_power·q^qpow·t^tpow, without adding it."""
        return q_bracket(k, self.unit(sign, omega_power), qpow, tpow)

    def bracket(self, k: int, sign: int = 1, omega_power: int = 0,
                qpow: int = 1, tpow: int = 0) -> "ProductBuilder":
        """Multiply by [k]_u for u = sign·ω^omega_power·q^qpow·t^tpow."""
        self._components.factors.append(self.bracket_poly(k, sign, omega_power, qpow, tpow))
        return self

    def one_plus(self, inner: Poly2) -> "ProductBuilder":
        """Multiply by (1 + inner)."""
        self._components.factors.append(Poly2.one(self._r) + inner)
        return self

    def build(self) -> Poly2:
        """Expand the product; the empty product is 1."""
        result = Poly2.one(self._r)
        for poly in self._components.factors:
            result = result * poly
        return result
