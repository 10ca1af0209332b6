"""
Domain Layer - Values, Statistics, Interfaces, and Builders

This layer contains:
- Values: cyclotomic integers, polynomials, colored permutations
- Statistics and characters: pure functions of an element
- Interfaces: Abstract contracts for infrastructure components
- Builders: Pattern implementations for closed-form construction

Submodules are imported directly (app.domain.polynomials, ...); this
package only re-exports the builder.
"""
from .builders import ProductBuilder

__all__ = [
    # Builders
    "ProductBuilder",
]
