"""
Product Builders - Builder Pattern Implementation

This package contains the builder used to assemble closed-form
right-hand sides as products of q-brackets.

Design Pattern: Builder
- Separates product construction from expansion
- Allows step-by-step factor building
"""
from .product_builder import ProductBuilder, ProductComponents

__all__ = ["ProductBuilder", "ProductComponents"]
