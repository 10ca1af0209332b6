"""Streaming folds of weighted sums over summation domains"""
from app.infrastructure.folding.histogram_fold import (
    FoldPlan,
    HistogramFold,
    apply_weights,
    fold_stream,
    monomial_function,
)

__all__ = ["FoldPlan", "HistogramFold", "apply_weights", "fold_stream", "monomial_function"]
