"""
Distribution Service - Facade Pattern Implementation

Design Pattern: Facade
- Single entry point for the `stat` and `dist` commands
- Orchestrates: element parsing, statistic lookup, HistogramFold

SOLID Principles:
- SRP: Only handles single-statistic queries and distributions
- DIP: Fold engine injected through the constructor
"""
from typing import Optional

from app.core.config import get_settings
from app.core.exceptions import FamilyMismatchError, UsageError
from app.core.logging import logger
from app.domain.characters import parse_char
from app.domain.elements import Family, LetterOrder, parse_element
from app.domain.identities import DomainSpec, Weight
from app.domain.polynomials import Poly2
from app.domain.statistics import DEFAULT_LENGTH, DEFAULT_ORDER, StatName, StatRef, evaluate
from app.infrastructure.folding.histogram_fold import FoldPlan, HistogramFold


class DistributionService:
    """
    Facade for statistic evaluation and distribution polynomials.

    Orchestrates:
    1. Family/statistic compatibility checks
    2. Building a FoldPlan over the whole group
    3. Folding it into Σ χ(π) t^{t_stat(π)} q^{stat(π)}
    """

    def __init__(self, folder: Optional[HistogramFold] = None):
        """
        Initialize with dependencies (Dependency Injection).

        Args:
            folder: Fold engine (defaults to settings-driven HistogramFold)
        """
        settings = get_settings()
        self._folder = folder or HistogramFold(settings.threads, settings.parallel_threshold)
        logger.debug("DistributionService initialized with dependencies")

    def statistic(self, family: Family, element: str, stat: StatName, r: Optional[int] = None,
                  order: Optional[LetterOrder] = None) -> int:
        """Value of one statistic on a parsed element."""
        r = family.resolve_r(r)
        pi = parse_element(element, r)
        if family is Family.D and pi.neg_count() % 2:
            raise FamilyMismatchError(f"element {element}", family.value, "odd number of negative entries")
        if order is not None and not stat.needs_order:
            raise UsageError(f"--order applies to inv and maj only, not '{stat.value}'")
        value = evaluate(stat, pi, family, order)
        logger.info(f"{stat.value}({element}) = {value}")
        return value

    def _ref(self, family: Family, r: int, stat: StatName, order: Optional[LetterOrder]) -> StatRef:
        if family not in stat.families:
            raise FamilyMismatchError(stat.value, family.value)
        if stat.needs_order:
            order = order or DEFAULT_ORDER[family]
            # the fold skips per-letter checks, so the order must cover every color
            if not order.supports(r):
                raise UsageError(f"letter order {order.value} cannot compare letters of {family.value} with r={r}")
            return StatRef(stat, order)
        if order is not None:
            raise UsageError(f"--order applies to inv and maj only, not '{stat.value}'")
        return StatRef(stat)

    def distribution(self, family: Family, n: int, r: Optional[int] = None,
                     stat: Optional[StatName] = None, t_stat: Optional[StatName] = None,
                     char: Optional[str] = None, order: Optional[LetterOrder] = None) -> Poly2:
        """
        Σ_{π in the group} χ(π) q^{stat(π)} t^{t_stat(π)}.

        Args:
            family: S, B, D or G
            n: number of letters (>= 0)
            r: colors (G only; fixed for the other families)
            stat: q statistic (defaults to the family's length)
            t_stat: optional t statistic
            char: character text (defaults to trivial)
            order: letter order for inv/maj statistics
        """
        if n < 0:
            raise UsageError(f"n must be >= 0, got {n}")
        r = family.resolve_r(r)
        stat = stat or DEFAULT_LENGTH[family]
        weight = Weight(
            q_stat=self._ref(family, r, stat, order),
            t_stat=self._ref(family, r, t_stat, order) if t_stat else None,
        )
        character = parse_char(char, family, r)
        logger.info(f"Distribution of {weight.describe()} weighted by {character.label()} "
                    f"over {family.value} n={n} r={r}")
        plan = FoldPlan(family, n, r, DomainSpec(), weight, character)
        poly, _ = self._folder.fold(plan)
        return poly
