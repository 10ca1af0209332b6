"""
Statistics Route - Thin Controller using Service Layer

Design Pattern: Facade (via DistributionService)
- Parses query strings into domain enums and delegates

SOLID Principles:
- SRP: Route only handles HTTP concerns
- DIP: Depends on DistributionService abstraction
"""
from typing import Optional

from fastapi import APIRouter

from app.application import DistributionService
from app.core.logging import logger
from app.domain.elements import Family, LetterOrder
from app.domain.statistics import StatName
from app.routes.limits import require_servable

router = APIRouter()

# Service instance (Facade Pattern)
distribution_service = DistributionService()


@router.get("/stat")
def stat(
    family: str,
    element: str,
    stat: str,
    r: Optional[int] = None,
    order: Optional[str] = None,
):
    """Value of one statistic on one element."""
    logger.info(f"Stat request: {stat} of '{element}' in {family}")
    value = distribution_service.statistic(
        family=Family.parse(family),
        element=element,
        stat=StatName.parse(stat),
        r=r,
        order=LetterOrder.parse(order) if order else None,
    )
    return {"value": value}


@router.get("/dist")
def dist(
    family: str,
    n: int,
    r: Optional[int] = None,
    stat: Optional[str] = None,
    char: Optional[str] = None,
    t_stat: Optional[str] = None,
    order: Optional[str] = None,
):
    """Distribution polynomial over the whole group, as Poly2 JSON."""
    logger.info(f"Dist request: {family} n={n} r={r} stat={stat} char={char}")
    group = Family.parse(family)
    require_servable(group, n, group.resolve_r(r))
    poly = distribution_service.distribution(
        family=group,
        n=n,
        r=r,
        stat=StatName.parse(stat) if stat else None,
        t_stat=StatName.parse(t_stat) if t_stat else None,
        char=char,
        order=LetterOrder.parse(order) if order else None,
    )
    return poly.to_json()
