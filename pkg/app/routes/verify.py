"""
Verify Route - Thin Controller using Service Layer

Design Pattern: Facade (via VerificationService)
- Route validates the request body and delegates

SOLID Principles:
- SRP: Route only handles HTTP concerns
- DIP: Depends on VerificationService abstraction
"""
from typing import Optional

from fastapi import APIRouter
from pydantic import BaseModel

from app.application import VerificationService
from app.core.logging import logger
from app.routes.limits import require_servable

router = APIRouter()

# Service instance (Facade Pattern)
verification_service = VerificationService()


class VerifyRequest(BaseModel):
    id: str
    n: int
    r: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None


@router.post("/")
def verify(request: VerifyRequest):
    """Run one identity check and return its report."""
    logger.info(f"Verify request: {request.id} n={request.n} r={request.r}")
    record = verification_service.registry.get(request.id)
    r, _, _ = record.resolve(request.n, request.r, request.a, request.b)
    require_servable(record.family, request.n, r)
    report = verification_service.verify(
        identity_id=request.id,
        n=request.n,
        r=request.r,
        a=request.a,
        b=request.b,
    )
    return report.to_json()
