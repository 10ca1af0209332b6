"""
Mahonian Verification API - Main Entry Point

This is the main application file that:
1. Creates the FastAPI app
2. Registers global exception handlers
3. Includes all route modules

Exception Handling:
- Global handlers catch all custom exceptions
- Return user-friendly JSON error responses
- Log technical details for debugging
"""
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from app.routes.health import router as health_router
from app.routes.identities import router as identities_router
from app.routes.stats import router as stats_router
from app.routes.verify import router as verify_router
from app.core.logging import logger
from app.core.exceptions import (
    MahonianBaseException,
    ValidationError,
    ElementError,
    StatisticError,
    UnknownIdentityError,
    ConstraintViolationError,
    RingError,
)

app = FastAPI(title="Mahonian Verifier")

logger.info("Starting Mahonian verification API")


def _error(status_code: int, error: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        content={"error": error, "message": message, "status": "error"},
    )


# ============================================================
# GLOBAL EXCEPTION HANDLERS
# ============================================================

@app.exception_handler(ValidationError)
async def validation_error_handler(request: Request, exc: ValidationError):
    """Handle bad query or body parameters - return 400 Bad Request"""
    logger.warning(f"Validation error: {exc.details}")
    return _error(400, "validation_error", exc.message)


@app.exception_handler(ElementError)
async def element_error_handler(request: Request, exc: ElementError):
    """Handle malformed or invalid elements - return 400 Bad Request"""
    logger.warning(f"Element error: {exc.details}")
    return _error(400, "element_error", exc.message)


@app.exception_handler(StatisticError)
async def statistic_error_handler(request: Request, exc: StatisticError):
    """Handle unknown statistics and family mismatches - return 400 Bad Request"""
    logger.warning(f"Statistic error: {exc.details}")
    return _error(400, "statistic_error", exc.message)


@app.exception_handler(UnknownIdentityError)
async def unknown_identity_handler(request: Request, exc: UnknownIdentityError):
    """Handle unknown identity ids - return 404 Not Found"""
    logger.warning(f"Unknown identity: {exc.details}")
    return _error(404, "unknown_identity", exc.message)


@app.exception_handler(ConstraintViolationError)
async def constraint_error_handler(request: Request, exc: ConstraintViolationError):
    """Handle parameters outside an identity's constraints - return 422"""
    logger.warning(f"Constraint violation: {exc.details}")
    return _error(422, "constraint_violation", exc.message)


@app.exception_handler(RingError)
async def ring_error_handler(request: Request, exc: RingError):
    """Handle arithmetic failures (overflow, ring mismatch) - return 500"""
    logger.error(f"Ring error: {exc.details}")
    return _error(500, "ring_error", exc.message)


@app.exception_handler(MahonianBaseException)
async def base_error_handler(request: Request, exc: MahonianBaseException):
    """Catch-all for any other domain exceptions - return 500"""
    logger.error(f"Unhandled domain exception: {exc.details}")
    return _error(500, "internal_error", exc.message)


@app.exception_handler(Exception)
async def general_exception_handler(request: Request, exc: Exception):
    """Catch-all for unexpected exceptions - return 500"""
    logger.error(f"Unexpected error: {type(exc).__name__}: {exc}")
    return _error(500, "internal_error", "An unexpected error occurred. Please try again later.")


# ============================================================
# ROUTES
# ============================================================

app.include_router(stats_router, tags=["statistics"])
app.include_router(identities_router, prefix="/identities", tags=["identities"])
app.include_router(verify_router, prefix="/verify", tags=["verify"])
app.include_router(health_router, prefix="/health", tags=["health"])


if __name__ == "__main__":
    import uvicorn

    uvicorn.run("app.main:app", host="127.0.0.1", port=8000, reload=True)
