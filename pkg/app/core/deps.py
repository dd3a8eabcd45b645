from typing import Annotated

from fastapi import Depends, HTTPException, Query, status

from app.config import settings


def get_precision(
    precision_bits: Annotated[int | None, Query(description="working precision in bits")] = None,
) -> int:
    """Precision for a request; interactive calls default lower than the CLI."""
    bits = precision_bits or settings.API_PRECISION_BITS
    if bits < settings.MIN_PRECISION_BITS:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"precision_bits must be at least {settings.MIN_PRECISION_BITS}",
        )
    return bits


Precision = Annotated[int, Depends(get_precision)]


def as_http_error(exc: Exception) -> HTTPException:
    """Input problems become 400, numerical failures 422."""
    if isinstance(exc, ValueError):
        return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return HTTPException(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        detail=f"{type(exc).__name__}: {exc}",
    )
