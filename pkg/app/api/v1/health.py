from fastapi import APIRouter

from app.config import settings

router = APIRouter(tags=["System"])


@router.get("/health")
async def health():
    """System health check"""
    return {
        "status": "ok",
        "app": settings.APP_NAME,
        "modules": ["numkern", "interp", "asym", "geom"],
        "precision_bits": {"default": settings.PRECISION_BITS, "api": settings.API_PRECISION_BITS},
    }
