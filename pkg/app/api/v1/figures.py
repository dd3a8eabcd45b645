from fastapi import APIRouter

from app.services.figure_service import PRESETS

router = APIRouter(prefix="/figures", tags=["figures"])


@router.get("/presets")
async def presets():
    return [
        {"id": p.id, "family": p.family, "parameter": p.parameter, "overlay": p.overlay}
        for p in PRESETS.values()
    ]
