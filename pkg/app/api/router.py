"""
Main API router; every module router is mounted under API_V1_PREFIX by app.main.
"""
from fastapi import APIRouter

from app.api.v1 import apparatus, figures, geometry, health, interpolants

api_router = APIRouter()

api_router.include_router(health.router)
api_router.include_router(interpolants.router)
api_router.include_router(apparatus.router)
api_router.include_router(geometry.router)
api_router.include_router(figures.router)
