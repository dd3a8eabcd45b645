import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.api.router import api_router
from app.config import settings
from app.services.trajectory_service import c0_root

logging.basicConfig(
    level=settings.LOG_LEVEL.upper(),
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    # warm the c0 cache at the request precision
    c0 = c0_root(settings.API_PRECISION_BITS)
    logger.info("startup: %s, c0 = %.12f at %d bits", settings.APP_NAME, float(c0),
                settings.API_PRECISION_BITS)
    yield


app = FastAPI(title=settings.APP_NAME, lifespan=lifespan)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"] if settings.ENV != "prod" else [],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(api_router, prefix=settings.API_V1_PREFIX)


@app.get("/")
async def root():
    return {"message": "Rational interpolants of exp(z)", "docs": "/docs", "health": f"{settings.API_V1_PREFIX}/health"}
