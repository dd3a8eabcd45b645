from pydantic_settings import BaseSettings
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseSettings):
    # --- server ---
    APP_NAME: str = "expinterp"
    ENV: str = "dev"
    API_V1_PREFIX: str = "/api/v1"
    LOG_LEVEL: str = "INFO"

    # --- precision ---
    PRECISION_BITS: int = 1024
    MIN_PRECISION_BITS: int = 128
    GUARD_BITS: int = 64
    API_PRECISION_BITS: int = 256  # http requests default lower, they are interactive

    # --- root finding / newton ---
    ROOT_MAX_ITER: int = 200
    NEWTON_MAX_ITER: int = 80
    NEWTON_MAX_HALVINGS: int = 40

    # --- quadrature ---
    QUAD_NODES: int = 24
    QUAD_MAX_NODES: int = 768
    QUAD_EDGES: int = 64

    # --- trajectories / measures ---
    TRACE_STEP: float = 0.01
    TRACE_TOL: float = 1e-12
    TRACE_START_OFFSET: float = 1e-4
    RAY_LENGTH: float = 150.0
    MOMENTS_K: int = 8

    # --- sweeps / output ---
    WORKERS: int = 1
    OUTPUT_DIR: str = "out"
    DECIMAL_DIGITS: int = 40


settings = Settings()
