from pydantic import BaseModel, Field, field_validator

from app.constant import OutputFormat


class RunConfig(BaseModel):
    command: str
    precision_bits: int = Field(1024, ge=128)
    n: int | None = Field(None, ge=0)
    n_sweep: list[int] = []
    scheme_path: str | None = None
    preset: str | None = None
    out: str | None = None
    format: OutputFormat = OutputFormat.JSON
    grid: str | None = None
    overlay: bool = False
    workers: int = Field(1, ge=1)

    @field_validator("n_sweep")
    @classmethod
    def strictly_increasing(cls, v: list[int]) -> list[int]:
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("n sweep values must be strictly increasing")
        return v
