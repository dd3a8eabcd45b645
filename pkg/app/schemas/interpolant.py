from pydantic import BaseModel

from app.constant import Normalization
from app.schemas.scheme import SchemeFile


class ComplexOut(BaseModel):
    re: str
    im: str


class SolveRequest(BaseModel):
    scheme: SchemeFile
    precision_bits: int | None = None


class InterpolantOut(BaseModel):
    n1: int
    n2: int
    precision_bits: int
    scheme_hash: str
    normalization: Normalization
    p: list[ComplexOut]
    q: list[ComplexOut]
    zeros: list[ComplexOut]
    poles: list[ComplexOut]
    residual: str
