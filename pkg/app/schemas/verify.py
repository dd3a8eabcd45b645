from pydantic import BaseModel

from app.constant import Suite


class CriterionResult(BaseModel):
    name: str
    passed: bool
    measured: str
    threshold: str = ""
    detail: dict = {}


class VerifyReport(BaseModel):
    suite: Suite
    precision_bits: int
    n_sweep: list[int]
    passed: bool
    criteria: list[CriterionResult]
