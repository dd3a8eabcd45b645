from pydantic import BaseModel, Field, field_validator


class SchemePoint(BaseModel):
    re: str
    im: str = "0"
    mult: int = Field(1, ge=1)

    @field_validator("re", "im", mode="before")
    @classmethod
    def as_decimal_string(cls, v):
        # numbers are accepted but kept as their decimal text
        if isinstance(v, (int, float)):
            return repr(v)
        return v


class SchemeFile(BaseModel):
    n1: int = Field(ge=0)
    n2: int = Field(ge=0)
    points: list[SchemePoint] = Field(min_length=1)
