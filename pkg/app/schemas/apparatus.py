from pydantic import BaseModel

from app.constant import Provenance
from app.schemas.interpolant import ComplexOut


class ApparatusDump(BaseModel):
    precision_bits: int
    scheme_hash: str
    provenance: Provenance
    t: str
    a: ComplexOut
    b: ComplexOut
    residual_a: str
    residual_b: str
    g0: ComplexOut
    two_ell: ComplexOut
    constant: ComplexOut
    delta: ComplexOut
    c_n: ComplexOut
