from fastapi import APIRouter, Query

from app.constant import C0_REFERENCE
from app.core.deps import Precision, as_http_error
from app.core.errors import ExpInterpError
from app.services.trajectory_service import c0_root, classify_region, eta
from app.utils.bigcomplex import to_decimal

router = APIRouter(prefix="/geometry", tags=["geometry"])


@router.get("/c0")
def c0(precision: Precision):
    """Positive real zero of eta, where gamma1 and gamma2 cross the real axis at -c0."""
    return {"c0": to_decimal(c0_root(precision), 30), "reference": C0_REFERENCE, "precision_bits": precision}


@router.get("/region")
def region(re: float = Query(...), im: float = Query(0.0)):
    z = complex(re, im)
    try:
        domain = classify_region(z)
    except ExpInterpError as exc:
        raise as_http_error(exc) from exc
    value = complex(eta(z))
    return {"z": {"re": re, "im": im}, "region": domain.value, "re_eta": value.real}
