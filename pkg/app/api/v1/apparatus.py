from fastapi import APIRouter

from app.core.deps import Precision, as_http_error
from app.core.errors import ExpInterpError
from app.schemas.apparatus import ApparatusDump
from app.schemas.interpolant import SolveRequest
from app.services.gfunction_service import apparatus_dump, build_apparatus
from app.services.scheme_service import scheme_from_file

router = APIRouter(prefix="/apparatus", tags=["apparatus"])


@router.post("/dump", response_model=ApparatusDump)
def dump(data: SolveRequest, precision: Precision):
    """Endpoint pair, g constants and the error-model constants of a scheme."""
    bits = data.precision_bits or precision
    try:
        return apparatus_dump(build_apparatus(scheme_from_file(data.scheme, bits)))
    except (ExpInterpError, ValueError) as exc:
        raise as_http_error(exc) from exc
