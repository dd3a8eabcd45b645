from fastapi import APIRouter

from app.core.deps import Precision, as_http_error
from app.core.errors import ExpInterpError
from app.schemas.interpolant import InterpolantOut, SolveRequest
from app.services.figure_service import interpolant_out
from app.services.interp_service import solve_interpolant
from app.services.scheme_service import scheme_from_file

router = APIRouter(prefix="/interpolants", tags=["interpolants"])


@router.post("/solve", response_model=InterpolantOut)
def solve(data: SolveRequest, precision: Precision):
    """Solve the Hermite system of the posted scheme; body precision wins over the query."""
    bits = data.precision_bits or precision
    try:
        r = solve_interpolant(scheme_from_file(data.scheme, bits))
        return interpolant_out(r)
    except (ExpInterpError, ValueError) as exc:
        raise as_http_error(exc) from exc
