"""
The 2x2 matrix Y of the Riemann-Hilbert problem attached to a diagonal scheme.

Rows come from the type (n, n) interpolant (P monic) and the type (n-1, n+1)
interpolant on the same points (Q monic). det Y = 1 in the whole plane.
"""
from __future__ import annotations

import logging

from app.core.errors import PreconditionViolation
from app.models.interpolant import RHSolutionY
from app.models.scheme import InterpolationScheme
from app.services.interp_service import solve_interpolant
from app.services.scheme_service import build_scheme
from app.utils.bigcomplex import BigComplex

logger = logging.getLogger(__name__)


def contour_radius(scheme: InterpolationScheme):
    ctx = scheme.ctx
    return max(ctx.mpf("1.5"), 2 * max(abs(z) for z in scheme.scaled))


def assemble_Y(scheme: InterpolationScheme, precision: int | None = None) -> RHSolutionY:
    if precision is not None and precision != scheme.precision:
        scheme = build_scheme(scheme.points, scheme.n1, scheme.n2, precision)
    if not scheme.is_diagonal:
        raise PreconditionViolation(f"Y is built for diagonal schemes, got ({scheme.n1}, {scheme.n2})")
    n = scheme.n1
    if n < 1:
        raise PreconditionViolation("Y needs n >= 1: the auxiliary type (n-1, n+1) does not exist for n = 0")

    main = solve_interpolant(scheme)
    P = main.P
    scale = 1 / P.leading
    P, Q = P.scale_by(scale), main.Q.scale_by(scale)

    aux_scheme = build_scheme(scheme.points, n - 1, n + 1, scheme.precision)
    aux = solve_interpolant(aux_scheme)
    aux_scale = 1 / aux.Q.leading
    P_aux, Q_aux = aux.P.scale_by(aux_scale), aux.Q.scale_by(aux_scale)

    radius = contour_radius(scheme)
    logger.debug("assembled Y for n=%d, contour radius %s", n, scheme.ctx.nstr(radius, 5))
    return RHSolutionY(P, Q, P_aux, Q_aux, radius, scheme)


def det_Y(Y: RHSolutionY, z) -> BigComplex:
    return Y.det(z)
