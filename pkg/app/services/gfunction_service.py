"""
Closed forms for the g-function, the Lagrange constant, the Szego function and phi,
plus the error model built on 2g(0) + 2 ell.

With w1 = -s + R(s), w2 = -s - R(s):

    g(z)   = -(a-b)^2 / (2 (2 w2(z) + a + b)) + log A_0(z) + (1/2n) sum_j log(A_j(z) / A_0(z))
    A_j(z) = (w2(z_j) - w1(z)) (w1(z_j) - w2(z)) / (2 w2(z_j) + a + b)       (A_0: z_j = 0)
    2 ell  = a + b - (1/2n) sum_j [i pi + log(-X_j)],  X_j = (2 w1(z_j) + a + b) / (2 w2(z_j) + a + b)
    D^2(z) = (-2 w2(z) - a - b) / ((w2(z_0) - w1(z)) (w1(z_0) - w2(z)))

Sums run over the 2n scaled points other than the anchor z_0.
"""
from __future__ import annotations

import logging

import numpy as np

from app.config import settings
from app.constant import RootSide
from app.core.errors import PathBlocked, PreconditionViolation
from app.models.apparatus import EndpointPair, ErrorModel, GApparatus
from app.models.scheme import InterpolationScheme
from app.schemas.apparatus import ApparatusDump
from app.services.endpoint_service import (
    R_fn,
    graded_path,
    h_fn,
    point_roots,
    solve_endpoints,
    w1,
    w2,
)
from app.services.scheme_service import scheme_hash
from app.utils.bigcomplex import BigComplex, complex_to_decimals, to_decimal
from app.utils.distance import points_polyline_distance, polylines_intersect
from app.utils.quadrature import contour_quadrature

logger = logging.getLogger(__name__)

# far point where g(z) - log z is read off
FAR_POINT = 10 ** 6
PATH_CLEARANCE = 1e-3


def reduce_mod(x, period_im) -> BigComplex:
    """Representative of x modulo i*period_im nearest to the real axis."""
    ctx = x.context
    k = ctx.nint(x.imag / period_im)
    return x - ctx.mpc(0, k * period_im)


def _g_from_pair(z, pair: EndpointPair, scheme: InterpolationScheme, side=None) -> BigComplex:
    ctx = scheme.ctx
    a, b = pair.a, pair.b
    z = ctx.mpc(z)
    w1z, w2z = w1(z, pair, side), w2(z, pair, side)

    def arg(zj, rj):
        w1j, w2j = -zj + rj, -zj - rj
        return (w2j - w1z) * (w1j - w2z) / (2 * w2j + a + b)

    ref = arg(ctx.mpc(0), R_fn(0, pair))
    log_ref = ctx.log(ref)
    spread = ctx.fsum(ctx.log(arg(zj, rj) / ref) for zj, rj in zip(scheme.others, point_roots(pair, scheme)))
    return -(a - b) ** 2 / (2 * (2 * w2z + a + b)) + log_ref + spread / scheme.two_n


def g_explicit(z, app: GApparatus, side: RootSide | None = None) -> BigComplex:
    return _g_from_pair(z, app.pair, app.scheme, side)


def _two_ell(pair: EndpointPair, scheme: InterpolationScheme) -> BigComplex:
    ctx = scheme.ctx
    a, b = pair.a, pair.b
    terms = []
    for zj, rj in zip(scheme.others, point_roots(pair, scheme)):
        x = (2 * (-zj + rj) + a + b) / (2 * (-zj - rj) + a + b)
        terms.append(ctx.mpc(0, ctx.pi) + ctx.log(-x))
    if not terms:
        return a + b
    return a + b - ctx.fsum(terms) / scheme.two_n


def ell(app: GApparatus) -> BigComplex:
    """ell itself (the apparatus caches 2 ell)."""
    return app.two_ell / 2


def _anchor_w(pair: EndpointPair, scheme: InterpolationScheme):
    z0 = scheme.anchor
    r0 = R_fn(z0, pair)
    return -z0 + r0, -z0 - r0


def _d_sq(z, pair: EndpointPair, scheme: InterpolationScheme, side=None) -> BigComplex:
    ctx = scheme.ctx
    z = ctx.mpc(z)
    w1_0, w2_0 = _anchor_w(pair, scheme)
    w1z, w2z = w1(z, pair, side), w2(z, pair, side)
    return (-2 * w2z - pair.a - pair.b) / ((w2_0 - w1z) * (w1_0 - w2z))


def D_sq(z, app: GApparatus, side: RootSide | None = None) -> BigComplex:
    return _d_sq(z, app.pair, app.scheme, side)


def _d_sq_inf(pair: EndpointPair, scheme: InterpolationScheme) -> BigComplex:
    _, w2_0 = _anchor_w(pair, scheme)
    return 2 / (w2_0 + (pair.a + pair.b) / 2)


def D_sq_inf(app: GApparatus) -> BigComplex:
    """Limit of D^2 at infinity."""
    return app.d_sq_inf


def build_apparatus(scheme: InterpolationScheme, pair: EndpointPair | None = None) -> GApparatus:
    if scheme.two_n == 0:
        raise PreconditionViolation("the g-function needs n >= 1")
    pair = pair or solve_endpoints(scheme)
    return GApparatus(
        pair=pair,
        scheme=scheme,
        precision=scheme.precision,
        g0=_g_from_pair(0, pair, scheme),
        two_ell=_two_ell(pair, scheme),
        d_sq0=_d_sq(0, pair, scheme),
        d_sq_inf=_d_sq_inf(pair, scheme),
    )


def constant(app: GApparatus) -> BigComplex:
    """2 g(0) + 2 ell."""
    return app.constant


def constant_explicit(app: GApparatus) -> BigComplex | None:
    """
    2 g(0) + 2 ell from the endpoints alone:
    -2 sqrt(ab) + (1/2n) sum log(z_j^2 (w2 - s)(w1 + s) / ((w2 + s)(w1 - s))), s = sqrt(ab).
    None when a scaled point sits at 0 (the summand is 0/0 there).
    """
    scheme, pair = app.scheme, app.pair
    ctx = scheme.ctx
    if any(zj == 0 for zj in scheme.others):
        return None
    s = ctx.sqrt(pair.a * pair.b)
    terms = []
    for zj, rj in zip(scheme.others, point_roots(pair, scheme)):
        w1j, w2j = -zj + rj, -zj - rj
        terms.append(ctx.log(zj ** 2 * (w2j - s) * (w1j + s) / ((w2j + s) * (w1j - s))))
    return -2 * s + ctx.fsum(terms) / scheme.two_n


def g_constant_at_infinity(app: GApparatus) -> BigComplex:
    """g(z) - log z at a far point on the positive axis; tends to 0."""
    ctx = app.ctx
    z = ctx.mpf(FAR_POINT)
    return g_explicit(z, app) - ctx.log(z)


def pade_constant(ctx) -> BigComplex:
    """-2 + log(-4) with the principal logarithm."""
    return -2 + ctx.log(4) + ctx.mpc(0, ctx.pi)


def _log_sum(z, scheme: InterpolationScheme) -> BigComplex:
    ctx = scheme.ctx
    return ctx.fsum(ctx.log(z - zj) for zj in scheme.others) / scheme.n


def variational_residual(z, app: GApparatus) -> BigComplex:
    """g+ + g- - 2z - (1/n) sum log(z - z_j) + 2 ell on the cut, modulo i pi / n."""
    ctx = app.ctx
    z = ctx.mpc(z)
    total = (g_explicit(z, app, RootSide.PLUS) + g_explicit(z, app, RootSide.MINUS)
             - 2 * z - _log_sum(z, app.scheme) + app.two_ell)
    return reduce_mod(total, ctx.pi / app.scheme.n)


def szego_residual(z, app: GApparatus) -> BigComplex:
    """D^2_+ D^2_- (z - z_0)^2 - 1 on the cut."""
    z = app.ctx.mpc(z)
    return (D_sq(z, app, RootSide.PLUS) * D_sq(z, app, RootSide.MINUS)
            * (z - app.scheme.anchor) ** 2 - 1)


def phi_route_a(z, app: GApparatus) -> BigComplex:
    ctx = app.ctx
    z = ctx.mpc(z)
    return -2 * g_explicit(z, app) + 2 * z + _log_sum(z, app.scheme) - app.two_ell


def phi_path(z, app: GApparatus, levels: int = 60) -> list:
    """a -> a + 3/2 (graded at a) -> Re z + 3/2 + i Im z -> z."""
    ctx = app.ctx
    z = ctx.mpc(z)
    a = app.pair.a
    corner = a + ctx.mpf(3) / 2
    return graded_path(a, corner, levels, ctx) + [ctx.mpc(z.real + ctx.mpf(3) / 2, z.imag), z]


def _check_path(path: list, app: GApparatus) -> None:
    # leave out a, where the path meets the cut by construction
    poly = np.array([complex(v) for v in path[1:]])
    if polylines_intersect(poly, app.pair.cut[1:]):
        raise PathBlocked("integration path for phi crosses the cut")
    points = np.array([complex(zj) for zj in app.scheme.scaled])
    if len(points) and float(np.min(points_polyline_distance(points, poly))) < PATH_CLEARANCE:
        raise PathBlocked("integration path for phi passes through a scheme point")


def phi_route_b(z, app: GApparatus, tol: float = 1e-20) -> BigComplex:
    """-integral from a to z of h / R."""
    ctx = app.ctx
    path = phi_path(z, app)
    _check_path(path, app)
    pair, scheme = app.pair, app.scheme
    integral = contour_quadrature(lambda s: h_fn(s, pair, scheme) / R_fn(s, pair), path[1:],
                                  nodes_per_segment=settings.QUAD_NODES, tol=tol, ctx=ctx)
    return -integral


def phi_fn(z, app: GApparatus, route: str = "A") -> BigComplex:
    if route.upper() == "B":
        return phi_route_b(z, app)
    return phi_route_a(z, app)


# --- error model ---

def error_constants(scheme: InterpolationScheme, app: GApparatus | None = None) -> ErrorModel:
    app = app or build_apparatus(scheme)
    ctx = scheme.ctx
    n = scheme.n
    const = app.constant
    delta = reduce_mod(const - pade_constant(ctx), 2 * ctx.pi / n)
    c = ctx.exp(-n * delta / (scheme.two_n + 1))
    return ErrorModel(n=n, scheme=scheme, constant=const, delta=delta, c_n=c)


def c_n(scheme: InterpolationScheme, app: GApparatus | None = None) -> BigComplex:
    return error_constants(scheme, app).c_n


def error_model(scheme: InterpolationScheme, z, app: GApparatus | None = None) -> BigComplex:
    """M(z) = 1/2 omega(z) (2n)^-(2n+1) e^z e^{-n (2 g(0) + 2 ell)}."""
    app = app or build_apparatus(scheme)
    ctx = scheme.ctx
    z = ctx.mpc(z)
    two_n = scheme.two_n
    return (scheme.omega(z) / 2 * ctx.mpf(two_n) ** (-(two_n + 1))
            * ctx.exp(z - scheme.n * app.constant))


def apparatus_dump(app: GApparatus, digits: int | None = None) -> ApparatusDump:
    digits = digits or settings.DECIMAL_DIGITS
    model = error_constants(app.scheme, app)

    def cx(value):
        re, im = complex_to_decimals(value, digits)
        return {"re": re, "im": im}

    pair = app.pair
    return ApparatusDump(
        precision_bits=app.precision,
        scheme_hash=scheme_hash(app.scheme),
        provenance=pair.provenance,
        t=to_decimal(pair.t, digits),
        a=cx(pair.a),
        b=cx(pair.b),
        residual_a=to_decimal(pair.residual_a, 6),
        residual_b=to_decimal(pair.residual_b, 6),
        g0=cx(app.g0),
        two_ell=cx(app.two_ell),
        constant=cx(app.constant),
        delta=cx(model.delta),
        c_n=cx(model.c_n),
    )
