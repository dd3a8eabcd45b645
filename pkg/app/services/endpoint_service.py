"""
Cut endpoints a, b and the branch of R(z) = sqrt((z - a)(z - b)) cut along the arc a -> b.

R ~ z at infinity. Branch decisions use the lens enclosed by the cut and the segment
[b, a]: inside it R = d S(zeta), elsewhere the sign follows Im zeta.
"""
from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from app.config import settings
from app.constant import Provenance, RootSide
from app.core.errors import NoConvergence, OnCut, PoleHit
from app.models.apparatus import EndpointPair
from app.models.scheme import InterpolationScheme
from app.services.scheme_service import build_scheme
from app.services.trajectory_service import trace_gamma1
from app.utils.bigcomplex import BigComplex, two_pow
from app.utils.distance import point_polyline_distance
from app.utils.geofence import points_in_polygon
from app.utils.newton import newton_solve
from app.utils.quadrature import contour_quadrature

logger = logging.getLogger(__name__)

# the cut and the lens are float polylines, so side tests closer than this are not trusted
CUT_FLOAT_RESOLUTION = 1e-13


def cut_polyline(a, b) -> np.ndarray:
    """Image of the traced gamma1 under the affine map sending i -> a, -i -> b."""
    a, b = complex(a), complex(b)
    c, d = (a + b) / 2, (a - b) / 2
    vertices = c - 1j * d * trace_gamma1().vertices
    vertices[0], vertices[-1] = a, b
    return vertices


def make_pair(a, b, provenance: Provenance, t, residual_a=0, residual_b=0) -> EndpointPair:
    ctx = a.context
    cut = cut_polyline(a, b)
    return EndpointPair(
        a=a, b=b, provenance=provenance,
        residual_a=ctx.mpf(residual_a), residual_b=ctx.mpf(residual_b), t=ctx.mpf(t),
        cut=cut, lens=cut.copy(),
    )


def _in_lens(z, pair: EndpointPair) -> bool:
    return bool(points_in_polygon(np.array([complex(z)]), pair.lens)[0])


def _sqrt_one_minus(zeta, ctx):
    """sqrt(1 - zeta^2), principal except on the rays zeta real, |zeta| > 1 (limit from below)."""
    if zeta.imag == 0 and abs(zeta.real) > 1:
        sign = 1 if zeta.real > 0 else -1
        return ctx.mpc(0, sign) * ctx.sqrt(zeta.real ** 2 - 1)
    return ctx.sqrt(1 - zeta * zeta)


def R_fn(z, pair: EndpointPair, side: RootSide | None = None) -> BigComplex:
    ctx = pair.a.context
    z = ctx.mpc(z)
    c = (pair.a + pair.b) / 2
    d = (pair.a - pair.b) / 2
    zeta = (z - c) / d
    dS = d * ctx.mpc(0, -1) * _sqrt_one_minus(zeta, ctx)
    if side is not None:
        return dS if RootSide(side) == RootSide.PLUS else -dS
    # R jumps on the polyline itself, not on the exact trajectory it approximates
    gap = point_polyline_distance(complex(z), pair.cut)
    near = max(float(two_pow(ctx, -ctx.prec // 8)), CUT_FLOAT_RESOLUTION)
    if gap < near and abs(z - pair.a) > near and abs(z - pair.b) > near:
        raise OnCut(f"z = {ctx.nstr(z, 8)} lies on the cut; request a boundary side")
    if zeta.imag <= 0 or _in_lens(z, pair):
        return dS
    return -dS


def w1(s, pair: EndpointPair, side: RootSide | None = None) -> BigComplex:
    return -s + R_fn(s, pair, side)


def w2(s, pair: EndpointPair, side: RootSide | None = None) -> BigComplex:
    return -s - R_fn(s, pair, side)


@lru_cache(maxsize=128)
def point_roots(pair: EndpointPair, scheme: InterpolationScheme) -> tuple:
    """R at the 2n scaled points entering the sums."""
    return tuple(R_fn(zj, pair) for zj in scheme.others)


def h_fn(z, pair: EndpointPair, scheme: InterpolationScheme) -> BigComplex:
    """a + b - 2z + (1/n) sum_j R(z_j) / (z_j - z)."""
    ctx = scheme.ctx
    z = ctx.mpc(z)
    roots = point_roots(pair, scheme)
    terms = []
    for zj, rj in zip(scheme.others, roots):
        if zj == z:
            raise PoleHit(f"h has a pole at the scheme point {ctx.nstr(z, 8)}")
        terms.append(rj / (zj - z))
    return pair.a + pair.b - 2 * z + ctx.fsum(terms) / scheme.n


def first_order_endpoints(scheme: InterpolationScheme) -> tuple[BigComplex, BigComplex]:
    """i(1 + alpha1 t), -i(1 + beta1 t): both endpoints shift by the mean of the 2n scaled points."""
    ctx = scheme.ctx
    if not scheme.others:
        return ctx.mpc(0, 1), ctx.mpc(0, -1)
    mean = ctx.fsum(scheme.others) / len(scheme.others)
    return ctx.mpc(0, 1) + mean, ctx.mpc(0, -1) + mean


def solve_endpoints(scheme: InterpolationScheme, precision: int | None = None) -> EndpointPair:
    if precision is not None and precision != scheme.precision:
        scheme = build_scheme(scheme.points, scheme.n1, scheme.n2, precision)
    ctx = scheme.ctx
    t = scheme.t
    if scheme.is_pade:
        return make_pair(ctx.mpc(0, 1), ctx.mpc(0, -1), Provenance.PADE_EXACT, t)
    if t >= 0.5:
        logger.warning("t = %s is large; endpoint Newton may leave the small-t branch", ctx.nstr(t, 4))

    def F(x):
        pair = make_pair(x[0], x[1], Provenance.NEWTON_SOLVED, t)
        return [h_fn(x[0], pair, scheme), h_fn(x[1], pair, scheme)]

    try:
        a, b = newton_solve(F, [ctx.mpc(0, 1), ctx.mpc(0, -1)], ctx=ctx)
    except NoConvergence as exc:
        raise NoConvergence(f"endpoint system: {exc}", iterations=exc.iterations, t=float(t)) from exc
    res_a, res_b = (abs(v) for v in F([a, b]))
    logger.info("endpoints solved at t=%s: |h(a)|=%s |h(b)|=%s",
                ctx.nstr(t, 4), ctx.nstr(res_a, 3), ctx.nstr(res_b, 3))
    return make_pair(a, b, Provenance.NEWTON_SOLVED, t, res_a, res_b)


def psi_density(z, pair: EndpointPair, scheme: InterpolationScheme) -> BigComplex:
    """-h(z) / (2 pi i R_+(z)) on the cut."""
    ctx = scheme.ctx
    return -h_fn(z, pair, scheme) / (2 * ctx.pi * ctx.mpc(0, 1) * R_fn(z, pair, RootSide.PLUS))


def graded_path(start, end, levels: int, ctx) -> list:
    """start + (end - start) 2^-k for k = levels..0, refining geometrically toward start."""
    return [start] + [start + (end - start) * two_pow(ctx, -k) for k in range(levels, -1, -1)]


def mass_path(pair: EndpointPair, ctx, pieces: int = 12, levels: int = 60) -> list:
    """Coarse copy of the cut from a to b, graded toward both endpoints."""
    cut = pair.cut
    idx = np.unique(np.linspace(0, len(cut) - 1, pieces + 1).round().astype(int))
    inner = [ctx.mpc(complex(v)) for v in cut[idx[1:-1]]]
    head = graded_path(pair.a, inner[0], levels, ctx)
    tail = graded_path(pair.b, inner[-1], levels, ctx)[::-1]
    return head + inner[1:-1] + tail


def psi_mass(pair: EndpointPair, scheme: InterpolationScheme, tol: float = 1e-12) -> BigComplex:
    """Integral of psi along the cut; equals 1."""
    ctx = scheme.ctx
    path = mass_path(pair, ctx)
    # drop the endpoints themselves: R vanishes there
    path = path[1:-1]
    return contour_quadrature(lambda s: psi_density(s, pair, scheme), path,
                              nodes_per_segment=settings.QUAD_NODES, tol=tol, ctx=ctx)
