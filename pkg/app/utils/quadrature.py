from __future__ import annotations

import logging
from functools import lru_cache
from math import ceil, log2
from typing import Callable, Sequence

from mpmath.calculus.quadrature import GaussLegendre

from app.config import settings
from app.core.errors import ToleranceNotReached
from app.utils.bigcomplex import BigComplex, big, context, two_pow

logger = logging.getLogger(__name__)


def degree_for(nodes: int) -> int:
    """mpmath's Gauss-Legendre degree k carries 3 * 2^(k-1) nodes."""
    return max(1, ceil(log2(max(nodes, 3) / 3)) + 1)


@lru_cache(maxsize=64)
def gauss_legendre_nodes(bits: int, degree: int) -> tuple:
    ctx = context(bits)
    return tuple(GaussLegendre(ctx).calc_nodes(degree, bits))


def segment_rule(f: Callable, za, zb, nodes: tuple) -> BigComplex:
    mid = (za + zb) / 2
    half = (zb - za) / 2
    ctx = mid.context
    return half * ctx.fsum(w * f(mid + half * x) for x, w in nodes)


def _edges(vertices: Sequence, closed: bool) -> list[tuple]:
    pairs = list(zip(vertices[:-1], vertices[1:]))
    if closed and len(vertices) > 2:
        pairs.append((vertices[-1], vertices[0]))
    return pairs


def contour_quadrature(
    f: Callable,
    contour,
    nodes_per_segment: int | None = None,
    tol=None,
    cap: int | None = None,
    ctx=None,
) -> BigComplex:
    """
    Composite Gauss-Legendre along the polyline of `contour` (closing edge included
    for closed contours), doubling the node count until two estimates agree.

    `contour` is a Contour or a plain sequence of vertices (open polyline).
    """
    ctx = ctx or context(settings.PRECISION_BITS)
    vertices = getattr(contour, "vertices", contour)
    closed = bool(getattr(contour, "closed", False))
    verts = [big(v, ctx) for v in vertices]
    edges = _edges(verts, closed)

    nodes = nodes_per_segment or settings.QUAD_NODES
    cap = cap or settings.QUAD_MAX_NODES
    degree = degree_for(nodes)

    def estimate(deg: int):
        rule = gauss_legendre_nodes(ctx.prec, deg)
        return ctx.fsum(segment_rule(f, a, b, rule) for a, b in edges)

    prev = estimate(degree)
    err = None
    while 3 * 2 ** degree <= cap:
        degree += 1
        cur = estimate(degree)
        err = abs(cur - prev)
        target = tol if tol is not None else two_pow(ctx, -ctx.prec // 2) * max(abs(cur), 1)
        if err <= target:
            return cur
        prev = cur
    logger.warning("contour_quadrature: node cap %d reached, error %s", cap, err)
    raise ToleranceNotReached("quadrature did not reach the requested tolerance",
                              estimate=prev, error=err)
