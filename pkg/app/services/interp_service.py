"""
Rational interpolants of e^z: Hermite system, normalization, remainder and checks.

Unknowns are the coefficients of P and Q in the scaled variable (p_m (2n)^m), which
keeps columns of comparable size when the points grow with n.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Sequence

import numpy as np

from app.config import settings
from app.constant import Normalization
from app.core.errors import DegenerateScheme, NumericalRankDeficiency, PreconditionViolation
from app.models.geometry import Contour
from app.models.interpolant import RationalInterpolant
from app.models.scheme import InterpolationScheme
from app.services.scheme_service import build_scheme
from app.utils.bigcomplex import BigComplex, two_pow
from app.utils.linalg import max_norm, null_vector
from app.utils.polynomial import Polynomial
from app.utils.quadrature import contour_quadrature
from app.utils.roots import poly_roots

logger = logging.getLogger(__name__)


def _at_precision(scheme: InterpolationScheme, precision: int | None) -> InterpolationScheme:
    if precision is None or precision == scheme.precision:
        return scheme
    return build_scheme(scheme.points, scheme.n1, scheme.n2, precision)


def hermite_rows(scheme: InterpolationScheme) -> list[list]:
    """
    One row per condition: Taylor coefficient k of p + q e^z at z_j, columns in the
    scaled basis, each row divided by its max modulus.
    """
    ctx = scheme.ctx
    n1, n2 = scheme.n1, scheme.n2
    s = ctx.mpf(max(scheme.two_n, 1))
    inv_fact = [ctx.mpf(1) / factorial(k) for k in range(scheme.total + 1)]
    col_scale = [1 / s ** m for m in range(max(n1, n2) + 1)]
    rows = []
    for z, mult in scheme.points:
        pw = [ctx.mpc(1)]
        for _ in range(max(n1, n2)):
            pw.append(pw[-1] * z)
        ez = ctx.exp(z)
        for k in range(mult):
            row = []
            for m in range(n1 + 1):
                entry = comb(m, k) * pw[m - k] if m >= k else ctx.mpc(0)
                row.append(entry * col_scale[m])
            for m in range(n2 + 1):
                acc = ctx.fsum(comb(m, i) * pw[m - i] * inv_fact[k - i] for i in range(min(k, m) + 1))
                row.append(ez * acc * col_scale[m])
            scale = max_norm(row)
            rows.append([x / scale for x in row] if scale != 0 else row)
    return rows


def _split(scheme: InterpolationScheme, v: Sequence) -> tuple[Polynomial, Polynomial]:
    s = scheme.ctx.mpf(max(scheme.two_n, 1))
    p = [v[m] / s ** m for m in range(scheme.n1 + 1)]
    q = [v[scheme.n1 + 1 + m] / s ** m for m in range(scheme.n2 + 1)]
    return Polynomial(tuple(p)), Polynomial(tuple(q))


def _normalize(scheme: InterpolationScheme, p: Polynomial, q: Polynomial):
    ctx = scheme.ctx
    q0 = q.coeffs[0]
    if abs(q0) > two_pow(ctx, -ctx.prec // 4) * q.norm():
        return p.scale_by(1 / q0), q.scale_by(1 / q0), Normalization.Q_AT_ZERO_IS_ONE
    if not q.is_zero():
        logger.warning("q(0) vanishes numerically; normalizing Q(z) = q(2n z) to be monic")
        lead = q.scaled(max(scheme.two_n, 1)).leading
        return p.scale_by(1 / lead), q.scale_by(1 / lead), Normalization.Q_SCALED_MONIC
    logger.warning("q vanishes identically; keeping the raw null vector")
    return p, q, Normalization.RAW_NULL_VECTOR


def solve_interpolant(scheme: InterpolationScheme, precision: int | None = None) -> RationalInterpolant:
    scheme = _at_precision(scheme, precision)
    rows = hermite_rows(scheme)
    try:
        v = null_vector(rows, scheme.ctx)
    except NumericalRankDeficiency as exc:
        raise DegenerateScheme(
            f"interpolation problem of type ({scheme.n1}, {scheme.n2}) is degenerate: {exc}"
        ) from exc
    p, q = _split(scheme, v)
    p, q, how = _normalize(scheme, p, q)
    logger.info("solved type (%d, %d) interpolant at %d bits (%s)",
                scheme.n1, scheme.n2, scheme.precision, how.value)
    return RationalInterpolant(p, q, scheme.n1, scheme.n2, how, scheme)


def remainder(r: RationalInterpolant, z) -> BigComplex:
    """p(z) e^{-z/2} + q(z) e^{z/2}."""
    ctx = r.scheme.ctx
    z = ctx.mpc(z)
    half = ctx.exp(z / 2)
    return r.p(z) / half + r.q(z) * half


def scaled_remainder(r: RationalInterpolant, z) -> BigComplex:
    """E_n(z) = P(z) e^{-nz} + Q(z) e^{nz}."""
    return remainder(r, r.scale * r.scheme.ctx.mpc(z))


def approximation_error(r: RationalInterpolant, z) -> BigComplex:
    """e^z + r(z); r approximates -e^z."""
    ctx = r.scheme.ctx
    z = ctx.mpc(z)
    return ctx.exp(z) + r.p(z) / r.q(z)


def divided_differences(f: Callable, nodes: Sequence) -> list:
    """[f[x0], f[x0,x1], ..., f[x0..x_{m-1}]] for pairwise distinct nodes."""
    table = [f(x) for x in nodes]
    out = [table[0]]
    for level in range(1, len(nodes)):
        table = [
            (table[i + 1] - table[i]) / (nodes[i + level] - nodes[i])
            for i in range(len(table) - 1)
        ]
        out.append(table[0])
    return out


def interpolation_defect(r: RationalInterpolant, scheme: InterpolationScheme, radius) -> BigComplex:
    """
    Largest divided difference of order < m of p + q e^z over m copies of each
    point spread on a circle of the given radius.
    """
    ctx = scheme.ctx
    radius = ctx.mpf(radius)

    def F(z):
        return r.p(z) + r.q(z) * ctx.exp(z)

    worst = ctx.mpf(0)
    for z, m in scheme.points:
        if m == 1:
            nodes = [z]
        else:
            nodes = [z + radius * ctx.expjpi(ctx.mpf(2 * k) / m) for k in range(m)]
        worst = max(worst, max(abs(d) for d in divided_differences(F, nodes)))
    return worst


def coefficient_vector(r: RationalInterpolant) -> list:
    ctx = r.scheme.ctx
    s = ctx.mpf(r.scale)
    p = list(r.p.coeffs) + [ctx.mpc(0)] * (r.n1 + 1 - len(r.p.coeffs))
    q = list(r.q.coeffs) + [ctx.mpc(0)] * (r.n2 + 1 - len(r.q.coeffs))
    return [c * s ** m for m, c in enumerate(p)] + [c * s ** m for m, c in enumerate(q)]


def residual_check(r: RationalInterpolant, scheme: InterpolationScheme | None = None) -> BigComplex:
    """max over rows |row . c| / (|row| |c|) with c the coefficients of r."""
    scheme = scheme or r.scheme
    ctx = scheme.ctx
    c = coefficient_vector(r)
    c_norm = max_norm(c)
    worst = ctx.mpf(0)
    for row in hermite_rows(scheme):
        row_norm = max_norm(row)
        if row_norm == 0:
            continue
        val = abs(ctx.fsum(a * b for a, b in zip(row, c)))
        worst = max(worst, val / (row_norm * c_norm))
    return worst


def polygon_circle(radius: float, edges: int) -> Contour:
    """Closed regular polygon inscribed in the circle of the given radius."""
    vertices = radius * np.exp(2j * np.pi * np.arange(edges) / edges)
    return Contour(vertices, closed=True, labels=("circle", "circle"))


def orthogonality_defect(r: RationalInterpolant, scheme: InterpolationScheme, j: int, radius) -> BigComplex:
    """Contour integral of z^j P(z) e^{-2nz} / Omega(z) around the scheme; zero for j < n."""
    ctx = scheme.ctx
    n = scheme.two_n // 2
    if not 0 <= j <= n:
        raise PreconditionViolation(f"moment index j={j} outside 0..{n}")
    edges = settings.QUAD_EDGES
    radius = ctx.mpf(radius)
    inner = radius * ctx.cos(ctx.pi / edges)
    if any(abs(z) >= inner for z in scheme.scaled):
        raise PreconditionViolation(f"contour of radius {ctx.nstr(radius, 5)} does not enclose the scaled points")
    P = r.P

    def f(z):
        return z ** j * P(z) * ctx.exp(-scheme.two_n * z) / scheme.omega_scaled(z)

    circle = polygon_circle(float(radius), edges)
    scale = max(abs(f(ctx.mpc(v))) for v in circle.vertices) * 2 * ctx.pi * radius
    tol = two_pow(ctx, -ctx.prec // 2) * scale
    return contour_quadrature(f, circle, tol=tol, ctx=ctx)


@dataclass(frozen=True)
class RootSet:
    zeros: list
    poles: list
    scaled_zeros: list
    scaled_poles: list
    min_modulus: BigComplex | None


def zeros_poles(r: RationalInterpolant) -> RootSet:
    zeros = poly_roots(r.p) if r.p.degree >= 1 else []
    poles = poly_roots(r.q) if r.q.degree >= 1 else []
    s = r.scale
    every = zeros + poles
    return RootSet(
        zeros=zeros,
        poles=poles,
        scaled_zeros=[z / s for z in zeros],
        scaled_poles=[z / s for z in poles],
        min_modulus=min((abs(z) for z in every), default=None),
    )
