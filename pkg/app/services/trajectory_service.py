"""
Critical trajectories of (z^2 + 1) z^{-2} dz^2 through +-i.

eta(z) = sqrt(z^2 + 1) + log(z / (1 + sqrt(z^2 + 1))) with principal branches;
eta'(z) = sqrt(z^2 + 1) / z. The arc gamma1 is the level set Re eta = 0 joining
i and -i through the left half-plane, gamma2 its mirror image z -> -conj(z).
Curves are traced in double precision.
"""
from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from app.config import settings
from app.constant import Region
from app.core.errors import BranchConfusion, TraceStalled
from app.models.geometry import Contour
from app.utils.bigcomplex import context
from app.utils.distance import hausdorff, directed_hausdorff, point_polyline_distance
from app.utils.geofence import point_in_polygon
from app.utils.newton import newton_solve

logger = logging.getLogger(__name__)

# of the three directions leaving i, the one into the left half-plane
START_ANGLE = 7 * np.pi / 6
BOUNDARY_TOL = 1e-9
MAX_SUBDIVISIONS = 12


def eta(z):
    """Principal eta for python/numpy complex input (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    s = np.sqrt(z * z + 1)
    return s + np.log(z / (1 + s))


def eta_prime(z):
    z = np.asarray(z, dtype=complex)
    return np.sqrt(z * z + 1) / z


def eta_mp(z, ctx=None):
    ctx = ctx or context(settings.PRECISION_BITS)
    z = ctx.mpc(z)
    s = ctx.sqrt(z * z + 1)
    return s + ctx.log(z / (1 + s))


@lru_cache(maxsize=8)
def c0_root(precision: int | None = None):
    """Positive real zero of eta, 0.66274..."""
    ctx = context(precision or settings.PRECISION_BITS)
    x = newton_solve(lambda v: [eta_mp(v[0], ctx)], [ctx.mpf("0.5")],
                     jacobian=lambda v: ctx.matrix([[ctx.sqrt(v[0] ** 2 + 1) / v[0]]]), ctx=ctx)
    return x[0].real


def _correct(x: float, y: float, tol: float) -> float:
    """Newton on Re eta(x + iy) = 0 in x with y held fixed."""
    for _ in range(60):
        z = complex(x, y)
        f = float(eta(z).real)
        slope = float(eta_prime(z).real)
        if abs(slope) < 1e-14:
            raise TraceStalled(f"level curve is horizontal near {z:.6g}")
        dx = -f / slope
        x += dx
        if abs(dx) <= 1e-15 * max(1.0, abs(x)) or abs(f) <= tol * 1e-3:
            break
    else:
        raise TraceStalled(f"corrector did not converge at height {y:.6g}")
    residual = abs(float(eta(complex(x, y)).real))
    if residual > 10 * tol or x > 0:
        raise BranchConfusion(f"corrector left the level set at height {y:.6g} (|Re eta|={residual:.3g})")
    return x


def _step_to(v: complex, y: float, tol: float) -> complex:
    tangent = 1j * np.conj(complex(eta_prime(v)))
    if tangent.imag > 0:
        tangent = -tangent
    if abs(tangent.imag) < 1e-14:
        raise TraceStalled(f"tangent is horizontal at {v:.6g}")
    predicted = v.real + (y - v.imag) * tangent.real / tangent.imag
    x = _correct(predicted, y, tol)
    if abs(x - predicted) > max(abs(y - v.imag), 1e-8) * 4:
        raise BranchConfusion(f"corrector jumped from {predicted:.6g} to {x:.6g} at height {y:.6g}")
    return complex(x, y)


def _advance(v: complex, y: float, step: float, tol: float, depth: int = 0) -> list[complex]:
    """Vertices from v down to height y, subdividing heights until spacing <= step."""
    w = _step_to(v, y, tol)
    if abs(w - v) <= step:
        return [w]
    if depth >= MAX_SUBDIVISIONS:
        raise TraceStalled(f"cannot keep vertex spacing below {step} near {v:.6g}")
    pieces = int(np.ceil(abs(w - v) / step))
    out, cur = [], v
    for j in range(1, pieces + 1):
        yj = y if j == pieces else v.imag + (y - v.imag) * j / pieces
        out.extend(_advance(cur, yj, step, tol, depth + 1))
        cur = out[-1]
    return out


@lru_cache(maxsize=16)
def _upper_arc(step: float, tol: float, offset: float) -> tuple:
    start = 1j + offset * np.exp(1j * START_ANGLE)
    first = complex(_correct(start.real, start.imag, tol), start.imag)
    vertices = [1j, first]
    k = 1
    while True:
        y = 1.0 - k * step
        if y < step * 1e-6:
            y = 0.0
        vertices.extend(_advance(vertices[-1], y, step, tol))
        if y == 0.0:
            break
        k += 1
    return tuple(vertices)


def trace_gamma1(step: float | None = None, tol: float | None = None) -> Contour:
    """gamma1 from i to -i through the left half-plane, conjugation symmetric."""
    step = step or settings.TRACE_STEP
    tol = tol or settings.TRACE_TOL
    upper = np.array(_upper_arc(step, tol, settings.TRACE_START_OFFSET), dtype=complex)
    lower = np.conj(upper[-2::-1])
    vertices = np.concatenate([upper, lower])
    vertices.setflags(write=False)
    logger.debug("gamma1 traced with %d vertices (step %g)", len(vertices), step)
    return Contour(vertices, closed=False, labels=("i", "-i"), step=step)


def trace_gamma2(step: float | None = None, tol: float | None = None) -> Contour:
    """Mirror of gamma1 under z -> -conj(z), oriented from -i to i."""
    g1 = trace_gamma1(step, tol)
    mirrored = Contour(-np.conj(g1.vertices), closed=False, labels=g1.labels, step=g1.step)
    return mirrored.reversed()


def vertical_rays(length: float | None = None, step: float | None = None) -> tuple[Contour, Contour]:
    """The two critical rays [i, i(1+L)] and [-i, -i(1+L)]."""
    length = length or settings.RAY_LENGTH
    step = step or max(settings.TRACE_STEP, length / 1000)
    count = int(np.ceil(length / step)) + 1
    heights = 1.0 + np.linspace(0.0, length, count)
    up = Contour(1j * heights, labels=("i", "i*inf"), step=step)
    down = Contour(-1j * heights, labels=("-i", "-i*inf"), step=step)
    return up, down


def gamma_polygon(step: float | None = None, tol: float | None = None) -> Contour:
    """Closed boundary of D0: gamma1 (i -> -i) followed by gamma2 (-i -> i)."""
    g1 = trace_gamma1(step, tol)
    g2 = trace_gamma2(step, tol)
    vertices = np.concatenate([g1.vertices, g2.vertices[1:-1]])
    return Contour(vertices, closed=True, labels=("i", "i"), step=g1.step)


def crossing(contour: Contour) -> complex:
    """Real-axis crossing of a traced arc (its middle vertex)."""
    return complex(contour.vertices[len(contour.vertices) // 2])


def step_halving_deviation(step: float | None = None, tol: float | None = None) -> float:
    """Largest horizontal gap between the traces at step and step/2 over shared heights."""
    step = step or settings.TRACE_STEP
    tol = tol or settings.TRACE_TOL
    coarse = _upper_arc(step, tol, settings.TRACE_START_OFFSET)
    fine = {round(v.imag, 12): v.real for v in _upper_arc(step / 2, tol, settings.TRACE_START_OFFSET)}
    gaps = [abs(v.real - fine[round(v.imag, 12)]) for v in coarse if round(v.imag, 12) in fine]
    return max(gaps)


def classify_region(z: complex, step: float | None = None, tol: float | None = None) -> Region:
    z = complex(z)
    if z == 0:
        return Region.D0
    if z.real == 0 and abs(z.imag) >= 1:
        return Region.ON_BOUNDARY
    level = float(eta(z).real)
    if abs(level) <= BOUNDARY_TOL:
        return Region.ON_BOUNDARY
    if level < 0:
        region = Region.D0
    else:
        region = Region.D1INF if z.real < 0 else Region.D2INF

    polygon = gamma_polygon(step, tol).vertices
    inside = point_in_polygon(z, polygon)
    if inside != (region == Region.D0):
        gap = point_polyline_distance(z, np.append(polygon, polygon[:1]))
        if gap > 1e-3:
            raise BranchConfusion(f"crossing count and sign of Re eta disagree at {z}")
    return region


def hausdorff_to_contour(points, contour: Contour) -> tuple[float, float]:
    """(directed points -> contour, symmetric) Hausdorff distances."""
    pts = np.asarray(points, dtype=complex)
    return directed_hausdorff(pts, contour.vertices), hausdorff(pts, contour.vertices)
