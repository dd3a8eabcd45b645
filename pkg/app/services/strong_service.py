"""
Leading-order strong asymptotics of P, Q and E away from the cut and the endpoints.

u = sqrt(R / (z - a)) is the fourth root of (z - b)/(z - a) tending to 1 at infinity,
r+- = (u +- 1/u) / 2 and kappa = D_inf / D(z).
"""
from __future__ import annotations

import logging

from app.constant import Region, Which
from app.core.errors import WrongRegion
from app.models.apparatus import GApparatus
from app.models.interpolant import RationalInterpolant
from app.services.endpoint_service import R_fn
from app.services.gfunction_service import D_sq, g_explicit
from app.services.interp_service import scaled_remainder
from app.services.trajectory_service import classify_region
from app.utils.bigcomplex import BigComplex

logger = logging.getLogger(__name__)


def _r_pm(z, app: GApparatus):
    ctx = app.ctx
    u = ctx.sqrt(R_fn(z, app.pair) / (z - app.pair.a))
    return (u + 1 / u) / 2, (u - 1 / u) / 2


def _inside(which: Which, region: Region) -> bool:
    """Whether z lies in the domain where the first form of the prediction holds."""
    if which == Which.Q:
        return region == Region.D0
    if which == Which.E:
        return region == Region.D1INF
    return True


def strong_predict(z, app: GApparatus, which: Which | str, region: Region | str | None = None) -> BigComplex:
    ctx = app.ctx
    z = ctx.mpc(z)
    which = Which(which)
    actual = classify_region(complex(z))
    if actual == Region.ON_BOUNDARY:
        raise WrongRegion(f"{complex(z)} lies on a critical trajectory")
    if region is not None and Region(region) != actual:
        raise WrongRegion(f"{complex(z)} is in {actual.value}, not {Region(region).value}")

    scheme = app.scheme
    n = scheme.n
    r_plus, r_minus = _r_pm(z, app)
    d_sq = D_sq(z, app)
    kappa = ctx.sqrt(app.d_sq_inf / d_sq)
    g = g_explicit(z, app)

    if which == Which.P:
        return r_plus * kappa * ctx.exp(n * g)

    i_omega = ctx.mpc(0, 1) * scheme.omega_scaled(z)
    # D_inf D(z) on the branch fixed by kappa
    d_prod = app.d_sq_inf / kappa
    if which == Which.Q:
        if _inside(which, actual):
            return -r_plus * kappa * ctx.exp(n * (g - 2 * z))
        return -i_omega * r_minus * d_prod * ctx.exp(-n * (g + app.two_ell))
    if _inside(which, actual):
        return r_plus * kappa * ctx.exp(n * (g - z))
    return -i_omega * r_minus * d_prod * ctx.exp(n * (z - g - app.two_ell))


def monic_interpolant(r: RationalInterpolant) -> RationalInterpolant:
    """r rescaled so that P(z) = p(2n z) is monic."""
    return r.scale_by(1 / r.P.leading)


def observed(z, r: RationalInterpolant, which: Which | str) -> BigComplex:
    """P, Q or E of the P-monic interpolant at z."""
    which = Which(which)
    r = monic_interpolant(r)
    z = r.scheme.ctx.mpc(z)
    if which == Which.P:
        return r.P(z)
    if which == Which.Q:
        return r.Q(z)
    return scaled_remainder(r, z)


def strong_ratio(z, app: GApparatus, r: RationalInterpolant, which: Which | str) -> BigComplex:
    """observed / predicted; tends to 1 as n grows."""
    ratio = observed(z, r, which) / strong_predict(z, app, which)
    logger.debug("strong ratio %s at %s: %s", Which(which).value, complex(z), complex(ratio))
    return ratio
