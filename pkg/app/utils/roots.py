"""
Simultaneous polynomial root finding (Ehrlich-Aberth, Gauss-Seidel updates).

Clusters of a multiple root are returned unseparated; callers decide multiplicity.
"""
from __future__ import annotations

import logging

from app.config import settings
from app.core.errors import NoConvergence
from app.utils.bigcomplex import BigComplex, two_pow
from app.utils.polynomial import Polynomial, abs_eval, poly_eval_derivatives

logger = logging.getLogger(__name__)

EVAL_EXTRA_BITS = 96


def cauchy_bound(p: Polynomial):
    """Unique positive root of |a_d| x^d - sum_{k<d} |a_k| x^k (all roots lie inside)."""
    ctx = p.ctx
    d = p.degree
    lead = abs(p.leading)
    c = [abs(a) / lead for a in p.coeffs[:-1]]
    fujiwara = max((ck ** (ctx.mpf(1) / (d - k)) for k, ck in enumerate(c) if ck > 0),
                   default=ctx.mpf(0))
    if fujiwara == 0:
        return ctx.mpf(0)

    def excess(x):
        return ctx.fsum(ck * x ** (k - d) for k, ck in enumerate(c)) - 1

    # the root lies in [fujiwara, 2 * fujiwara]; excess is decreasing in x
    lo, hi = fujiwara, 2 * fujiwara
    with ctx.workprec(64):
        for _ in range(48):
            mid = (lo + hi) / 2
            if excess(mid) > 0:
                lo = mid
            else:
                hi = mid
    return +hi


def _initial_guesses(p: Polynomial, radius) -> list:
    ctx = p.ctx
    golden = (ctx.sqrt(5) - 1) / 2
    out = []
    for k in range(p.degree):
        frac = k * golden - ctx.floor(k * golden)
        out.append(radius * ctx.expjpi(2 * frac))
    return out


def poly_roots(p: Polynomial, max_iter: int | None = None) -> list[BigComplex]:
    ctx = p.ctx
    d = p.degree
    if d == 0:
        return []
    max_iter = max_iter or settings.ROOT_MAX_ITER
    if d == 1:
        return [-p.coeffs[0] / p.coeffs[1]]

    radius = cauchy_bound(p)
    if radius == 0:
        return [ctx.mpc(0)] * d
    z = _initial_guesses(p, radius)
    step_tol = two_pow(ctx, -ctx.prec + 64) * radius
    backward_tol = two_pow(ctx, -ctx.prec - 32)

    for it in range(1, max_iter + 1):
        max_corr = ctx.mpf(0)
        settled = True
        for k in range(d):
            zk = z[k]
            with ctx.extraprec(EVAL_EXTRA_BITS):
                val, der = poly_eval_derivatives(p, zk, 1)
                scale = abs_eval(p, abs(zk))
                small = abs(val) <= backward_tol * scale
            if small:
                continue
            settled = False
            s = ctx.fsum(1 / (zk - z[j]) for j in range(d) if j != k)
            denom = der - val * s
            if denom == 0:
                corr = two_pow(ctx, -ctx.prec // 2) * radius
            else:
                corr = val / denom
            z[k] = zk - corr
            max_corr = max(max_corr, abs(corr))
        if settled or max_corr < step_tol:
            logger.debug("aberth: degree %d converged in %d sweeps", d, it)
            return [+r for r in z]

    raise NoConvergence(f"aberth iteration did not converge for degree {d}", iterations=max_iter)
