from __future__ import annotations

import logging
from typing import Callable, Sequence

from app.config import settings
from app.core.errors import NoConvergence, SingularJacobian
from app.utils.bigcomplex import BigComplex, big, context, two_pow

logger = logging.getLogger(__name__)


def _norm(values) -> BigComplex:
    return max(abs(v) for v in values)


def finite_difference_jacobian(F: Callable, x: list, fx: list, ctx) -> "object":
    """Forward differences with step 2^(-prec/3) scaled by max(1, |x_k|)."""
    base = two_pow(ctx, -ctx.prec // 3)
    m = len(fx)
    J = ctx.matrix(m, len(x))
    for k in range(len(x)):
        h = base * max(1, abs(x[k]))
        shifted = list(x)
        shifted[k] = x[k] + h
        fk = F(shifted)
        for i in range(m):
            J[i, k] = (fk[i] - fx[i]) / h
    return J


def newton_solve(
    F: Callable[[list], Sequence],
    x0: Sequence,
    jacobian: Callable | None = None,
    ctx=None,
    max_iter: int | None = None,
    tol=None,
) -> list[BigComplex]:
    """
    Damped Newton on a holomorphic system F(x) = 0.

    Stops when max|F| < 2^(-prec+96) (or `tol`); backtracking halves the step until
    the residual decreases.
    """
    ctx = ctx or context(settings.PRECISION_BITS)
    max_iter = max_iter or settings.NEWTON_MAX_ITER
    tol = tol if tol is not None else two_pow(ctx, -ctx.prec + 96)
    x = [big(v, ctx) for v in x0]
    fx = list(F(x))
    res = _norm(fx)

    for it in range(max_iter):
        if res < tol:
            logger.debug("newton: converged after %d steps, residual %s", it, ctx.nstr(res, 5))
            return x
        J = jacobian(x) if jacobian else finite_difference_jacobian(F, x, fx, ctx)
        try:
            step = ctx.lu_solve(J, ctx.matrix([-v for v in fx]))
        except ZeroDivisionError as exc:
            raise SingularJacobian(f"jacobian singular at iteration {it}") from exc

        lam = ctx.mpf(1)
        for _ in range(settings.NEWTON_MAX_HALVINGS):
            trial = [x[k] + lam * step[k] for k in range(len(x))]
            ft = list(F(trial))
            rt = _norm(ft)
            if rt < res:
                x, fx, res = trial, ft, rt
                break
            lam /= 2
        else:
            if res < tol * 2 ** 32:
                # residual is already at rounding level; no descent direction left
                return x
            raise NoConvergence("newton line search failed", iterations=it)

    if res < tol:
        return x
    raise NoConvergence(f"newton did not reach {ctx.nstr(tol, 3)}", iterations=max_iter)
