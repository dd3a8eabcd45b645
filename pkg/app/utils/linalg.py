from __future__ import annotations

import logging
from typing import Sequence

from app.config import settings
from app.core.errors import NumericalRankDeficiency
from app.utils.bigcomplex import BigComplex, context, two_pow

logger = logging.getLogger(__name__)


def _rows_of(M) -> list[list]:
    if hasattr(M, "rows") and hasattr(M, "cols") and not isinstance(M, list):
        return [[M[i, j] for j in range(M.cols)] for i in range(M.rows)]
    return [list(r) for r in M]


def _context_of(A):
    for r in A:
        for x in r:
            if hasattr(x, "context"):
                return x.context
    return context(settings.PRECISION_BITS)


def max_norm(values: Sequence) -> BigComplex:
    return max(abs(v) for v in values)


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> list:
    ctx = v[0].context
    return [ctx.fsum(a * b for a, b in zip(r, v)) for r in rows]


def null_vector(M, ctx=None) -> list:
    """
    Null vector of a rows x (rows+1) matrix by elimination with full pivoting.

    The free column is the one left after `rows` pivots; a further pivot below
    2^(-prec/2) of the first pivot means the null space is at least 2-dimensional.
    """
    A = _rows_of(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if cols != rows + 1:
        raise ValueError(f"null_vector expects cols = rows + 1, got {rows}x{cols}")
    if ctx is None:
        ctx = _context_of(A)
    A = [[ctx.mpc(x) for x in r] for r in A]
    perm = list(range(cols))
    threshold = two_pow(ctx, -ctx.prec // 2)
    first = None

    for k in range(rows):
        best, bi, bj = ctx.mpf(-1), k, k
        for i in range(k, rows):
            row = A[i]
            for j in range(k, cols):
                m = abs(row[j])
                if m > best:
                    best, bi, bj = m, i, j
        if first is None:
            first = best
        if best == 0 or best <= threshold * first:
            raise NumericalRankDeficiency(
                f"pivot {k} underflows the rank threshold (null space dimension >= 2)",
                pivots=k,
            )
        A[k], A[bi] = A[bi], A[k]
        if bj != k:
            for r in A:
                r[k], r[bj] = r[bj], r[k]
            perm[k], perm[bj] = perm[bj], perm[k]
        pivot_row = A[k]
        inv = 1 / pivot_row[k]
        for i in range(k + 1, rows):
            row = A[i]
            f = row[k] * inv
            if f == 0:
                continue
            row[k] = ctx.mpc(0)
            for j in range(k + 1, cols):
                row[j] -= f * pivot_row[j]

    y = [ctx.mpc(0)] * cols
    y[rows] = ctx.mpc(1)
    for k in range(rows - 1, -1, -1):
        row = A[k]
        s = ctx.fsum(row[j] * y[j] for j in range(k + 1, cols))
        y[k] = -s / row[k]

    v = [ctx.mpc(0)] * cols
    for k in range(cols):
        v[perm[k]] = y[k]
    scale = max_norm(v)
    v = [x / scale for x in v]
    logger.debug("null_vector: %dx%d solved at %d bits", rows, cols, ctx.prec)
    return v


def relative_residual(M, v) -> BigComplex:
    """||Mv|| / (||M|| ||v||) in max norms."""
    A = _rows_of(M)
    r = mat_vec(A, v)
    m_norm = max(max_norm(row) for row in A)
    if m_norm == 0:
        return v[0].context.mpf(0)
    return max_norm(r) / (m_norm * max_norm(v))


def residual_bound(ctx) -> BigComplex:
    return two_pow(ctx, -(ctx.prec - settings.GUARD_BITS))
