"""
Precision-bound complex scalars.

Every computation runs inside one mpmath context per precision; values created by
`big()` belong to that context, so arithmetic between them stays at its precision.
Contexts are cached and shared; callers never change `ctx.prec` outside a
`workprec`/`extraprec` block.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Any

import mpmath

from app.core.errors import PrecisionError

# an mpc of some MPContext (the concrete class is created per context)
BigComplex = Any

MIN_KERNEL_BITS = 64


@lru_cache(maxsize=None)
def context(bits: int) -> mpmath.MPContext:
    if bits < MIN_KERNEL_BITS:
        raise PrecisionError(f"precision {bits} bits is below {MIN_KERNEL_BITS}")
    ctx = mpmath.MPContext()
    ctx.prec = bits
    return ctx


def big(value, ctx: mpmath.MPContext) -> BigComplex:
    """Lift ints, floats, complex, decimal strings or other mp values into ctx."""
    if isinstance(value, str):
        value = value.strip().replace(" ", "")
    z = ctx.convert(value)
    if isinstance(z, ctx.mpc):
        return z
    return ctx.mpc(z)


def parse_decimal(re: str, im: str, ctx: mpmath.MPContext) -> BigComplex:
    return ctx.mpc(ctx.mpf(re.strip()), ctx.mpf(im.strip()))


def to_decimal(x, digits: int) -> str:
    return mpmath.nstr(x, digits, min_fixed=-20, max_fixed=20)


def complex_to_decimals(z, digits: int) -> tuple[str, str]:
    return to_decimal(z.real, digits), to_decimal(z.imag, digits)


def precision_of(x) -> int:
    return x.context.prec


def two_pow(ctx: mpmath.MPContext, exponent: int | float):
    return ctx.ldexp(ctx.mpf(1), int(exponent))


def same_context(*values) -> mpmath.MPContext:
    """Context shared by the operands; mixing precisions is refused."""
    ctxs = {v.context.prec for v in values if hasattr(v, "context")}
    if len(ctxs) > 1:
        raise PrecisionError(f"operands carry different precisions {sorted(ctxs)}")
    for v in values:
        if hasattr(v, "context"):
            return v.context
    raise PrecisionError("no multiprecision operand to take the precision from")
