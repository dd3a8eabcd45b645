from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

import mpmath

from app.utils.bigcomplex import BigComplex, big


@dataclass(frozen=True)
class Polynomial:
    """Ascending coefficients in one mpmath context; trailing zeros are trimmed."""

    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        if not cs:
            raise ValueError("a polynomial needs at least one coefficient")
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_values(cls, values: Iterable, ctx: mpmath.MPContext) -> "Polynomial":
        return cls(tuple(big(v, ctx) for v in values))

    @classmethod
    def from_roots(cls, roots: Sequence[BigComplex], ctx: mpmath.MPContext, leading=1):
        cs = [big(leading, ctx)]
        for r in roots:
            nxt = [ctx.mpc(0)] * (len(cs) + 1)
            for k, c in enumerate(cs):
                nxt[k + 1] += c
                nxt[k] -= r * c
            cs = nxt
        return cls(tuple(cs))

    @property
    def ctx(self) -> mpmath.MPContext:
        return self.coeffs[0].context

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> BigComplex:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.degree == 0 and self.coeffs[0] == 0

    def norm(self):
        return max(abs(c) for c in self.coeffs)

    def __call__(self, z) -> BigComplex:
        return poly_eval(self, z)

    def derivatives(self, z, m: int) -> list:
        return poly_eval_derivatives(self, z, m)

    def scaled(self, factor) -> "Polynomial":
        """z -> p(factor * z)."""
        out, power = [], big(1, self.ctx)
        for c in self.coeffs:
            out.append(c * power)
            power *= factor
        return Polynomial(tuple(out))

    def scale_by(self, s) -> "Polynomial":
        return Polynomial(tuple(c * s for c in self.coeffs))

    def reflected(self) -> "Polynomial":
        return self.scaled(-1)

    def monic(self) -> "Polynomial":
        return self.scale_by(1 / self.leading)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        ctx = self.ctx
        out = [ctx.mpc(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        ctx = self.ctx
        size = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ctx.mpc(0)] * (size - len(self.coeffs))
        b = list(other.coeffs) + [ctx.mpc(0)] * (size - len(other.coeffs))
        return Polynomial(tuple(x - y for x, y in zip(a, b)))


def poly_eval(p: Polynomial, z) -> BigComplex:
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * z + c
    return acc


def poly_eval_derivatives(p: Polynomial, z, m: int) -> list:
    """[p(z), p'(z), ..., p^(m)(z)] in one Horner sweep."""
    ctx = p.ctx
    d = [ctx.mpc(0)] * (m + 1)
    for c in reversed(p.coeffs):
        for j in range(m, 0, -1):
            d[j] = d[j] * z + d[j - 1]
        d[0] = d[0] * z + c
    return [d[j] * factorial(j) for j in range(m + 1)]


def abs_eval(p: Polynomial, r) -> BigComplex:
    """Sum of |a_k| r^k, the scale of p(z) at |z| = r."""
    acc = abs(p.coeffs[-1])
    for c in reversed(p.coeffs[:-1]):
        acc = acc * r + abs(c)
    return acc
