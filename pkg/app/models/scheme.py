"""
Interpolation schemes: points with multiplicities plus the degree bounds (n1, n2).

The scaled variable uses 2n = n1 + n2, so ẑ = z / (n1 + n2); in the diagonal case
n1 = n2 = n this is the usual z / 2n.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import mpmath

from app.utils.bigcomplex import BigComplex, context


@dataclass(frozen=True)
class InterpolationScheme:
    points: tuple  # ((location, multiplicity), ...) with distinct locations
    n1: int
    n2: int
    precision: int

    @property
    def ctx(self) -> mpmath.MPContext:
        return context(self.precision)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.points)

    @property
    def two_n(self) -> int:
        return self.n1 + self.n2

    @property
    def n(self):
        """Half of n1 + n2 (equals n for diagonal schemes)."""
        return self.ctx.mpf(self.two_n) / 2

    @property
    def is_diagonal(self) -> bool:
        return self.n1 == self.n2

    @cached_property
    def rho(self):
        return max((abs(z) for z, _ in self.points), default=self.ctx.mpf(0))

    @property
    def is_pade(self) -> bool:
        return self.rho == 0

    @property
    def t(self):
        if self.two_n == 0:
            return self.ctx.mpf(0)
        return self.rho / self.n

    @cached_property
    def expanded(self) -> tuple:
        out = []
        for z, m in self.points:
            out.extend([z] * m)
        return tuple(out)

    @cached_property
    def scaled(self) -> tuple:
        scale = max(self.two_n, 1)
        return tuple(z / scale for z in self.expanded)

    @cached_property
    def anchor_index(self) -> int:
        """Index in `expanded` of ẑ₀: least modulus, then least real, then least imaginary part."""
        zs = self.expanded
        return min(range(len(zs)), key=lambda k: (abs(zs[k]), zs[k].real, zs[k].imag))

    @property
    def anchor(self) -> BigComplex:
        return self.scaled[self.anchor_index]

    @cached_property
    def others(self) -> tuple:
        """The 2n scaled points entering the g-function sums (all but ẑ₀)."""
        k = self.anchor_index
        return self.scaled[:k] + self.scaled[k + 1:]

    @cached_property
    def rescaled(self) -> tuple:
        """ž_j = z_j / (2 rho) over the same points as `others`."""
        if self.is_pade:
            return tuple(self.ctx.mpc(0) for _ in self.others)
        factor = self.two_n / (2 * self.rho)
        return tuple(z * factor for z in self.others)

    def omega(self, z) -> BigComplex:
        """ω(z) = Π (z - z_j) over all conditions."""
        acc = self.ctx.mpc(1)
        for zj in self.expanded:
            acc *= z - zj
        return acc

    def omega_scaled(self, z) -> BigComplex:
        """Ω_n(z) = Π (z - ẑ_j)."""
        acc = self.ctx.mpc(1)
        for zj in self.scaled:
            acc *= z - zj
        return acc

    def locations(self) -> tuple:
        return tuple(z for z, _ in self.points)
