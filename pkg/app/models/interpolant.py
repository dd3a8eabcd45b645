from __future__ import annotations

from dataclasses import dataclass

from app.constant import Normalization
from app.models.scheme import InterpolationScheme
from app.utils.bigcomplex import BigComplex
from app.utils.polynomial import Polynomial


@dataclass(frozen=True)
class RationalInterpolant:
    """
    r = p / q with p e^{-z/2} + q e^{z/2} vanishing on the scheme.

    Capital letters are the scaled polynomials P(z) = p(2n z), Q(z) = q(2n z).
    """
    p: Polynomial
    q: Polynomial
    n1: int
    n2: int
    normalization: Normalization
    scheme: InterpolationScheme

    @property
    def scale(self) -> int:
        return max(self.n1 + self.n2, 1)

    @property
    def P(self) -> Polynomial:
        return self.p.scaled(self.scale)

    @property
    def Q(self) -> Polynomial:
        return self.q.scaled(self.scale)

    def value(self, z) -> BigComplex:
        return self.p(z) / self.q(z)

    def scale_by(self, s) -> "RationalInterpolant":
        return RationalInterpolant(self.p.scale_by(s), self.q.scale_by(s), self.n1, self.n2,
                                   self.normalization, self.scheme)


@dataclass(frozen=True)
class RHSolutionY:
    """2x2 Riemann-Hilbert matrix built from the main and the auxiliary interpolants."""
    P: Polynomial
    Q: Polynomial
    P_aux: Polynomial
    Q_aux: Polynomial
    radius: BigComplex
    scheme: InterpolationScheme

    @property
    def ctx(self):
        return self.scheme.ctx

    @property
    def two_n(self) -> int:
        return self.scheme.two_n

    def inside(self, z) -> bool:
        return abs(z) < self.radius

    def entries(self, z) -> tuple:
        ctx = self.ctx
        z = ctx.mpc(z)
        omega = self.scheme.omega_scaled(z)
        p, q = self.P(z), self.Q(z)
        pa, qa = self.P_aux(z), self.Q_aux(z)
        if self.inside(z):
            damp = ctx.exp(-self.two_n * z)
            return p, (p * damp + q) / omega, pa, (pa * damp + qa) / omega
        return p, q / omega, pa, qa / omega

    def det(self, z) -> BigComplex:
        y11, y12, y21, y22 = self.entries(z)
        return y11 * y22 - y12 * y21
