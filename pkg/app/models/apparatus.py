from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from app.constant import Provenance
from app.models.scheme import InterpolationScheme
from app.utils.bigcomplex import BigComplex


@dataclass(frozen=True)
class EndpointPair:
    """Cut endpoints a (near i) and b (near -i) with the polylines used for branch choices."""
    a: BigComplex
    b: BigComplex
    provenance: Provenance
    residual_a: BigComplex
    residual_b: BigComplex
    t: BigComplex
    # traced arc a -> b through the left half-plane
    cut: np.ndarray = field(repr=False, compare=False)
    # cut closed by the segment b -> a
    lens: np.ndarray = field(repr=False, compare=False)


@dataclass(frozen=True)
class GApparatus:
    pair: EndpointPair
    scheme: InterpolationScheme
    precision: int
    g0: BigComplex
    two_ell: BigComplex
    d_sq0: BigComplex
    d_sq_inf: BigComplex

    @property
    def constant(self) -> BigComplex:
        """2 g(0) + 2 ell."""
        return 2 * self.g0 + self.two_ell

    @property
    def ctx(self):
        return self.scheme.ctx


@dataclass(frozen=True)
class ErrorModel:
    n: int
    scheme: InterpolationScheme
    constant: BigComplex
    delta: BigComplex
    c_n: BigComplex
