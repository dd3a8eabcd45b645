"""
Tests for composite Gauss-Legendre on polylines
Run with: pytest tests/utils/test_quadrature.py
"""
import numpy as np
import pytest

from app.core.errors import ToleranceNotReached
from app.models.geometry import Contour
from app.utils.bigcomplex import context
from app.utils.quadrature import contour_quadrature, degree_for

ctx = context(256)
square = Contour(np.array([1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j]), closed=True)


class TestContourQuadrature:
    """Closed and open contours"""

    def test_residue_of_inverse(self):
        """The integral of 1/z around the origin is 2 pi i"""
        value = contour_quadrature(lambda z: 1 / z, square, ctx=ctx)
        assert abs(value - 2j * ctx.pi) < ctx.mpf("1e-60")

    def test_entire_function_vanishes(self):
        """Cauchy: exp(z) integrates to zero over a closed polygon"""
        value = contour_quadrature(ctx.exp, square, ctx=ctx)
        assert abs(value) < ctx.mpf("1e-60")

    def test_open_polyline(self):
        """An open path integrates exp(z) to exp(end) - exp(start)"""
        value = contour_quadrature(ctx.exp, [0, 1j, 1 + 1j], ctx=ctx)
        assert abs(value - (ctx.exp(ctx.mpc(1, 1)) - 1)) < ctx.mpf("1e-60")

    def test_node_cap(self):
        """An impossible tolerance keeps the estimate on the error"""
        with pytest.raises(ToleranceNotReached) as exc:
            contour_quadrature(lambda z: 1 / z, square, tol=0, cap=24, ctx=ctx)
        assert exc.value.estimate is not None

    def test_degree_for(self):
        """24 nodes are degree 4 of mpmath's rule"""
        assert degree_for(24) == 4
