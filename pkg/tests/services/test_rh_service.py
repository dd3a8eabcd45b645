"""
Tests for the Riemann-Hilbert matrix Y
Run with: pytest tests/services/test_rh_service.py
"""
import pytest

from app.core.errors import PreconditionViolation
from app.services.rh_service import assemble_Y, contour_radius, det_Y
from app.services.scheme_service import build_scheme, pade_scheme
from app.services.verify_service import det_sample_points

PREC = 256


class TestDeterminant:
    """det Y = 1 inside and outside the contour"""

    Y = assemble_Y(pade_scheme(3, PREC))

    def test_outside(self):
        """A point beyond the contour radius"""
        assert not self.Y.inside(2 + 1j)
        assert abs(det_Y(self.Y, 2 + 1j) - 1) < 1e-20

    def test_inside(self):
        """A point near the origin"""
        assert self.Y.inside(0.1)
        assert abs(det_Y(self.Y, 0.1) - 1) < 1e-20

    @pytest.mark.parametrize("scheme", [
        pade_scheme(3, PREC),
        build_scheme([(0.5, 3), (-0.5, 4)], 3, 3, PREC),
    ])
    def test_sample_points(self, scheme):
        """det Y = 1 at all twenty spiral points, on both sides of the contour"""
        Y = assemble_Y(scheme)
        points = det_sample_points()
        assert len(points) == 20
        assert any(Y.inside(z) for z in points) and not all(Y.inside(z) for z in points)
        for z in points:
            assert abs(det_Y(Y, z) - 1) < 1e-20

    def test_precision_override(self):
        """Rebuilding at a higher precision keeps det Y = 1"""
        Y = assemble_Y(pade_scheme(3, 128), precision=PREC)
        assert Y.scheme.precision == PREC
        assert abs(det_Y(Y, 0.5j) - 1) < 1e-20


class TestPreconditions:
    """Only diagonal schemes with n >= 1"""

    def test_n_zero(self):
        """Type (0, 0) has no auxiliary interpolant"""
        with pytest.raises(PreconditionViolation):
            assemble_Y(pade_scheme(0, PREC))

    def test_not_diagonal(self):
        """Type (1, 2) is refused"""
        with pytest.raises(PreconditionViolation):
            assemble_Y(build_scheme([(0, 4)], 1, 2, PREC))

    def test_radius(self):
        """The contour clears the scaled points"""
        scheme = build_scheme([(0.5, 3), (-0.5, 4)], 3, 3, PREC)
        radius = contour_radius(scheme)
        assert radius >= 1.5
        assert all(abs(z) < radius for z in scheme.scaled)
