"""
Tests for eta, c0 and the critical trajectories
Run with: pytest tests/services/test_trajectory_service.py
"""
import numpy as np

from app.constant import C0_REFERENCE, Region
from app.services.trajectory_service import (
    c0_root,
    classify_region,
    crossing,
    eta,
    eta_mp,
    gamma_polygon,
    step_halving_deviation,
    trace_gamma1,
    trace_gamma2,
    vertical_rays,
)
from app.utils.bigcomplex import context


class TestEta:
    """eta(z) = sqrt(z^2 + 1) + log(z / (1 + sqrt(z^2 + 1)))"""

    def test_at_i(self):
        """eta(i) = i pi / 2"""
        assert abs(complex(eta(1j)) - 1j * np.pi / 2) < 1e-15

    def test_mp_matches_float(self):
        """The mpmath and numpy versions agree"""
        ctx = context(128)
        z = 0.3 + 0.8j
        assert abs(complex(eta_mp(z, ctx)) - complex(eta(z))) < 1e-14

    def test_c0(self):
        """c0 = 0.66274..."""
        c0 = c0_root(128)
        assert abs(float(c0) - C0_REFERENCE) < 1e-5
        assert abs(float(eta_mp(c0, context(128)).real)) < 1e-30

    def test_c0_mirror(self):
        """Re eta(-c0) vanishes as well"""
        assert abs(float(eta(-float(c0_root(128))).real)) < 1e-12


class TestTrajectories:
    """gamma1 and gamma2"""

    gamma1 = trace_gamma1()
    gamma2 = trace_gamma2()

    def test_endpoints(self):
        """gamma1 runs from i to -i, gamma2 back"""
        assert self.gamma1.vertices[0] == 1j
        assert self.gamma1.vertices[-1] == -1j
        assert self.gamma2.vertices[0] == -1j
        assert self.gamma2.vertices[-1] == 1j

    def test_level_set(self):
        """Every interior vertex has Re eta = 0"""
        level = np.max(np.abs(eta(self.gamma1.vertices[1:-1]).real))
        assert level <= 1e-10

    def test_crossings(self):
        """gamma1 meets the axis at -c0, gamma2 at +c0, both traced down to y = 0"""
        c0 = float(c0_root(128))
        assert crossing(self.gamma1).imag == 0.0
        assert abs(crossing(self.gamma1) + c0) < 1e-10
        assert abs(crossing(self.gamma2) - c0) < 1e-10

    def test_crossing_is_traced(self):
        """The axis vertex lies on the level set within one step of its neighbour"""
        v = self.gamma1.vertices
        mid = len(v) // 2
        assert 0 < abs(v[mid] - v[mid - 1]) <= self.gamma1.step * (1 + 1e-9)
        assert abs(float(eta(v[mid]).real)) <= 1e-10

    def test_gamma2_orientation(self):
        """gamma2 is the mirror of gamma1 walked backwards, labels swapped"""
        assert self.gamma2.labels == ("-i", "i")
        assert np.array_equal(self.gamma2.reversed().vertices, -np.conj(self.gamma1.vertices))
        assert not self.gamma2.vertices.flags.writeable

    def test_left_half_plane(self):
        """gamma1 stays in Re z <= 0"""
        assert np.all(self.gamma1.vertices.real <= 0)

    def test_conjugate_symmetric(self):
        """The lower half is the mirror of the upper"""
        v = self.gamma1.vertices
        assert np.allclose(v, np.conj(v[::-1]), atol=1e-14)

    def test_polygon_closed(self):
        """The boundary of D0 is closed"""
        polygon = gamma_polygon()
        assert polygon.closed
        assert polygon.vertices[0] == 1j

    def test_step_halving(self):
        """Halving the step moves the trace by less than 1e-8"""
        assert step_halving_deviation() < 1e-8

    def test_vertical_rays(self):
        """Rays from +-i straight out"""
        up, down = vertical_rays(length=10.0, step=0.5)
        assert up.vertices[0] == 1j
        assert abs(up.vertices[-1] - 11j) < 1e-12
        assert np.all(down.vertices.real == 0)
        assert np.all(down.vertices.imag <= -1)


class TestClassify:
    """Region of a point"""

    def test_origin(self):
        """0 is in D0"""
        assert classify_region(0) == Region.D0

    def test_inside_lens(self):
        """-0.3 lies between the trajectories"""
        assert classify_region(-0.3) == Region.D0

    def test_left(self):
        """-5 is in D1inf"""
        assert classify_region(-5) == Region.D1INF

    def test_right(self):
        """1 is in D2inf"""
        assert classify_region(1) == Region.D2INF

    def test_on_ray(self):
        """2i sits on a vertical ray"""
        assert classify_region(2j) == Region.ON_BOUNDARY
