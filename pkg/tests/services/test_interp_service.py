"""
Tests for the Hermite solve and its checks
Run with: pytest tests/services/test_interp_service.py
"""
import pytest

from app.constant import Normalization
from app.core.errors import DegenerateScheme, PreconditionViolation
from app.services.interp_service import (
    approximation_error,
    hermite_rows,
    interpolation_defect,
    orthogonality_defect,
    remainder,
    residual_check,
    solve_interpolant,
    zeros_poles,
)
from app.services.scheme_service import build_scheme, circle_scheme, pade_scheme, reflect_scheme
from app.utils.bigcomplex import context
from app.utils.linalg import null_vector, relative_residual

PREC = 256
ctx = context(PREC)
TOL = ctx.mpf("1e-60")


def coeffs(poly):
    return [complex(c) for c in poly.coeffs]


class TestPade:
    """Closed forms of diagonal Pade approximants"""

    def test_pade_1(self):
        """p = -1 - z/2, q = 1 - z/2"""
        r = solve_interpolant(pade_scheme(1, PREC))
        assert r.normalization == Normalization.Q_AT_ZERO_IS_ONE
        assert abs(r.p.coeffs[0] + 1) < TOL and abs(r.p.coeffs[1] + ctx.mpf(0.5)) < TOL
        assert abs(r.q.coeffs[0] - 1) < TOL and abs(r.q.coeffs[1] + ctx.mpf(0.5)) < TOL

    def test_pade_2(self):
        """q = 1 - z/2 + z^2/12 and p = -q(-z)"""
        r = solve_interpolant(pade_scheme(2, PREC))
        expected_q = [1, -ctx.mpf(1) / 2, ctx.mpf(1) / 12]
        expected_p = [-1, -ctx.mpf(1) / 2, -ctx.mpf(1) / 12]
        assert all(abs(a - b) < TOL for a, b in zip(r.q.coeffs, expected_q))
        assert all(abs(a - b) < TOL for a, b in zip(r.p.coeffs, expected_p))

    def test_single_point(self):
        """{0 x 1} of type (0, 0): p = -1, q = 1 and a zero residual"""
        r = solve_interpolant(pade_scheme(0, PREC))
        assert coeffs(r.p) == [-1]
        assert coeffs(r.q) == [1]
        assert residual_check(r) == 0

    def test_hermite_rows_null_vector(self):
        """The Pade n = 1 system is solved by the closed form (up to scale)"""
        scheme = pade_scheme(1, PREC)
        rows = hermite_rows(scheme)
        assert len(rows) == 3 and len(rows[0]) == 4
        assert relative_residual(rows, null_vector(rows, ctx)) < TOL

    def test_precision_override(self):
        """An explicit precision rebuilds the scheme"""
        r = solve_interpolant(pade_scheme(1, 128), precision=PREC)
        assert r.scheme.precision == PREC


class TestRemainder:
    """p e^{-z/2} + q e^{z/2} and e^z + r"""

    def test_vanishes_at_node(self):
        """Pade n = 1 remainder is zero at the origin"""
        r = solve_interpolant(pade_scheme(1, PREC))
        assert abs(remainder(r, 0)) < TOL

    def test_value_at_one(self):
        """Pade n = 1 at z = 1: -3/2 e^{-1/2} + 1/2 e^{1/2}"""
        r = solve_interpolant(pade_scheme(1, PREC))
        expected = -ctx.mpf(1.5) * ctx.exp(-0.5) + ctx.mpf(0.5) * ctx.exp(0.5)
        assert abs(remainder(r, 1) - expected) < TOL
        assert abs(float(expected.real) + 0.0855) < 1e-3

    def test_pade_10_series(self):
        """Pade n = 10 approximates e^z to order 21 near 0"""
        r = solve_interpolant(pade_scheme(10, PREC))
        assert abs(approximation_error(r, ctx.mpf("0.01"))) < ctx.mpf("1e-45")

    def test_residual_check(self):
        """Rows are satisfied to working precision"""
        r = solve_interpolant(pade_scheme(10, PREC))
        assert residual_check(r) < ctx.mpf(2) ** -(PREC - 96)

    def test_interpolation_defect(self):
        """Divided differences over perturbed copies vanish with the remainder"""
        scheme = build_scheme([(0.5, 2), (-1, 2), (0.25j, 1)], 2, 2, PREC)
        r = solve_interpolant(scheme)
        assert interpolation_defect(r, scheme, ctx.mpf("1e-20")) < ctx.mpf("1e-15")


class TestDegenerate:
    """Rank deficiency"""

    def test_periodic_points(self):
        """e^z = 1 at 0, 2 pi i, 4 pi i: every p = -q of degree 1 solves type (1, 1)"""
        scheme = build_scheme([(0, 1), (2j * ctx.pi, 1), (4j * ctx.pi, 1)], 1, 1, PREC)
        with pytest.raises(DegenerateScheme):
            solve_interpolant(scheme)


class TestZerosPoles:
    """Roots of p and q"""

    def test_pade_1(self):
        """Zero at -2, pole at 2"""
        roots = zeros_poles(solve_interpolant(pade_scheme(1, PREC)))
        assert abs(roots.zeros[0] + 2) < TOL
        assert abs(roots.poles[0] - 2) < TOL
        assert abs(roots.scaled_poles[0] - 1) < TOL

    def test_constant_numerator(self):
        """Numerator degree 0 has no zeros"""
        roots = zeros_poles(solve_interpolant(pade_scheme(0, PREC)))
        assert roots.zeros == []
        assert roots.min_modulus is None

    def test_pade_poles_right_half_plane(self):
        """Pade n = 6 poles lie in the right half-plane"""
        roots = zeros_poles(solve_interpolant(pade_scheme(6, PREC)))
        assert len(roots.poles) == 6
        assert all(p.real > 0 for p in roots.poles)
        assert all(z.real < 0 for z in roots.zeros)


class TestOrthogonality:
    """Contour moments of P e^{-2nz} / Omega"""

    def test_pade_5(self):
        """Moments j < 5 vanish next to the j = 5 moment"""
        scheme = pade_scheme(5, PREC)
        r = solve_interpolant(scheme)
        last = abs(orthogonality_defect(r, scheme, 5, 1))
        assert last > 0
        for j in range(5):
            assert abs(orthogonality_defect(r, scheme, j, 1)) < ctx.mpf("1e-40") * last

    def test_index_out_of_range(self):
        """j runs from 0 to n"""
        scheme = pade_scheme(2, PREC)
        with pytest.raises(PreconditionViolation):
            orthogonality_defect(solve_interpolant(scheme), scheme, 3, 1)

    def test_contour_must_enclose(self):
        """A circle inside the scaled points is refused"""
        scheme = circle_scheme(2, 5, 2, PREC)
        with pytest.raises(PreconditionViolation):
            orthogonality_defect(solve_interpolant(scheme), scheme, 0, ctx.mpf("0.01"))


class TestInvariants:
    """Symmetries of the solution that hold for any admissible scheme"""

    def test_real_for_conjugate_symmetric(self):
        """Points closed under conjugation give real coefficients"""
        raw = [(ctx.mpc("0.5", "0.3"), 1), (ctx.mpc("0.5", "-0.3"), 1), (ctx.mpf("-0.4"), 1),
               (ctx.mpc("1.1", "0.7"), 1), (ctx.mpc("1.1", "-0.7"), 1)]
        r = solve_interpolant(build_scheme(raw, 2, 2, PREC))
        bound = ctx.mpf(2) ** (-PREC // 2)
        for poly in (r.p, r.q):
            scale = max(abs(c) for c in poly.coeffs)
            assert max(abs(c.imag) for c in poly.coeffs) <= bound * scale

    def test_point_order_irrelevant(self):
        """p1 q2 - p2 q1 vanishes when the same points are listed in another order"""
        raw = [(ctx.mpf("0.2"), 2), (ctx.mpc("-0.3", "0.1"), 1), (ctx.mpc(0, "0.4"), 1), (ctx.mpf("-0.6"), 1)]
        r1 = solve_interpolant(build_scheme(raw, 2, 2, PREC))
        r2 = solve_interpolant(build_scheme(raw[::-1], 2, 2, PREC))
        cross = r1.p * r2.q - r2.p * r1.q
        size = r1.p.norm() * r2.q.norm() + r2.p.norm() * r1.q.norm()
        assert max(abs(c) for c in cross.coeffs) <= ctx.mpf(2) ** (-PREC // 3) * size

    def test_reflection_swaps_numerator_and_denominator(self):
        """Negating the points gives (q(-z), p(-z)) up to one scalar"""
        scheme = build_scheme([(ctx.mpf("0.2"), 2), (ctx.mpc("-0.3", "0.1"), 1), (ctx.mpc(0, "0.4"), 1)], 1, 2, PREC)
        r = solve_interpolant(scheme)
        mirrored = solve_interpolant(reflect_scheme(scheme))
        assert (mirrored.n1, mirrored.n2) == (2, 1)
        lam = mirrored.q.coeffs[0] / r.p.coeffs[0]
        expected = list(r.q.reflected().coeffs) + list(r.p.reflected().coeffs)
        actual = list(mirrored.p.coeffs) + list(mirrored.q.coeffs)
        assert len(actual) == len(expected)
        scale = max(abs(c) for c in actual)
        for got, want in zip(actual, expected):
            assert abs(got - lam * want) <= ctx.mpf(2) ** (-PREC // 2) * scale
