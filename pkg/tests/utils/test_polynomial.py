"""
Tests for dense polynomials
Run with: pytest tests/utils/test_polynomial.py
"""
import pytest

from app.utils.bigcomplex import context
from app.utils.polynomial import Polynomial, poly_eval, poly_eval_derivatives

ctx = context(256)


class TestPolynomial:
    """Construction and arithmetic"""

    def test_trailing_zeros_trimmed(self):
        """Degree ignores vanishing leading coefficients"""
        p = Polynomial.from_values([1, 2, 0, 0], ctx)
        assert p.degree == 1

    def test_empty_coefficients_rejected(self):
        """A polynomial needs one coefficient"""
        with pytest.raises(ValueError):
            Polynomial(())

    def test_from_roots(self):
        """(z - 1)(z - 2) = z^2 - 3z + 2"""
        p = Polynomial.from_roots([ctx.mpc(1), ctx.mpc(2)], ctx)
        assert [complex(c) for c in p.coeffs] == [2, -3, 1]

    def test_scaled(self):
        """p(2z) multiplies coefficient m by 2^m"""
        p = Polynomial.from_values([1, 1, 1], ctx)
        assert [complex(c) for c in p.scaled(2).coeffs] == [1, 2, 4]

    def test_reflected(self):
        """p(-z) flips the odd coefficients"""
        p = Polynomial.from_values([1, 2, 3], ctx)
        assert [complex(c) for c in p.reflected().coeffs] == [1, -2, 3]

    def test_product_and_difference(self):
        """(z + 1)(z - 1) - (z^2) = -1"""
        a = Polynomial.from_values([1, 1], ctx)
        b = Polynomial.from_values([-1, 1], ctx)
        c = Polynomial.from_values([0, 0, 1], ctx)
        d = a * b - c
        assert d.degree == 0
        assert d.coeffs[0] == -1

    def test_monic(self):
        """Leading coefficient becomes one"""
        p = Polynomial.from_values([2, 4], ctx).monic()
        assert p.leading == 1
        assert p.coeffs[0] == ctx.mpf("0.5")


class TestEvaluation:
    """Horner evaluation"""

    def test_root_of_z2_plus_1(self):
        """z^2 + 1 vanishes at i"""
        p = Polynomial.from_values([1, 0, 1], ctx)
        assert abs(poly_eval(p, ctx.mpc(0, 1))) == 0

    def test_constant(self):
        """A constant polynomial ignores its argument"""
        p = Polynomial.from_values([1], ctx)
        assert p(ctx.mpc(123, 4)) == 1

    def test_derivatives(self):
        """z^3 at 2: value 8, derivatives 12, 12, 6"""
        p = Polynomial.from_values([0, 0, 0, 1], ctx)
        vals = poly_eval_derivatives(p, ctx.mpc(2), 3)
        assert [complex(v) for v in vals] == [8, 12, 12, 6]
