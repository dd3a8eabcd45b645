"""
Tests for precision-bound scalars
Run with: pytest tests/utils/test_bigcomplex.py
"""
import pytest

from app.core.errors import PrecisionError
from app.utils.bigcomplex import (
    big,
    complex_to_decimals,
    context,
    parse_decimal,
    precision_of,
    same_context,
    two_pow,
)


class TestContext:
    """Per-precision mpmath contexts"""

    def test_context_is_cached(self):
        """The same precision gives the same context object"""
        assert context(256) is context(256)
        assert context(256).prec == 256

    def test_precision_of(self):
        """Values report the precision of their context"""
        assert precision_of(big("0.1", context(192))) == 192

    def test_context_below_kernel_minimum(self):
        """Precisions under 64 bits are refused"""
        with pytest.raises(PrecisionError):
            context(32)

    def test_mixed_precisions_refused(self):
        """Operands of different contexts cannot be combined"""
        a = big(1, context(128))
        b = big(1, context(256))
        with pytest.raises(PrecisionError):
            same_context(a, b)


class TestConversion:
    """Lifting values into a context and back to decimals"""

    def test_big_from_decimal_string(self):
        """Decimal strings keep digits beyond double precision"""
        ctx = context(256)
        z = big("0.1000000000000000000000000000001", ctx)
        assert z.imag == 0
        assert z.real - ctx.mpf("0.1") > ctx.mpf("1e-32")

    def test_parse_decimal_pair(self):
        """re and im strings make one complex value"""
        ctx = context(128)
        z = parse_decimal("1.5", "-2", ctx)
        assert z == ctx.mpc(1.5, -2)

    def test_complex_to_decimals(self):
        """Round values print as short decimals"""
        ctx = context(128)
        re, im = complex_to_decimals(ctx.mpc("0.25", "-3"), 10)
        assert float(re) == 0.25
        assert float(im) == -3.0

    def test_two_pow(self):
        """Exact powers of two"""
        ctx = context(128)
        assert two_pow(ctx, -10) == ctx.mpf(1) / 1024
