"""
Exception hierarchy shared by the numerical kernel, the services, the CLI and the API.

Input problems also subclass ValueError so callers that only know the builtin
contract keep working (routers turn them into 400s).
"""
from __future__ import annotations


class ExpInterpError(Exception):
    """Base class for every error raised by this package."""


class PrecisionError(ExpInterpError, ValueError):
    pass


class NumericalRankDeficiency(ExpInterpError):
    def __init__(self, message: str, pivots: int | None = None):
        super().__init__(message)
        self.pivots = pivots


class NoConvergence(ExpInterpError):
    def __init__(self, message: str, iterations: int | None = None, t: float | None = None):
        if t is not None:
            message = f"{message} (t={t:.4g})"
        super().__init__(message)
        self.iterations = iterations
        self.t = t


class SingularJacobian(ExpInterpError):
    pass


class ToleranceNotReached(ExpInterpError):
    """Quadrature gave up at its node cap; the best estimate is kept on the exception."""

    def __init__(self, message: str, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class SchemeError(ExpInterpError, ValueError):
    pass


class CountMismatch(SchemeError):
    pass


class SchemeParseError(SchemeError):
    pass


class DegenerateScheme(ExpInterpError, ValueError):
    pass


class PreconditionViolation(ExpInterpError, ValueError):
    pass


class OnCut(ExpInterpError):
    pass


class PoleHit(ExpInterpError):
    pass


class WrongRegion(ExpInterpError):
    pass


class PathBlocked(ExpInterpError):
    pass


class TraceStalled(ExpInterpError):
    pass


class BranchConfusion(ExpInterpError):
    pass


class NonRealWeight(ExpInterpError):
    pass
