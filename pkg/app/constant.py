from enum import Enum


# How a solved (p, q) pair was scaled (recorded in every artifact)
class Normalization(str, Enum):
    Q_AT_ZERO_IS_ONE = "q_at_zero_is_one"
    Q_SCALED_MONIC = "q_scaled_monic"
    RAW_NULL_VECTOR = "raw_null_vector"


class Provenance(str, Enum):
    NEWTON_SOLVED = "newton_solved"
    PADE_EXACT = "pade_exact"


# Domains cut out by the four critical trajectories
class Region(str, Enum):
    D0 = "D0"
    D1INF = "D1inf"
    D2INF = "D2inf"
    ON_BOUNDARY = "OnBoundary"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


class PointKind(str, Enum):
    ZERO = "zero"
    POLE = "pole"
    INTERP_POINT = "interp_point"
    PADE_ZERO = "pade_zero"
    PADE_POLE = "pade_pole"


class Which(str, Enum):
    P = "P"
    Q = "Q"
    E = "E"


class Suite(str, Enum):
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    APPARATUS = "apparatus"


# Boundary value side on the cut; PLUS is the side of the lens (D0 side)
class RootSide(str, Enum):
    PLUS = "plus"
    MINUS = "minus"


C0_REFERENCE = 0.66274

# CLI exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2

# SVG scatter view box is [-SVG_HALF_WIDTH, SVG_HALF_WIDTH]^2
SVG_HALF_WIDTH = 150

DEFAULT_ERROR_GRID = "-1.3:1.4:5,-1.3:1.4:5"
DEFAULT_Q_GRID = "-0.7:0.7:3,-0.7:0.7:3"
