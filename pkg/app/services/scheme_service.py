"""
Scheme ingestion, canonical serialization and the scheme generators used by the
figure presets and the acceptance suites.
"""
from __future__ import annotations

import hashlib
import json
import logging
from pathlib import Path
from typing import Iterable

import numpy as np
from pydantic import ValidationError

from app.config import settings
from app.core.errors import CountMismatch, PrecisionError, SchemeError, SchemeParseError
from app.models.scheme import InterpolationScheme
from app.schemas.scheme import SchemeFile
from app.utils.bigcomplex import big, complex_to_decimals, context, parse_decimal

logger = logging.getLogger(__name__)


def _lift(location, ctx):
    if isinstance(location, (tuple, list)) and len(location) == 2:
        return parse_decimal(str(location[0]), str(location[1]), ctx)
    return big(location, ctx)


def build_scheme(raw: Iterable, n1: int, n2: int, precision: int) -> InterpolationScheme:
    """
    raw: (location, multiplicity) pairs. Equal locations are merged, first
    occurrence keeps its position.
    """
    if precision < settings.MIN_PRECISION_BITS:
        raise PrecisionError(
            f"precision {precision} is below the minimum of {settings.MIN_PRECISION_BITS} bits"
        )
    if n1 < 0 or n2 < 0:
        raise SchemeError("degrees must be non-negative")
    ctx = context(precision)
    merged: list[list] = []
    for location, mult in raw:
        if int(mult) < 1:
            raise SchemeError(f"multiplicity must be >= 1, got {mult}")
        z = _lift(location, ctx)
        for entry in merged:
            if entry[0] == z:
                entry[1] += int(mult)
                break
        else:
            merged.append([z, int(mult)])

    total = sum(m for _, m in merged)
    if total != n1 + n2 + 1:
        raise CountMismatch(f"scheme carries {total} conditions, type ({n1}, {n2}) needs {n1 + n2 + 1}")
    return InterpolationScheme(tuple((z, m) for z, m in merged), n1, n2, precision)


def scheme_from_file(data: SchemeFile, precision: int) -> InterpolationScheme:
    ctx = context(max(precision, 64))
    try:
        raw = [(parse_decimal(pt.re, pt.im, ctx), pt.mult) for pt in data.points]
    except (ValueError, TypeError) as exc:
        raise SchemeParseError(f"malformed decimal in scheme: {exc}") from exc
    return build_scheme(raw, data.n1, data.n2, precision)


def load_scheme(source: str | Path, precision: int) -> InterpolationScheme:
    """Read the JSON scheme contract from a path or from the JSON text itself."""
    text = str(source)
    path = Path(text)
    if not text.lstrip().startswith("{"):
        try:
            text = path.read_text()
        except OSError as exc:
            raise SchemeParseError(f"cannot read scheme file {path}: {exc}") from exc
    if not text.strip():
        raise SchemeParseError("scheme file is empty")
    try:
        data = SchemeFile.model_validate_json(text)
    except ValidationError as exc:
        raise SchemeParseError(f"invalid scheme: {exc.errors()[0]['msg']}") from exc
    return scheme_from_file(data, precision)


def dump_scheme(scheme: InterpolationScheme, digits: int | None = None) -> dict:
    digits = digits or settings.DECIMAL_DIGITS
    points = []
    for z, m in scheme.points:
        re, im = complex_to_decimals(z, digits)
        points.append({"re": re, "im": im, "mult": m})
    return {"n1": scheme.n1, "n2": scheme.n2, "points": points}


def scheme_hash(scheme: InterpolationScheme) -> str:
    """sha256 of the canonical JSON; points sorted so the hash ignores input order."""
    data = dump_scheme(scheme)
    data["points"] = sorted(data["points"], key=lambda p: (p["re"], p["im"]))
    text = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def reflect_scheme(scheme: InterpolationScheme) -> InterpolationScheme:
    """Negate every location; the type (n1, n2) becomes (n2, n1)."""
    return InterpolationScheme(
        tuple((-z, m) for z, m in scheme.points), scheme.n2, scheme.n1, scheme.precision
    )


# --- generators ---

def pade_scheme(n: int, precision: int) -> InterpolationScheme:
    return build_scheme([(0, 2 * n + 1)], n, n, precision)


def two_point_scheme(x, mult: int, n1: int, n2: int, precision: int) -> InterpolationScheme:
    """{-x with multiplicity mult, +x with multiplicity mult}."""
    ctx = context(precision)
    x = ctx.mpf(str(x)) if isinstance(x, float) else ctx.convert(x)
    return build_scheme([(-x, mult), (x, mult)], n1, n2, precision)


def line_scheme(rho, count: int, n: int, precision: int) -> InterpolationScheme:
    """count equally spaced points on [-rho, rho]."""
    ctx = context(precision)
    rho = ctx.mpf(str(rho)) if isinstance(rho, float) else ctx.convert(rho)
    if count == 1:
        return build_scheme([(0, 1)], n, n, precision)
    pts = [(-rho + 2 * rho * k / (count - 1), 1) for k in range(count)]
    return build_scheme(pts, n, n, precision)


def circle_scheme(rho, count: int, n: int, precision: int) -> InterpolationScheme:
    """count points rho e^{2 pi i k / count}."""
    ctx = context(precision)
    rho = ctx.mpf(str(rho)) if isinstance(rho, float) else ctx.convert(rho)
    pts = [(rho * ctx.expjpi(ctx.mpf(2 * k) / count), 1) for k in range(count)]
    return build_scheme(pts, n, n, precision)


def random_complex_scheme(n: int, seed: int, radius: float, precision: int) -> InterpolationScheme:
    """2n+1 points uniform in the disk of the given radius (numpy default_rng)."""
    rng = np.random.default_rng(seed)
    count = 2 * n + 1
    r = radius * np.sqrt(rng.random(count))
    theta = 2 * np.pi * rng.random(count)
    pts = [(complex(x), 1) for x in r * np.exp(1j * theta)]
    return build_scheme(pts, n, n, precision)
