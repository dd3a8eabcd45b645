"""
Artifacts for interpolants: CSV rows, a static SVG scatter and a JSON report,
plus the twelve figure presets.

Output bytes depend only on the scheme and the precision.
"""
from __future__ import annotations

import json
import logging
from functools import lru_cache
from pathlib import Path

from app.config import settings
from app.constant import SVG_HALF_WIDTH, OutputFormat, PointKind
from app.models.interpolant import RationalInterpolant
from app.models.preset import FigurePreset
from app.models.scheme import InterpolationScheme
from app.schemas.interpolant import InterpolantOut
from app.services.interp_service import RootSet, residual_check, solve_interpolant, zeros_poles
from app.services.scheme_service import circle_scheme, line_scheme, pade_scheme, scheme_hash, two_point_scheme
from app.utils.bigcomplex import complex_to_decimals, to_decimal

logger = logging.getLogger(__name__)

OVERLAY_N = 50
CSV_DIGITS = 20


def _two_point(x):
    return lambda bits: two_point_scheme(x, 51, 51, 50, bits)


def _line(rho):
    return lambda bits: line_scheme(rho, 101, 50, bits)


def _circle(rho):
    return lambda bits: circle_scheme(rho, 101, 50, bits)


def _label(x: float) -> str:
    return f"{x:g}"


PRESETS: dict[str, FigurePreset] = {}
for _x in (50, 65, 85, 100):
    PRESETS[f"two-point-{_label(_x)}"] = FigurePreset(f"two-point-{_label(_x)}", _two_point(_x), True, "two-point", _x)
for _x in (60, 72.5, 87.5, 110):
    PRESETS[f"line-{_label(_x)}"] = FigurePreset(f"line-{_label(_x)}", _line(_x), True, "line", _x)
for _x in (60, 77.5, 92.5, 110):
    PRESETS[f"circle-{_label(_x)}"] = FigurePreset(f"circle-{_label(_x)}", _circle(_x), True, "circle", _x)


def get_preset(preset_id: str) -> FigurePreset:
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise ValueError(f"unknown preset {preset_id!r}; choose one of {', '.join(PRESETS)}") from None


def _sorted(points) -> list:
    return sorted(points, key=lambda z: (float(z.real), float(z.imag)))


@lru_cache(maxsize=4)
def pade_overlay(precision: int, n: int = OVERLAY_N) -> RootSet:
    return zeros_poles(solve_interpolant(pade_scheme(n, precision)))


def metadata(r: RationalInterpolant) -> dict:
    return {
        "precision_bits": r.scheme.precision,
        "scheme_hash": scheme_hash(r.scheme),
        "normalization": r.normalization.value,
        "type": f"({r.n1}, {r.n2})",
    }


def point_rows(r: RationalInterpolant, roots: RootSet, overlay: RootSet | None = None) -> list[tuple]:
    """(kind, z) rows: zeros, poles, one interp_point per condition, optional Pade reference."""
    rows = [(PointKind.ZERO, z) for z in _sorted(roots.zeros)]
    rows += [(PointKind.POLE, z) for z in _sorted(roots.poles)]
    rows += [(PointKind.INTERP_POINT, z) for z in r.scheme.expanded]
    if overlay is not None:
        rows += [(PointKind.PADE_ZERO, z) for z in _sorted(overlay.zeros)]
        rows += [(PointKind.PADE_POLE, z) for z in _sorted(overlay.poles)]
    return rows


def render_csv(rows: list[tuple], meta: dict) -> str:
    lines = [f"# {k}: {v}" for k, v in meta.items()] + ["kind,re,im"]
    for kind, z in rows:
        re, im = complex_to_decimals(z, CSV_DIGITS)
        lines.append(f"{kind.value},{re},{im}")
    return "\n".join(lines) + "\n"


def _marker(kind: PointKind, x: float, y: float) -> str:
    if kind == PointKind.ZERO:
        return f'<circle cx="{x:.3f}" cy="{y:.3f}" r="1.6" fill="none" stroke="black" stroke-width="0.5"/>'
    if kind == PointKind.POLE:
        return f'<circle cx="{x:.3f}" cy="{y:.3f}" r="1.6" fill="black"/>'
    if kind == PointKind.INTERP_POINT:
        s = 2.2
        pts = f"{x:.3f},{y - s:.3f} {x + s:.3f},{y:.3f} {x:.3f},{y + s:.3f} {x - s:.3f},{y:.3f}"
        return f'<polygon points="{pts}" fill="none" stroke="blue" stroke-width="0.5"/>'
    return f'<circle cx="{x:.3f}" cy="{y:.3f}" r="0.5" fill="gray"/>'


def render_svg(rows: list[tuple], meta: dict) -> str:
    w = SVG_HALF_WIDTH
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    out += [f"<!-- {k}: {v} -->" for k, v in meta.items()]
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{-w} {-w} {2 * w} {2 * w}" '
               f'width="600" height="600">')
    out.append(f'<line x1="{-w}" y1="0" x2="{w}" y2="0" stroke="lightgray" stroke-width="0.3"/>')
    out.append(f'<line x1="0" y1="{-w}" x2="0" y2="{w}" stroke="lightgray" stroke-width="0.3"/>')
    for kind, z in rows:
        # svg y grows downwards
        out.append(_marker(kind, float(z.real), -float(z.imag)))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def interpolant_out(r: RationalInterpolant, roots: RootSet | None = None, digits: int | None = None) -> InterpolantOut:
    digits = digits or settings.DECIMAL_DIGITS
    roots = roots or zeros_poles(r)

    def cx(values):
        out = []
        for v in values:
            re, im = complex_to_decimals(v, digits)
            out.append({"re": re, "im": im})
        return out

    meta = metadata(r)
    return InterpolantOut(
        n1=r.n1,
        n2=r.n2,
        precision_bits=meta["precision_bits"],
        scheme_hash=meta["scheme_hash"],
        normalization=r.normalization,
        p=cx(r.p.coeffs),
        q=cx(r.q.coeffs),
        zeros=cx(_sorted(roots.zeros)),
        poles=cx(_sorted(roots.poles)),
        residual=to_decimal(residual_check(r), 6),
    )


def render_json(r: RationalInterpolant, roots: RootSet, overlay: RootSet | None = None) -> str:
    body = {"metadata": metadata(r), **interpolant_out(r, roots).model_dump(mode="json")}
    if overlay is not None:
        body["pade_overlay"] = {
            "zeros": [list(complex_to_decimals(z, CSV_DIGITS)) for z in _sorted(overlay.zeros)],
            "poles": [list(complex_to_decimals(z, CSV_DIGITS)) for z in _sorted(overlay.poles)],
        }
    return json.dumps(body, indent=2) + "\n"


def render_artifacts(
    scheme: InterpolationScheme,
    formats: list[OutputFormat],
    overlay: bool = False,
) -> dict[OutputFormat, str]:
    """Solve once and render the requested formats."""
    r = solve_interpolant(scheme)
    roots = zeros_poles(r)
    reference = pade_overlay(scheme.precision) if overlay else None
    rows = point_rows(r, roots, reference)
    meta = metadata(r)

    texts = {}
    for fmt in map(OutputFormat, formats):
        if fmt == OutputFormat.CSV:
            texts[fmt] = render_csv(rows, meta)
        elif fmt == OutputFormat.SVG:
            texts[fmt] = render_svg(rows, meta)
        else:
            texts[fmt] = render_json(r, roots, reference)
    return texts


def write_artifacts(
    scheme: InterpolationScheme,
    out: str | Path,
    formats: list[OutputFormat],
    overlay: bool = False,
    stem: str | None = None,
) -> list[Path]:
    """
    `out` is a directory when a stem is given, otherwise the path of the single
    requested file.
    """
    written = []
    for fmt, text in render_artifacts(scheme, formats, overlay).items():
        path = Path(out) / f"{stem}.{fmt.value}" if stem is not None else Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        written.append(path)
    logger.info("wrote %s", ", ".join(str(p) for p in written))
    return written


def run_preset(preset_id: str, out_dir: str | Path, precision: int | None = None,
               with_json: bool = False) -> list[Path]:
    preset = get_preset(preset_id)
    precision = precision or settings.PRECISION_BITS
    formats = [OutputFormat.CSV, OutputFormat.SVG] + ([OutputFormat.JSON] if with_json else [])
    return write_artifacts(preset.generator(precision), out_dir, formats, preset.overlay, stem=preset.id)
