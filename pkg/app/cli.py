"""
expinterp command line.

    expinterp interpolate --n 1 --format json
    expinterp figure --preset circle-60 --out out/
    expinterp verify --suite theorem1 --n-sweep 10,20,40
    expinterp trace --out out/trajectories
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from app.config import settings
from app.constant import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFY_FAILED, OutputFormat, Suite
from app.core.errors import ExpInterpError
from app.schemas.run import RunConfig
from app.services.figure_service import PRESETS, get_preset, render_artifacts, run_preset, write_artifacts
from app.services.measure_service import discretize_mu, export_contour_csv, export_measure_csv
from app.services.scheme_service import load_scheme, pade_scheme
from app.services.trajectory_service import c0_root, trace_gamma1, trace_gamma2
from app.services.verify_service import render_table, run_suite

logger = logging.getLogger(__name__)


def _sweep(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n sweep {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expinterp",
        description="Rational interpolants of exp(z) in extended precision.",
    )
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="logging level (default: %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("interpolate", help="solve one interpolation problem")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--scheme", help="scheme JSON file")
    source.add_argument("--preset", choices=sorted(PRESETS), help="figure preset id")
    source.add_argument("--n", type=int, help="diagonal Pade approximant of degree n")
    p.add_argument("--precision-bits", type=int, default=settings.PRECISION_BITS)
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)
    p.add_argument("--overlay", action="store_true", help="add the Pade-50 zeros and poles")

    p = sub.add_parser("figure", help="write the artifacts of a figure preset")
    p.add_argument("--preset", required=True, choices=sorted(PRESETS))
    p.add_argument("--out", default=settings.OUTPUT_DIR, help="output directory (default: %(default)s)")
    p.add_argument("--json", action="store_true", help="also write the JSON report")
    p.add_argument("--precision-bits", type=int, default=settings.PRECISION_BITS)

    p = sub.add_parser("verify", help="run an acceptance suite")
    p.add_argument("--suite", required=True, choices=[s.value for s in Suite])
    p.add_argument("--n-sweep", type=_sweep, default=[], help="comma separated, strictly increasing")
    p.add_argument("--grid", help='"re0:re1:steps,im0:im1:steps"')
    p.add_argument("--out", help="JSON report path")
    p.add_argument("--precision-bits", type=int, default=settings.PRECISION_BITS)
    p.add_argument("--workers", type=int, default=settings.WORKERS)

    p = sub.add_parser("trace", help="export the critical trajectories and limit measures")
    p.add_argument("--out", default=settings.OUTPUT_DIR, help="output directory (default: %(default)s)")
    p.add_argument("--step", type=float, default=settings.TRACE_STEP)
    p.add_argument("--nodes", type=int, default=None, help="merge each measure into this many nodes")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        precision_bits=getattr(args, "precision_bits", settings.PRECISION_BITS),
        n=getattr(args, "n", None),
        n_sweep=getattr(args, "n_sweep", []),
        scheme_path=getattr(args, "scheme", None),
        preset=getattr(args, "preset", None),
        out=getattr(args, "out", None),
        format=getattr(args, "format", OutputFormat.JSON.value),
        grid=getattr(args, "grid", None),
        overlay=getattr(args, "overlay", False),
        workers=getattr(args, "workers", settings.WORKERS),
    )


def cmd_interpolate(cfg: RunConfig) -> int:
    bits = cfg.precision_bits
    if cfg.scheme_path:
        scheme = load_scheme(Path(cfg.scheme_path), bits)
    elif cfg.preset:
        scheme = get_preset(cfg.preset).generator(bits)
    else:
        scheme = pade_scheme(cfg.n, bits)

    if cfg.out:
        write_artifacts(scheme, cfg.out, [cfg.format], cfg.overlay)
    else:
        sys.stdout.write(render_artifacts(scheme, [cfg.format], cfg.overlay)[cfg.format])
    return EXIT_OK


def cmd_figure(cfg: RunConfig, with_json: bool) -> int:
    for path in run_preset(cfg.preset, cfg.out, cfg.precision_bits, with_json):
        print(path)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    report = run_suite(suite, cfg.n_sweep or None, cfg.grid, cfg.precision_bits, cfg.workers)
    print(render_table(report))
    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(report.model_dump(mode="json"), indent=2) + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_trace(out: str, step: float, nodes: int | None) -> int:
    out_dir = Path(out)
    meta = {"step": step, "c0": f"{float(c0_root(128)):.15f}"}
    gamma1, gamma2 = trace_gamma1(step), trace_gamma2(step)
    paths = [
        export_contour_csv(gamma1, out_dir / "gamma1.csv", meta),
        export_contour_csv(gamma2, out_dir / "gamma2.csv", meta),
        export_measure_csv(discretize_mu(gamma1, nodes), out_dir / "mu_P.csv", meta),
        export_measure_csv(discretize_mu(gamma2, nodes), out_dir / "mu_Q.csv", meta),
    ]
    for path in paths:
        print(path)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = _config(args)
        if args.command == "interpolate":
            return cmd_interpolate(cfg)
        if args.command == "figure":
            return cmd_figure(cfg, args.json)
        if args.command == "verify":
            return cmd_verify(cfg, args.suite)
        return cmd_trace(args.out, args.step, args.nodes)
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        # scheme, precision and degenerate-system errors all land here
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ExpInterpError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
