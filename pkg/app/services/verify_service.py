"""
Acceptance suites: convergence statements checked at desk scale.

Each criterion records the measured value next to its threshold; a suite passes
when every criterion does.
"""
from __future__ import annotations

import logging

import numpy as np

from app.config import settings
from app.constant import C0_REFERENCE, DEFAULT_ERROR_GRID, DEFAULT_Q_GRID, Suite
from app.core.errors import ExpInterpError
from app.models.interpolant import RationalInterpolant
from app.schemas.verify import CriterionResult, VerifyReport
from app.services.endpoint_service import h_fn, solve_endpoints
from app.services.gfunction_service import build_apparatus, c_n, error_model, pade_constant, reduce_mod
from app.services.interp_service import approximation_error, orthogonality_defect, solve_interpolant, zeros_poles
from app.services.measure_service import empirical_moments, measure_moments, moment_discrepancy, mu_P, mu_Q
from app.services.rh_service import assemble_Y, contour_radius
from app.services.scheme_service import (
    build_scheme,
    circle_scheme,
    pade_scheme,
    random_complex_scheme,
    reflect_scheme,
)
from app.services.trajectory_service import (
    c0_root,
    crossing,
    eta,
    hausdorff_to_contour,
    step_halving_deviation,
    trace_gamma1,
    trace_gamma2,
)
from app.utils.bigcomplex import context, two_pow
from app.utils.sweep import parallel_map

logger = logging.getLogger(__name__)

DEFAULT_SWEEPS = {
    Suite.THEOREM1: [10, 20, 40],
    Suite.THEOREM2: [20, 40],
    Suite.APPARATUS: [3],
}

HAUSDORFF_BOUND = 0.25

COMPLEX_SCHEME_7 = [0.5 + 0.2j, -0.3 + 0.7j, 1.1 - 0.4j, -0.9 - 0.6j, 0.2 + 1.3j, -1.2 + 0.1j, 0.7 + 0.9j]


def parse_grid(spec: str) -> list[complex]:
    """'re0:re1:steps,im0:im1:steps' -> row-major list of grid points."""
    try:
        re_part, im_part = spec.split(",")
        r0, r1, rs = re_part.split(":")
        i0, i1, is_ = im_part.split(":")
        xs = np.linspace(float(r0), float(r1), int(rs))
        ys = np.linspace(float(i0), float(i1), int(is_))
    except ValueError as exc:
        raise ValueError(f"grid must look like 're0:re1:steps,im0:im1:steps', got {spec!r}") from exc
    return [complex(x, y) for y in ys for x in xs]


def _fmt(x) -> str:
    return f"{float(x):.6g}"


def _decreasing(values: list) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


def det_sample_points(count: int = 20) -> list[complex]:
    """Deterministic spiral of points, some inside and some outside the contour."""
    golden = np.pi * (3 - np.sqrt(5))
    return [0.15 * (k + 1) * complex(np.cos(k * golden), np.sin(k * golden)) for k in range(count)]


# --- theorem 1 ---

def _error_ratio(n: int, grid: list[complex], precision: int) -> float:
    scheme = pade_scheme(n, precision)
    r = solve_interpolant(scheme)
    app = build_apparatus(scheme)
    ctx = scheme.ctx
    worst = ctx.mpf(0)
    for z in grid:
        worst = max(worst, abs(approximation_error(r, z) / error_model(scheme, z, app) - 1))
    return float(worst)


def _q_distance(n: int, grid: list[complex], precision: int) -> float:
    r = solve_interpolant(pade_scheme(n, precision))
    ctx = r.scheme.ctx
    return float(max(abs(r.q(z) - ctx.exp(-ctx.mpc(z) / 2)) for z in grid))


def _unit_circle_cn(n: int, precision: int) -> float:
    return float(abs(c_n(circle_scheme(1, 2 * n + 1, n, precision)) - 1))


def theorem1(n_sweep: list[int], grid: list[complex], precision: int, workers: int | None = None) -> list[CriterionResult]:
    q_grid = parse_grid(DEFAULT_Q_GRID)
    ratios = parallel_map(_ratio_job, [(n, grid, precision) for n in n_sweep], workers)
    q_dist = parallel_map(_q_job, [(n, q_grid, precision) for n in n_sweep], workers)
    last = n_sweep[-1]

    results = [
        CriterionResult(
            name="error_ratio_decreasing",
            passed=_decreasing(ratios) and ratios[-1] <= 0.25,
            measured=", ".join(_fmt(x) for x in ratios),
            threshold="strictly decreasing, <= 0.25 at largest n",
            detail={"n": n_sweep},
        ),
        CriterionResult(
            name="q_limit",
            passed=_decreasing(q_dist) and q_dist[-1] <= 0.1,
            measured=", ".join(_fmt(x) for x in q_dist),
            threshold="decreasing, <= 0.1 at largest n",
            detail={"n": n_sweep},
        ),
    ]

    ctx = context(precision)
    rho = ctx.sqrt(last) / 2
    roots = zeros_poles(solve_interpolant(circle_scheme(rho, 2 * last + 1, last, precision)))
    results.append(CriterionResult(
        name="zero_free_disk",
        passed=roots.min_modulus is not None and roots.min_modulus > rho,
        measured=_fmt(roots.min_modulus if roots.min_modulus is not None else 0),
        threshold=f"> rho = {_fmt(rho)}",
        detail={"n": last},
    ))

    if len(n_sweep) >= 2:
        prev = n_sweep[-2]
        c_prev, c_last = parallel_map(_cn_job, [(prev, precision), (last, precision)], workers)
        bound = (prev / last) ** 2
        results.append(CriterionResult(
            name="c_n_rate",
            passed=c_last <= bound * c_prev,
            measured=f"{_fmt(c_prev)} -> {_fmt(c_last)}",
            threshold=f"ratio <= {_fmt(bound)}",
            detail={"n": [prev, last]},
        ))
    return results


def _ratio_job(args) -> float:
    return _error_ratio(*args)


def _q_job(args) -> float:
    return _q_distance(*args)


def _cn_job(args) -> float:
    return _unit_circle_cn(*args)


# --- theorem 2 ---

def _pade_statistics(n: int, precision: int) -> tuple[float, float, float, float]:
    """Moment discrepancies and directed distances to the trajectories for Pade n."""
    roots = zeros_poles(solve_interpolant(pade_scheme(n, precision)))
    K = settings.MOMENTS_K
    dp = moment_discrepancy(empirical_moments(roots.scaled_zeros, K), measure_moments(mu_P(), K))
    dq = moment_discrepancy(empirical_moments(roots.scaled_poles, K), measure_moments(mu_Q(), K))
    hp, _ = hausdorff_to_contour([complex(z) for z in roots.scaled_zeros], trace_gamma1())
    hq, _ = hausdorff_to_contour([complex(z) for z in roots.scaled_poles], trace_gamma2())
    return dp, dq, hp, hq


def _statistics_job(args) -> tuple[float, float, float, float]:
    return _pade_statistics(*args)


def theorem2(n_sweep: list[int], precision: int, workers: int | None = None) -> list[CriterionResult]:
    stats = parallel_map(_statistics_job, [(n, precision) for n in n_sweep], workers)
    dp, dq, hp, hq = (list(col) for col in zip(*stats))
    results = [
        CriterionResult(name="moments_P_decreasing", passed=_decreasing(dp),
                        measured=", ".join(_fmt(x) for x in dp), threshold="decreasing in n",
                        detail={"n": n_sweep}),
        CriterionResult(name="moments_Q_decreasing", passed=_decreasing(dq),
                        measured=", ".join(_fmt(x) for x in dq), threshold="decreasing in n",
                        detail={"n": n_sweep}),
    ]
    for label, dist in (("zeros_near_gamma1", hp), ("poles_near_gamma2", hq)):
        results.append(CriterionResult(
            name=label,
            passed=dist[-1] <= HAUSDORFF_BOUND and (len(dist) == 1 or dist[-1] < dist[0]),
            measured=", ".join(_fmt(x) for x in dist),
            threshold=f"<= {HAUSDORFF_BOUND} at the largest n, smaller than at the first",
            detail={"n": n_sweep},
        ))
    for label, measure in (("mu_P", mu_P()), ("mu_Q", mu_Q())):
        mass = measure.mass
        positive = bool(np.all(measure.weights > 0))
        results.append(CriterionResult(
            name=f"{label}_probability",
            passed=abs(mass - 1) <= 1e-6 and positive,
            measured=f"mass {mass:.12f}, min weight {float(np.min(measure.weights)):.3g}",
            threshold="mass 1 +- 1e-6, weights > 0",
        ))
    return results


# --- apparatus ---

def reflect_duality(r: RationalInterpolant, reflected: RationalInterpolant):
    """
    Relative distance between (p', q') of the reflected scheme and (q(-z), p(-z)),
    after fitting one global scalar.
    """
    ctx = r.scheme.ctx
    u = list(reflected.p.coeffs) + list(reflected.q.coeffs)
    v = list(r.q.reflected().coeffs) + list(r.p.reflected().coeffs)
    if len(u) != len(v):
        return ctx.mpf(1)
    lam = ctx.fsum(ctx.conj(b) * a for a, b in zip(u, v)) / ctx.fsum(abs(b) ** 2 for b in v)
    return max(abs(a - lam * b) for a, b in zip(u, v)) / max(abs(a) for a in u)


def _det_deviation(scheme) -> float:
    Y = assemble_Y(scheme)
    return float(max(abs(Y.det(z) - 1) for z in det_sample_points()))


def apparatus(precision: int, n: int = 3) -> list[CriterionResult]:
    ctx = context(precision)
    results = []

    c0 = c0_root(precision)
    results.append(CriterionResult(name="c0", passed=abs(float(c0) - C0_REFERENCE) <= 1e-4,
                                   measured=_fmt(c0), threshold=f"{C0_REFERENCE} +- 1e-4"))

    pade = pade_scheme(max(n, 1), precision)
    pair = solve_endpoints(pade)
    residual = max(abs(h_fn(pair.a, pair, pade)), abs(h_fn(pair.b, pair, pade)))
    results.append(CriterionResult(
        name="pade_endpoints",
        passed=pair.a == ctx.mpc(0, 1) and pair.b == ctx.mpc(0, -1) and residual <= ctx.mpf(10) ** -200,
        measured=f"a={ctx.nstr(pair.a, 5)}, b={ctx.nstr(pair.b, 5)}, |h|={ctx.nstr(residual, 3)}",
        threshold="(i, -i), |h| <= 1e-200",
    ))

    app = build_apparatus(pade, pair)
    gap = abs(reduce_mod(app.constant - pade_constant(ctx), 2 * ctx.pi))
    results.append(CriterionResult(name="pade_constant", passed=gap <= ctx.mpf(10) ** -20,
                                   measured=ctx.nstr(gap, 3), threshold="-2 + log 4 + i pi mod 2 pi i"))

    cn = c_n(pade, app)
    results.append(CriterionResult(name="pade_c_n", passed=abs(cn - 1) <= ctx.mpf(10) ** -20,
                                   measured=ctx.nstr(cn, 10), threshold="1"))

    det_schemes = {
        "pade": pade_scheme(n, precision),
        "complex7": build_scheme([(z, 1) for z in COMPLEX_SCHEME_7], 3, 3, precision),
    }
    det_bound = 1e-150 if precision >= 1024 else float(two_pow(ctx, -precision // 3))
    for label, scheme in det_schemes.items():
        dev = _det_deviation(scheme)
        results.append(CriterionResult(name=f"det_Y_{label}", passed=dev <= det_bound,
                                       measured=f"{dev:.3g}", threshold=f"max |det Y - 1| <= {det_bound:.3g}"))

    ortho = pade_scheme(15, precision)
    r15 = solve_interpolant(ortho)
    radius = contour_radius(ortho)
    defects = [abs(orthogonality_defect(r15, ortho, j, radius)) for j in range(16)]
    rel = max(defects[:-1]) / defects[-1]
    results.append(CriterionResult(name="orthogonality", passed=rel <= ctx.mpf(10) ** -40,
                                   measured=ctx.nstr(rel, 3), threshold="<= 1e-40"))

    gamma1 = trace_gamma1()
    cross = crossing(gamma1)
    level = float(np.max(np.abs(eta(gamma1.vertices[1:-1]).real)))
    results.append(CriterionResult(
        name="trajectory",
        passed=abs(cross.real + float(c0)) <= 1e-10 and level <= settings.TRACE_TOL
        and gamma1.vertices[0] == 1j and gamma1.vertices[-1] == -1j,
        measured=f"crossing {cross.real:.8f}, max |Re eta| {level:.3g}",
        threshold="crossing -c0 +- 1e-10, |Re eta| <= tol",
    ))
    halving = step_halving_deviation()
    results.append(CriterionResult(name="step_halving", passed=halving <= 10 * settings.TRACE_TOL,
                                   measured=f"{halving:.3g}", threshold="<= 10 tol"))

    bound = two_pow(ctx, -precision // 2)
    for label, scheme in _duality_schemes(precision).items():
        try:
            gap = reflect_duality(solve_interpolant(scheme), solve_interpolant(reflect_scheme(scheme)))
        except ExpInterpError as exc:
            logger.warning("reflect duality for %s failed: %s", label, exc)
            gap = ctx.mpf(1)
        results.append(CriterionResult(name=f"reflect_{label}", passed=gap <= bound,
                                       measured=ctx.nstr(gap, 3), threshold="<= 2^(-prec/2)"))
    return results


def _duality_schemes(precision: int, n: int = 10) -> dict:
    ctx = context(precision)
    return {
        "pade": pade_scheme(n, precision),
        "circle": circle_scheme(ctx.sqrt(n) / 2, 2 * n + 1, n, precision),
        "random": random_complex_scheme(n, seed=7, radius=3.0, precision=precision),
    }


def run_suite(
    suite: Suite | str,
    n_sweep: list[int] | None = None,
    grid: str | None = None,
    precision: int | None = None,
    workers: int | None = None,
) -> VerifyReport:
    suite = Suite(suite)
    precision = precision or settings.PRECISION_BITS
    n_sweep = n_sweep or DEFAULT_SWEEPS[suite]
    if any(b <= a for a, b in zip(n_sweep, n_sweep[1:])):
        raise ValueError("n sweep values must be strictly increasing")

    if suite == Suite.THEOREM1:
        criteria = theorem1(n_sweep, parse_grid(grid or DEFAULT_ERROR_GRID), precision, workers)
    elif suite == Suite.THEOREM2:
        criteria = theorem2(n_sweep, precision, workers)
    else:
        criteria = apparatus(precision, n_sweep[0])
    report = VerifyReport(
        suite=suite,
        precision_bits=precision,
        n_sweep=n_sweep,
        passed=all(c.passed for c in criteria),
        criteria=criteria,
    )
    logger.info("suite %s: %s", suite.value, "passed" if report.passed else "FAILED")
    return report


def render_table(report: VerifyReport) -> str:
    width = max((len(c.name) for c in report.criteria), default=10)
    lines = [f"suite {report.suite.value} at {report.precision_bits} bits, n = {report.n_sweep}"]
    for c in report.criteria:
        mark = "PASS" if c.passed else "FAIL"
        lines.append(f"  {mark}  {c.name:<{width}}  {c.measured}  ({c.threshold})")
    return "\n".join(lines)
