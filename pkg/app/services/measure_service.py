"""
Discrete versions of the limit measures mu_P (on gamma1) and mu_Q (on gamma2),
their moments, and CSV export of contours and measures.
"""
from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from app.config import settings
from app.core.errors import NonRealWeight
from app.models.geometry import Contour, DiscreteMeasure
from app.services.trajectory_service import eta, trace_gamma1, trace_gamma2
from app.utils.sweep import parallel_map

logger = logging.getLogger(__name__)

WEIGHT_IMAG_TOL = 1e-8


def _unwrap(delta: np.ndarray) -> np.ndarray:
    """Reduce the imaginary parts of eta increments to (-pi, pi]."""
    im = delta.imag - 2 * np.pi * np.ceil((delta.imag - np.pi) / (2 * np.pi))
    return delta.real + 1j * im


def discretize_mu(contour: Contour, M: int | None = None) -> DiscreteMeasure:
    """
    Piece k of the contour carries (1/(i pi)) (eta(v_{k+1}) - eta(v_k)) at its chord midpoint.
    With M given, consecutive pieces are merged into M nodes.
    """
    v = np.asarray(contour.vertices, dtype=complex)
    values = eta(v)
    weights = _unwrap(np.diff(values)) / (1j * np.pi)
    worst = float(np.max(np.abs(weights.imag))) if len(weights) else 0.0
    if worst > WEIGHT_IMAG_TOL:
        raise NonRealWeight(f"measure weight with imaginary part {worst:.3g}")
    nodes = (v[:-1] + v[1:]) / 2
    w = weights.real
    if M is not None and 0 < M < len(w):
        groups = np.array_split(np.arange(len(w)), M)
        merged_w = np.array([w[g].sum() for g in groups])
        merged_nodes = np.array([np.sum(w[g] * nodes[g]) / w[g].sum() for g in groups])
        nodes, w = merged_nodes, merged_w
    return DiscreteMeasure(nodes=nodes, weights=w)


def mu_P(M: int | None = None) -> DiscreteMeasure:
    return discretize_mu(trace_gamma1(), M)


def mu_Q(M: int | None = None) -> DiscreteMeasure:
    return discretize_mu(trace_gamma2(), M)


def _moment(args) -> complex:
    nodes, weights, k = args
    return complex(np.sum(weights * nodes ** k))


def measure_moments(m: DiscreteMeasure, K: int | None = None, workers: int | None = None) -> np.ndarray:
    """Complex moments sum w s^k, k = 0..K."""
    K = settings.MOMENTS_K if K is None else K
    jobs = [(m.nodes, m.weights, k) for k in range(K + 1)]
    return np.array(parallel_map(_moment, jobs, workers))


def empirical_moments(roots, K: int | None = None) -> np.ndarray:
    """Moments of the normalized counting measure of the given points."""
    K = settings.MOMENTS_K if K is None else K
    pts = np.asarray([complex(r) for r in roots], dtype=complex)
    return np.array([np.mean(pts ** k) for k in range(K + 1)])


def moment_discrepancy(first, second) -> float:
    return float(np.max(np.abs(np.asarray(first) - np.asarray(second))))


# --- export ---

def _header(metadata: dict | None) -> list[str]:
    return [f"# {key}: {value}" for key, value in (metadata or {}).items()]


def export_contour_csv(contour: Contour, path: str | Path, metadata: dict | None = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = _header(metadata) + ["re,im"]
    lines += [f"{v.real:.17g},{v.imag:.17g}" for v in contour.vertices]
    path.write_text("\n".join(lines) + "\n")
    return path


def export_measure_csv(m: DiscreteMeasure, path: str | Path, metadata: dict | None = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = _header(metadata) + ["re,im,weight"]
    lines += [f"{z.real:.17g},{z.imag:.17g},{w:.17g}" for z, w in zip(m.nodes, m.weights)]
    path.write_text("\n".join(lines) + "\n")
    return path
