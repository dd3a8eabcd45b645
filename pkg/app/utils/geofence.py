from typing import Sequence

import numpy as np


def point_in_polygon(point: complex, polygon: Sequence[complex]) -> bool:
    """Crossing-count test; polygon vertices in order, closing edge implied."""
    x, y = point.real, point.imag
    inside = False
    n = len(polygon)
    for i in range(n):
        x1, y1 = polygon[i].real, polygon[i].imag
        x2, y2 = polygon[(i + 1) % n].real, polygon[(i + 1) % n].imag
        if ((y1 > y) != (y2 > y)) and (x < (x2 - x1) * (y - y1) / (y2 - y1) + x1):
            inside = not inside
    return inside


def points_in_polygon(points: np.ndarray, polygon: np.ndarray) -> np.ndarray:
    """Vectorized crossing count for many query points."""
    pts = np.asarray(points, dtype=complex).ravel()
    poly = np.asarray(polygon, dtype=complex)
    x1, y1 = poly.real, poly.imag
    x2, y2 = np.roll(x1, -1), np.roll(y1, -1)
    px, py = pts.real[:, None], pts.imag[:, None]
    straddle = (y1 > py) != (y2 > py)
    with np.errstate(divide="ignore", invalid="ignore"):
        xcross = (x2 - x1) * (py - y1) / (y2 - y1) + x1
    hits = straddle & (px < xcross)
    return (np.count_nonzero(hits, axis=1) % 2) == 1
