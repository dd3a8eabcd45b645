import numpy as np


def point_polyline_distance(point: complex, polyline: np.ndarray) -> float:
    """Euclidean distance from a point to an open polyline."""
    return float(points_polyline_distance(np.array([point]), polyline)[0])


def points_polyline_distance(points: np.ndarray, polyline: np.ndarray) -> np.ndarray:
    if len(polyline) == 1:
        return np.abs(np.asarray(points, dtype=complex).ravel() - polyline[0])
    pts = np.asarray(points, dtype=complex).ravel()[:, None]
    a = np.asarray(polyline, dtype=complex)[:-1][None, :]
    b = np.asarray(polyline, dtype=complex)[1:][None, :]
    seg = b - a
    length2 = np.abs(seg) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(length2 > 0, ((pts - a) * np.conj(seg)).real / length2, 0.0)
    s = np.clip(s, 0.0, 1.0)
    return np.min(np.abs(pts - (a + s * seg)), axis=1)


def directed_hausdorff(points: np.ndarray, polyline: np.ndarray) -> float:
    """sup over points of the distance to the polyline."""
    if len(points) == 0:
        return 0.0
    return float(np.max(points_polyline_distance(points, polyline)))


def hausdorff(points: np.ndarray, polyline: np.ndarray) -> float:
    """Symmetric Hausdorff distance between a point set and the vertices of a polyline."""
    pts = np.asarray(points, dtype=complex).ravel()
    if len(pts) == 0:
        return float("inf")
    back = np.min(np.abs(np.asarray(polyline, dtype=complex)[:, None] - pts[None, :]), axis=1)
    return max(directed_hausdorff(pts, polyline), float(np.max(back)))


def _cross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return u.real * v.imag - u.imag * v.real


def polylines_intersect(first: np.ndarray, second: np.ndarray) -> bool:
    """True when some segment of one open polyline properly crosses a segment of the other."""
    p = np.asarray(first, dtype=complex)
    q = np.asarray(second, dtype=complex)
    if len(p) < 2 or len(q) < 2:
        return False
    a0, a1 = p[:-1][:, None], p[1:][:, None]
    b0, b1 = q[:-1][None, :], q[1:][None, :]
    d1 = _cross(a1 - a0, b0 - a0)
    d2 = _cross(a1 - a0, b1 - a0)
    d3 = _cross(b1 - b0, a0 - b0)
    d4 = _cross(b1 - b0, a1 - b0)
    return bool(np.any((d1 * d2 < 0) & (d3 * d4 < 0)))
