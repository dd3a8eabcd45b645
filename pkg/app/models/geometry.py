from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Contour:
    vertices: np.ndarray
    closed: bool = False
    labels: tuple = ("", "")
    step: float = 0.0

    def __len__(self) -> int:
        return len(self.vertices)

    def reversed(self) -> "Contour":
        vertices = self.vertices[::-1].copy()
        vertices.setflags(write=False)
        return Contour(vertices, self.closed, self.labels[::-1], self.step)


@dataclass(frozen=True)
class DiscreteMeasure:
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def mass(self) -> float:
        return float(np.sum(self.weights))
