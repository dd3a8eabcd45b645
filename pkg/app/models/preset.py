from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from app.models.scheme import InterpolationScheme


@dataclass(frozen=True)
class FigurePreset:
    id: str
    # precision bits -> scheme
    generator: Callable[[int], InterpolationScheme]
    overlay: bool = True
    family: str = ""
    parameter: float = 0.0
