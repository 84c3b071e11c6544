"""Observation segments in space-time."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import rat_parse


@dataclass(frozen=True)
class SegmentSpec:
    """Moving segment ``{(t1 + t, x1 - a t) : 0 < t < T}``."""

    t1: float
    x1: float
    a: Fraction
    T: float

    def __post_init__(self):
        object.__setattr__(self, "a", rat_parse(self.a))
        if not self.T > 0:
            raise ValueError("T must be positive")


@dataclass(frozen=True)
class PlateSegmentSpec:
    """Oblique plate segment ``{(t1 + t, x1 + a s, y1 + b s) : 0 < s < S, 0 < t < T}``."""

    t1: float
    x1: float
    y1: float
    a: int
    b: int
    T: float
    S: float = 1.0

    def __post_init__(self):
        if (self.a, self.b) == (0, 0):
            raise ValueError("(a, b) must be nonzero")
        if int(self.a) != self.a or int(self.b) != self.b:
            raise ValueError("plate directions must be integers")
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))
        if not (self.T > 0 and self.S > 0):
            raise ValueError("T and S must be positive")
