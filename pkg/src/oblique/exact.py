"""Exact slopes and the lattice points of the circles ``x^2 - a x + y^2 + a y = 0``."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import _core

Rational = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class ASet:
    """Nonzero integer points on the circle through the origin for slope ``a``."""

    a: Fraction
    points: tuple[LatticePoint, ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in set(self.points)


def rat_parse(s) -> Fraction:
    """Parse ``"p/q"`` or an integer into a reduced Fraction.

    Accepts the unicode minus sign. Decimal or float text is rejected: slopes
    must be exact.
    """
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str):
        raise TypeError(f"slope must be text or an exact rational, got {type(s).__name__}")
    m = _RAT_RE.match(s.replace("−", "-"))
    if m is None:
        raise ValueError(f"malformed rational: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def rat_str(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def circle_member(a, p) -> bool:
    """True iff ``p`` lies on ``x^2 - a x + y^2 + a y = 0`` (exact test)."""
    a = rat_parse(a)
    x, y = p
    return a.denominator * (x * x + y * y) == a.numerator * (x - y)


def _box(c2: int, den2: int, r2: int):
    """Integer range of ``z`` with ``(den2*z - c2)**2 <= r2``.

    Exact: ``den2*z - c2`` is an integer, so comparing it with ``isqrt(r2)``
    is equivalent to comparing with ``sqrt(r2)``.
    """
    s = math.isqrt(r2)
    lo = -((s - c2) // den2)  # ceil((c2 - s) / den2), s = floor(sqrt(r2))
    hi = (c2 + s) // den2
    return lo, hi


def scan_box(a: Fraction):
    """Bounding box ``(xlo, xhi, ylo, yhi)`` of the circle for slope ``a``.

    ``x`` is in the box iff ``(2 q x - p)^2 <= 2 p^2`` with ``a = p/q``.
    """
    p, q = a.numerator, a.denominator
    xlo, xhi = _box(p, 2 * q, 2 * p * p)
    ylo, yhi = _box(-p, 2 * q, 2 * p * p)
    return xlo, xhi, ylo, yhi


def enumerate_aset(a, backend=None) -> ASet:
    """All nonzero lattice points on the circle, by exhaustive scan of its bounding box."""
    a = rat_parse(a)
    if a == 0:
        return ASet(a, ())
    xlo, xhi, ylo, yhi = scan_box(a)
    pts = _core.circle_scan(a.numerator, a.denominator, xlo, xhi, ylo, yhi, backend=backend)
    pts = sorted(LatticePoint(int(x), int(y)) for x, y in pts if (x, y) != (0, 0))
    return ASet(a, tuple(pts))


def projections(A) -> tuple[frozenset[int], frozenset[int]]:
    """First- and second-coordinate projections of a point set."""
    pts = A.points if isinstance(A, ASet) else tuple(A)
    return frozenset(p[0] for p in pts), frozenset(p[1] for p in pts)


def dist_to_integers(a: Fraction) -> Fraction:
    """Distance from ``a`` to the nearest integer."""
    f = a - math.floor(a)
    return min(f, 1 - f)
