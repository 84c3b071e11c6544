"""Truncated exponent families and their uniform / tail gaps."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import _core
from .exact import dist_to_integers, rat_parse

#: label of the ``{1, t}`` block carried by beam and plate families at frequency 0
POLY = "poly"

FAMILIES = ("schrodinger", "beam", "plate", "custom")


@dataclass(frozen=True)
class ExponentSet:
    """Labelled frequencies of one family, truncated at ``|index| <= N``.

    Every generating label is kept, so colliding labels (two labels, one
    frequency) remain separate entries; ``collisions`` lists them pairwise.
    Beam/plate sets carry one ``POLY`` entry standing for the ``{1, t}`` block.
    """

    family: str
    params: tuple
    N: int
    entries: tuple
    collisions: tuple = field(default=())

    @property
    def labels(self):
        return [lab for lab, _ in self.entries]

    @property
    def is_planar(self):
        return self.family == "plate"

    def frequencies(self):
        """Distinct frequencies, sorted."""
        return sorted({f for _, f in self.entries})

    def basis(self):
        """Gram basis: ``(label, frequency, degree)`` with the poly block expanded."""
        out = []
        for lab, f in self.entries:
            if _is_poly(lab):
                out.append((lab, f, 0))
                out.append((lab, f, 1))
            else:
                out.append((lab, f, 0))
        return out

    def without(self, labels):
        drop = set(labels)
        kept = tuple((lab, f) for lab, f in self.entries if lab not in drop)
        return _make(self.family, self.params, self.N, kept)


def _is_poly(label):
    return isinstance(label, tuple) and len(label) > 0 and label[-1] == POLY


def _find_collisions(entries):
    groups = defaultdict(list)
    for lab, f in entries:
        groups[f].append(lab)
    out = []
    for f in sorted(groups):
        for l1, l2 in combinations(groups[f], 2):
            out.append((l1, l2))
    return tuple(out)


def _make(family, params, N, entries):
    return ExponentSet(family, params, N, tuple(entries), _find_collisions(entries))


def schrodinger_exponents(a, N: int) -> ExponentSet:
    """Frequencies ``k^2 - a k`` for ``|k| <= N``, labelled by ``k``."""
    a = rat_parse(a)
    if N < 1:
        raise ValueError("N must be >= 1")
    entries = [(k, Fraction(k * k) - a * k) for k in range(-N, N + 1)]
    return _make("schrodinger", (a,), N, entries)


def beam_exponents(a, N: int) -> ExponentSet:
    """Branches ``(k, +1) -> k^2 - a k`` and ``(k, -1) -> -k^2 - a k``, ``0 < |k| <= N``.

    ``k = 0`` gives the single entry ``(0, POLY)`` at frequency 0.
    """
    a = rat_parse(a)
    if N < 1:
        raise ValueError("N must be >= 1")
    entries = [((0, POLY), Fraction(0))]
    for k in range(-N, N + 1):
        if k == 0:
            continue
        entries.append(((k, 1), Fraction(k * k) - a * k))
        entries.append(((k, -1), Fraction(-k * k) - a * k))
    return _make("beam", (a,), N, entries)


def beam_cross_collisions(E: ExponentSet) -> set[tuple[int, int]]:
    """Points ``(k, m)`` such that branch ``(k, +)`` meets branch ``(m, -)``.

    The poly entry plays the role of both ``(0, +)`` and ``(0, -)``.
    """
    if E.family != "beam":
        raise ValueError("beam exponent set required")

    def as_plus(lab):
        if _is_poly(lab):
            return 0
        return lab[0] if lab[1] == 1 else None

    def as_minus(lab):
        if _is_poly(lab):
            return 0
        return lab[0] if lab[1] == -1 else None

    out = set()
    for l1, l2 in E.collisions:
        for u, v in ((l1, l2), (l2, l1)):
            k, m = as_plus(u), as_minus(v)
            if k is not None and m is not None and (k, m) != (0, 0):
                out.add((k, m))
    return out


def plate_exponents(a: int, b: int, N: int) -> ExponentSet:
    """Planar frequencies ``(a k + b l, +-(k^2 + l^2))`` for ``|k|, |l| <= N``.

    Labels are ``(k, l, +1 | -1)``; ``(0, 0)`` gives the poly entry ``(0, 0, POLY)``.
    """
    if int(a) != a or int(b) != b:
        raise ValueError("plate directions must be integers")
    a, b = int(a), int(b)
    if (a, b) == (0, 0):
        raise ValueError("(a, b) must be nonzero")
    if N < 1:
        raise ValueError("N must be >= 1")
    entries = [((0, 0, POLY), (0, 0))]
    for k in range(-N, N + 1):
        for l in range(-N, N + 1):
            if (k, l) == (0, 0):
                continue
            m, r = a * k + b * l, k * k + l * l
            entries.append(((k, l, 1), (m, r)))
            entries.append(((k, l, -1), (m, -r)))
    return _make("plate", (a, b), N, entries)


def custom_exponents(freqs, labels=None, N=None) -> ExponentSet:
    freqs = list(freqs)
    labels = list(range(len(freqs))) if labels is None else list(labels)
    if len(labels) != len(freqs):
        raise ValueError("labels and frequencies differ in length")
    return _make("custom", (), N if N is not None else len(freqs), list(zip(labels, freqs)))


def integer_exponents(N: int) -> ExponentSet:
    """The integers ``-N..N`` (labels equal values)."""
    return custom_exponents([Fraction(k) for k in range(-N, N + 1)], range(-N, N + 1), N)


def square_exponents(N: int) -> ExponentSet:
    """The squares ``k^2``, ``0 <= k <= N``, labelled by ``k``."""
    return custom_exponents([Fraction(k * k) for k in range(N + 1)], range(N + 1), N)


def gap(E: ExponentSet, exact: bool = False):
    """Minimum distance between distinct frequencies; 0 on any collision.

    Fewer than two distinct frequencies gives ``inf``. For 1-D families
    ``exact=True`` returns the Fraction.
    """
    if E.collisions:
        return Fraction(0) if exact and not E.is_planar else 0.0
    freqs = E.frequencies()
    if len(freqs) < 2:
        return math.inf
    if E.is_planar:
        xs = [float(f[0]) for f in freqs]
        ys = [float(f[1]) for f in freqs]
        return _core.min_distance_2d(xs, ys)
    g = min(b - a for a, b in zip(freqs, freqs[1:]))
    if exact:
        return g
    return float(g)


def tail_gap(E: ExponentSet, F, exact: bool = False):
    """Gap of the family with the labels in ``F`` removed."""
    F = set(F)
    missing = F - set(E.labels)
    if missing:
        raise KeyError(f"labels not in the exponent set: {sorted(map(str, missing))[:5]}")
    return gap(E.without(F), exact=exact)


def separation_certificate(a, N: int) -> dict:
    """Exhaustive check of the factorized pair bounds for ``k^2 - a k``, ``|k| <= N``.

    Verifies ``(k^2-ak) - (m^2-am) = (k-m)(k+m-a)`` on every pair, the lower
    bound ``dist(a, Z)`` for non-integer ``a``, and the monotone consecutive
    gaps on both half-lines split at ``a/2``.
    """
    a = rat_parse(a)
    ks = range(-N, N + 1)
    lam = {k: Fraction(k * k) - a * k for k in ks}
    is_int = a.denominator == 1
    d = dist_to_integers(a)
    min_dist = None
    min_pair = None
    collisions = []
    identity_ok = True
    for k in ks:
        for m in ks:
            if m <= k:
                continue
            diff = lam[k] - lam[m]
            if diff != (k - m) * (k + m - a):
                identity_ok = False
            ad = abs(diff)
            if ad == 0:
                collisions.append((k, m))
            if min_dist is None or ad < min_dist:
                min_dist, min_pair = ad, (k, m)
    right = [2 * k + 1 - a for k in ks if k >= a / 2 and k + 1 <= N]
    left = [2 * k - 1 - a for k in ks if k < a / 2 and k - 1 >= -N]
    report = {
        "a": a,
        "N": N,
        "integer_slope": is_int,
        "dist_to_Z": d,
        "min_pairwise": min_dist,
        "min_pair": min_pair,
        "identity_holds": identity_ok,
        "collisions": collisions,
        "right_min_step": min(right) if right else None,
        "left_max_step": max(left) if left else None,
    }
    report["lower_bound_holds"] = bool(is_int or (min_dist is not None and min_dist >= d))
    report["monotone_holds"] = bool(
        (not right or min(right) >= 1) and (not left or max(left) <= -1)
    )
    return report
