"""Kernel backend selection.

The compiled extension is used when it imports cleanly; otherwise (or with
``OBLIQUE_PURE=1`` in the environment) the numpy fallback is used.
"""

from __future__ import annotations

import os

from . import _fallback

_INT64_SAFE = 2**62

try:
    if os.environ.get("OBLIQUE_PURE", "") not in ("", "0"):
        raise ImportError("pure backend requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def _impl(name, force=None):
    if force == "python" or _compiled is None:
        return getattr(_fallback, name)
    return getattr(_compiled, name)


def circle_scan(p, q, xlo, xhi, ylo, yhi, backend=None):
    m = max(abs(xlo), abs(xhi), abs(ylo), abs(yhi), 1)
    if 2 * abs(q) * m * m >= _INT64_SAFE or 2 * abs(p) * m >= _INT64_SAFE:
        return _fallback.circle_scan(p, q, xlo, xhi, ylo, yhi)
    return _impl("circle_scan", backend)(p, q, xlo, xhi, ylo, yhi)


def exp_gram(freqs, T, backend=None):
    return _impl("exp_gram", backend)(freqs, float(T))


def min_distance_2d(xs, ys, backend=None):
    if len(xs) < 2:
        return float("inf")
    return _impl("min_distance_2d", backend)(xs, ys)
