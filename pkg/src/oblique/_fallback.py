"""Pure-Python/numpy versions of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module; used when the
extension is not built or when ``OBLIQUE_PURE=1`` is set.
"""

from __future__ import annotations

import numpy as np


def circle_scan(p, q, xlo, xhi, ylo, yhi):
    """Integer points of the box with ``q*(x*x + y*y) == p*(x - y)``."""
    out = []
    for x in range(xlo, xhi + 1):
        qx2 = q * x * x
        px = p * x
        for y in range(ylo, yhi + 1):
            if qx2 + q * y * y == px - p * y:
                out.append((x, y))
    return out


def exp_gram(freqs, T):
    """Matrix ``G[i, j] = int_0^T exp(i (f_j - f_i) t) dt`` for real frequencies."""
    f = np.asarray(freqs, dtype=float)
    d = f[None, :] - f[:, None]
    small = np.abs(d) < 1e-13
    safe = np.where(small, 1.0, d)
    G = np.expm1(1j * safe * T) / (1j * safe)
    G[small] = T
    return G


def min_distance_2d(xs, ys):
    """Smallest Euclidean distance between two of the given planar points."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    n = len(x)
    best = np.inf
    for i in range(n - 1):
        dx = x[i + 1:] - x[i]
        dy = y[i + 1:] - y[i]
        m = np.min(dx * dx + dy * dy)
        if m < best:
            best = m
    return float(np.sqrt(best))
