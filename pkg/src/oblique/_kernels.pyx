# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: exact lattice-circle scan, exponential Gram fill,
brute-force planar minimum distance."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sin, sqrt, fabs

cnp.import_array()


def circle_scan(p, q, xlo, xhi, ylo, yhi):
    """Integer points of the box with ``q*(x*x + y*y) == p*(x - y)``.

    Callers must keep ``|q| * (x*x + y*y)`` and ``|p| * |x - y|`` inside int64;
    ``oblique._core`` checks this before dispatching here.
    """
    cdef long long P = p, Q = q
    cdef long long x, y, x0 = xlo, x1 = xhi, y0 = ylo, y1 = yhi
    cdef long long qx2, px
    out = []
    for x in range(x0, x1 + 1):
        qx2 = Q * x * x
        px = P * x
        for y in range(y0, y1 + 1):
            if qx2 + Q * y * y == px - P * y:
                out.append((x, y))
    return out


def exp_gram(freqs, double T):
    """Matrix ``G[i, j] = int_0^T exp(i (f_j - f_i) t) dt`` for real frequencies."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] f = np.ascontiguousarray(freqs, dtype=np.float64)
    cdef Py_ssize_t n = f.shape[0], i, j
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] G = np.empty((n, n), dtype=np.complex128)
    cdef double d, re, im
    for i in range(n):
        G[i, i] = T
        for j in range(i + 1, n):
            d = f[j] - f[i]
            if fabs(d) < 1e-13:
                G[i, j] = T
                G[j, i] = T
                continue
            # (e^{idT} - 1) / (i d) = sin(dT)/d + i (1 - cos(dT))/d
            re = sin(d * T) / d
            im = -2.0 * sin(0.5 * d * T) * sin(0.5 * d * T) / d
            G[i, j] = complex(re, -im)
            G[j, i] = complex(re, im)
    return G


def min_distance_2d(xs, ys):
    """Smallest Euclidean distance between two of the given planar points."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0], i, j
    cdef double best = float("inf"), dx, dy, r
    for i in range(n - 1):
        for j in range(i + 1, n):
            dx = x[j] - x[i]
            dy = y[j] - y[i]
            r = dx * dx + dy * dy
            if r < best:
                best = r
    return sqrt(best)
