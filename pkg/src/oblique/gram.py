"""Gram matrices of exponential (and ``t * exponential``) systems over observation
windows, and their extremal eigenvalues as truncated observability constants."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from . import _core
from .segments import PlateSegmentSpec, SegmentSpec
from .spectra import (
    ExponentSet,
    beam_exponents,
    gap,
    plate_exponents,
    schrodinger_exponents,
)

#: ``|lambda - mu|`` below this takes the coincident-frequency branch
COINCIDENT = 1e-13
#: ``|omega * T|`` below this uses the power series for the degree >= 1 integrals
_SERIES_CUTOFF = 1e-2


class EigenSolverError(RuntimeError):
    pass


def gram_entry(lam, mu, T) -> complex:
    """``int_0^T exp(i (lam - mu) t) dt``."""
    w = float(lam) - float(mu)
    if abs(w) < COINCIDENT:
        return complex(T)
    return (cmath.exp(1j * w * T) - 1) / (1j * w)


def _moment(n: int, w: float, T: float) -> complex:
    """``int_0^T t^n exp(i w t) dt``."""
    if abs(w) < COINCIDENT:
        return complex(T ** (n + 1) / (n + 1))
    z = 1j * w * T
    if n > 0 and abs(z) < _SERIES_CUTOFF:
        # T^{n+1} * sum_j z^j / (j! (n + j + 1))
        s, term = 0j, 1 + 0j
        for j in range(30):
            s += term / (n + j + 1)
            term *= z / (j + 1)
        return T ** (n + 1) * s
    I = (cmath.exp(z) - 1) / (1j * w)
    e = cmath.exp(z)
    for k in range(1, n + 1):
        # integration by parts: I_k = (T^k e^{iwT} - k I_{k-1}) / (i w)
        I = (T**k * e - k * I) / (1j * w)
    return I


def gram_poly_entry(d1: int, lam, d2: int, mu, T) -> complex:
    """``int_0^T t^(d1 + d2) exp(i (lam - mu) t) dt`` for degrees in {0, 1}."""
    if d1 not in (0, 1) or d2 not in (0, 1):
        raise ValueError("degrees must be 0 or 1")
    return _moment(d1 + d2, float(lam) - float(mu), float(T))


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian ``G[i, j] = int conj(phi_i) phi_j`` over the window.

    ``basis`` holds ``(label, frequency, degree)``; ``window`` is ``T`` for
    1-D families and ``(S, T)`` for the plate.
    """

    basis: tuple
    window: object
    entries: np.ndarray = field(repr=False)

    @property
    def measure(self) -> float:
        if isinstance(self.window, tuple):
            return float(self.window[0] * self.window[1])
        return float(self.window)

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def quadratic_form(self, c) -> float:
        c = np.asarray(c, dtype=complex)
        return float(np.real(np.conj(c) @ self.entries @ c))


def _fill_1d(freqs, degrees, T):
    G = _core.exp_gram(freqs, T)
    poly = [i for i, d in enumerate(degrees) if d]
    for i in poly:
        for j in range(len(freqs)):
            G[i, j] = gram_poly_entry(degrees[j], freqs[j], degrees[i], freqs[i], T)
            G[j, i] = np.conj(G[i, j])
    return G


def build_gram(E, window) -> GramMatrix:
    """Assemble the Gram matrix of an ExponentSet (or an explicit basis list).

    Colliding labels give identical rows, so non-separation shows up as an
    exactly singular matrix.
    """
    basis = tuple(E.basis() if isinstance(E, ExponentSet) else E)
    if not basis:
        raise ValueError("empty basis")
    planar = isinstance(basis[0][1], tuple)
    degrees = [int(d) for _, _, d in basis]
    if planar:
        S, T = (1.0, float(window)) if not isinstance(window, tuple) else map(float, window)
        mus = [float(f[0]) for _, f, _ in basis]
        nus = [float(f[1]) for _, f, _ in basis]
        G = _core.exp_gram(mus, S) * _fill_1d(nus, degrees, T)
        win = (S, T)
    else:
        T = float(window)
        freqs = [float(f) for _, f, _ in basis]
        G = _fill_1d(freqs, degrees, T)
        win = T
    G.setflags(write=False)
    return GramMatrix(basis, win, G)


def extremal_eigs(G) -> tuple[float, float]:
    """Smallest and largest eigenvalue of a Hermitian Gram matrix."""
    M = G.entries if isinstance(G, GramMatrix) else np.asarray(G)
    if not np.isfinite(M).all():
        raise EigenSolverError(f"non-finite entries in a {M.shape[0]}x{M.shape[0]} Gram matrix")
    try:
        w = np.linalg.eigvalsh(M)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(
            f"Hermitian eigensolver failed on a {M.shape[0]}x{M.shape[0]} matrix "
            f"(norm {np.linalg.norm(M):.3e}, finite={np.isfinite(M).all()}): {exc}"
        ) from exc
    return float(w[0]), float(w[-1])


@dataclass(frozen=True)
class ObservabilityEstimate:
    family: str
    params: tuple
    N: int
    window: object
    c_minus: float
    c_plus: float
    gap: float
    size: int

    def as_row(self) -> dict:
        from .exact import rat_str

        return {
            "family": self.family,
            "params": ",".join(rat_str(p) if hasattr(p, "denominator") else str(p) for p in self.params),
            "N": self.N,
            "window": list(self.window) if isinstance(self.window, tuple) else self.window,
            "c_minus": self.c_minus,
            "c_plus": self.c_plus,
            "gap": self.gap,
            "size": self.size,
        }


def family_exponents(family: str, params, N: int) -> ExponentSet:
    if family == "schrodinger":
        return schrodinger_exponents(params[0], N)
    if family == "beam":
        return beam_exponents(params[0], N)
    if family == "plate":
        return plate_exponents(params[0], params[1], N)
    raise ValueError(f"unknown family {family!r}")


def observability_constants(family: str, segment, N: int) -> ObservabilityEstimate:
    """Truncated constants ``(mu_min, mu_max)`` of the restricted exponential sum.

    The constants refer to the amplitudes of the restricted sum (the ``d``
    coefficients); for pure exponentials these differ from the solution
    coefficients by unimodular factors only.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if isinstance(segment, PlateSegmentSpec):
        params, window = (segment.a, segment.b), (segment.S, segment.T)
    elif isinstance(segment, SegmentSpec):
        params, window = (segment.a,), segment.T
    else:
        raise TypeError("segment must be a SegmentSpec or PlateSegmentSpec")
    E = family_exponents(family, params, N)
    G = build_gram(E, window)
    lo, hi = extremal_eigs(G)
    return ObservabilityEstimate(family, params, N, window, lo, hi, gap(E), G.size)


def observability_sweep(family: str, segment, Ns, workers: int = 1) -> list[ObservabilityEstimate]:
    Ns = list(Ns)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as ex:
            return list(ex.map(observability_constants, [family] * len(Ns), [segment] * len(Ns), Ns))
    return [observability_constants(family, segment, n) for n in Ns]


def sweep_is_interlaced(sweep, rtol: float = 1e-9) -> bool:
    """``c_minus`` never increases and ``c_plus`` never decreases along a nested sweep."""
    for prev, cur in zip(sweep, sweep[1:]):
        tol = rtol * max(cur.c_plus, prev.c_plus)
        if cur.c_minus > prev.c_minus + tol or cur.c_plus < prev.c_plus - tol:
            return False
    return True


# -- solution-coefficient Gram over several segments ---------------------------


def _segment_basis(family: str, N: int, seg):
    """Solution-coefficient labels, with per-label restricted terms on ``seg``.

    Each label maps to a list of ``(frequency, degree, factor)``: the restricted
    sum contributes ``factor * t^degree * exp(i frequency t)`` per unit coefficient.
    """
    a = seg.a
    out = []
    if family == "schrodinger":
        for k in range(-N, N + 1):
            ph = cmath.exp(1j * (k * k * seg.t1 + k * seg.x1))
            out.append((k, [(float(k * k - a * k), 0, ph)]))
    elif family == "beam":
        out.append(((0, "+"), [(0.0, 0, 1.0)]))
        out.append(((0, "-"), [(0.0, 0, complex(seg.t1)), (0.0, 1, 1.0)]))
        for k in range(-N, N + 1):
            if k == 0:
                continue
            out.append(((k, "+"), [(float(k * k - a * k), 0, cmath.exp(1j * (k * k * seg.t1 + k * seg.x1)))]))
            out.append(((k, "-"), [(float(-k * k - a * k), 0, cmath.exp(1j * (-k * k * seg.t1 + k * seg.x1)))]))
    else:
        raise ValueError(f"coefficient Gram not available for {family!r}")
    return out


def coefficient_gram(family: str, N: int, segments) -> np.ndarray:
    """Sum over segments of the Gram matrix in solution-coefficient space.

    ``c^H G c`` equals the total observed energy of the solution with
    coefficients ``c`` (ordering as in ``coefficient_labels``).
    """
    total = None
    for seg in segments:
        rows = _segment_basis(family, N, seg)
        terms = sorted({(f, d) for _, ts in rows for f, d, _ in ts})
        index = {t: i for i, t in enumerate(terms)}
        Mt = np.zeros((len(terms), len(rows)), dtype=complex)
        for j, (_, ts) in enumerate(rows):
            for f, d, fac in ts:
                Mt[index[(f, d)], j] += fac
        G = _fill_1d([f for f, _ in terms], [d for _, d in terms], float(seg.T))
        part = Mt.conj().T @ G @ Mt
        total = part if total is None else total + part
    return 0.5 * (total + total.conj().T)


def coefficient_labels(family: str, N: int):
    dummy = SegmentSpec(0.0, 0.0, 0, 1.0)
    return [lab for lab, _ in _segment_basis(family, N, dummy)]
