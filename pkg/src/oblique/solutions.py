"""Fourier-series solutions of the periodic Schrodinger, beam and plate equations:
evaluation, restriction to observation segments, energies, and the explicit
null / vanishing-ratio constructions."""

from __future__ import annotations

import cmath
import json
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

import numpy as np

from .exact import circle_member, rat_parse, rat_str
from .gram import GramMatrix, build_gram
from .segments import PlateSegmentSpec, SegmentSpec

FAMILIES = ("schrodinger_periodic", "schrodinger_dirichlet", "beam_periodic", "plate_periodic")

SCHEMA = 1


class QuadratureMismatch(RuntimeError):
    """Gram and quadrature energies disagree beyond tolerance."""


@dataclass(frozen=True)
class SolutionSpec:
    """Finitely supported coefficient map of one PDE family.

    Keys: ``k`` (Schrodinger); ``(k, +1 | -1)`` (beam, where ``(0, +1)`` is the
    constant and ``(0, -1)`` the coefficient of ``t``); ``(k, l, +1 | -1)``
    (plate, same convention at ``(0, 0)``).
    """

    family: str
    coeffs: MappingProxyType

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        clean = {}
        for key, c in dict(self.coeffs).items():
            key = _check_key(self.family, key)
            c = complex(c)
            if c != 0:
                clean[key] = clean.get(key, 0) + c
        object.__setattr__(self, "coeffs", MappingProxyType(clean))
        if self.family == "schrodinger_dirichlet":
            for k, c in clean.items():
                if abs(c + clean.get(-k, 0)) > 1e-12 * max(1.0, abs(c)):
                    raise ValueError(f"Dirichlet spec needs c_k + c_-k = 0 (fails at k={k})")

    @property
    def dimension(self) -> int:
        return 3 if self.family == "plate_periodic" else 2

    def coefficient_norm_sq(self) -> float:
        """``sum |c|^2`` over all coefficients."""
        return float(sum(abs(c) ** 2 for c in self.coeffs.values()))

    def l2_norm_sq(self) -> float:
        """``||u_0||^2`` on the period cell for Schrodinger data (``2 pi sum |c_k|^2``)."""
        return 2 * math.pi * self.coefficient_norm_sq()

    def to_json(self) -> str:
        return json.dumps(spec_to_dict(self), sort_keys=True)


def _check_key(family, key):
    if family.startswith("schrodinger"):
        if isinstance(key, (tuple, list)):
            (key,) = key
        return int(key)
    key = tuple(int(v) for v in key)
    want = 3 if family == "plate_periodic" else 2
    if len(key) != want or key[-1] not in (1, -1):
        raise ValueError(f"bad coefficient key {key} for {family}")
    return key


def spec_to_dict(u: SolutionSpec) -> dict:
    rows = []
    for key in sorted(u.coeffs, key=lambda k: k if isinstance(k, tuple) else (k,)):
        c = u.coeffs[key]
        idx = list(key) if isinstance(key, tuple) else [key]
        rows.append({"index": idx, "re": c.real, "im": c.imag})
    return {"schema": SCHEMA, "family": u.family, "coefficients": rows}


def spec_from_dict(d: dict) -> SolutionSpec:
    if d.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {d.get('schema')!r}")
    coeffs = {}
    for row in d["coefficients"]:
        idx = row["index"]
        key = idx[0] if len(idx) == 1 else tuple(idx)
        coeffs[key] = complex(row["re"], row["im"])
    return SolutionSpec(d["family"], coeffs)


def spec_from_json(s: str) -> SolutionSpec:
    return spec_from_dict(json.loads(s))


# -- evaluation ---------------------------------------------------------------


def evaluate(u: SolutionSpec, t, x, y=None):
    """Value of the solution at ``(t, x)`` (or ``(t, x, y)`` for plates); broadcasts."""
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    out = np.zeros(np.broadcast_shapes(t.shape, x.shape, np.shape(y) if y is not None else ()), dtype=complex)
    fam = u.family
    if fam.startswith("schrodinger"):
        for k, c in u.coeffs.items():
            out += c * np.exp(1j * (k * k * t + k * x))
    elif fam == "beam_periodic":
        for (k, s), c in u.coeffs.items():
            if k == 0:
                out += c if s == 1 else c * t
            else:
                out += c * np.exp(1j * (s * k * k * t + k * x))
    else:
        if y is None:
            raise ValueError("plate evaluation needs (t, x, y)")
        y = np.asarray(y, dtype=float)
        for (k, l, s), c in u.coeffs.items():
            if (k, l) == (0, 0):
                out += c if s == 1 else c * t
            else:
                out += c * np.exp(1j * (s * (k * k + l * l) * t + k * x + l * y))
    return out


# -- restriction to a segment ---------------------------------------------------


@dataclass(frozen=True)
class RestrictedSum:
    """``sum amp * t^degree * exp(i freq t)`` along a segment, merged by ``(freq, degree)``.

    For plates ``freq`` is the pair ``(s-frequency, t-frequency)``.
    """

    terms: tuple  # (freq, degree, amplitude)
    window: object

    @property
    def amplitudes(self):
        return [amp for _, _, amp in self.terms]

    def defect(self) -> float:
        """``sum |amplitude|^2`` over merged terms."""
        return float(sum(abs(a) ** 2 for a in self.amplitudes))

    def gram(self) -> GramMatrix:
        return build_gram([(i, f, d) for i, (f, d, _) in enumerate(self.terms)], self.window)

    def energy(self) -> float:
        if not self.terms:
            return 0.0
        return max(self.gram().quadratic_form(self.amplitudes), 0.0)


def _raw_terms(u: SolutionSpec, seg):
    """Unmerged ``(freq, degree, amplitude)`` per coefficient."""
    fam = u.family
    if fam.startswith("schrodinger"):
        _need(seg, SegmentSpec)
        a = seg.a
        for k, c in u.coeffs.items():
            d = c * cmath.exp(1j * (k * k * seg.t1 + k * seg.x1))
            yield Fraction(k * k) - a * k, 0, d
    elif fam == "beam_periodic":
        _need(seg, SegmentSpec)
        a = seg.a
        for (k, s), c in u.coeffs.items():
            if k == 0:
                if s == 1:
                    yield Fraction(0), 0, c
                else:
                    yield Fraction(0), 0, c * seg.t1
                    yield Fraction(0), 1, c
            else:
                d = c * cmath.exp(1j * (s * k * k * seg.t1 + k * seg.x1))
                yield Fraction(s * k * k) - a * k, 0, d
    else:
        _need(seg, PlateSegmentSpec)
        for (k, l, s), c in u.coeffs.items():
            if (k, l) == (0, 0):
                if s == 1:
                    yield (0, 0), 0, c
                else:
                    yield (0, 0), 0, c * seg.t1
                    yield (0, 0), 1, c
            else:
                r = k * k + l * l
                d = c * cmath.exp(1j * (s * r * seg.t1 + k * seg.x1 + l * seg.y1))
                yield (seg.a * k + seg.b * l, s * r), 0, d


def _need(seg, cls):
    if not isinstance(seg, cls):
        raise TypeError(f"{cls.__name__} required for this family")


def restrict_to_segment(u: SolutionSpec, seg) -> RestrictedSum:
    """Restricted exponential sum with amplitudes merged across exact collisions."""
    merged = defaultdict(complex)
    for f, deg, amp in _raw_terms(u, seg):
        merged[(f, deg)] += amp
    terms = tuple((f, deg, merged[(f, deg)]) for f, deg in sorted(merged, key=_term_key))
    window = (seg.S, seg.T) if isinstance(seg, PlateSegmentSpec) else seg.T
    return RestrictedSum(terms, window)


def _term_key(fd):
    f, d = fd
    return (tuple(f) if isinstance(f, tuple) else (f,), d)


# -- quadrature -----------------------------------------------------------------

_NODES = 16


def _gl_panels(L: float, fmax: float):
    """Composite Gauss-Legendre nodes/weights on ``(0, L)``.

    Panels no longer than the shortest period, 16 nodes each, so the node
    spacing stays below ``pi / (4 fmax)``.
    """
    xg, wg = np.polynomial.legendre.leggauss(_NODES)
    npan = max(1, int(math.ceil(L * max(fmax, 1e-300) / (2 * math.pi))))
    h = L / npan
    left = np.arange(npan) * h
    nodes = (left[:, None] + 0.5 * h * (xg[None, :] + 1)).ravel()
    weights = np.tile(0.5 * h * wg, npan)
    return nodes, weights


def _max_freq(u, seg):
    fs = [f for f, _, amp in _raw_terms(u, seg) if amp != 0]
    if not fs:
        return (1.0, 1.0) if isinstance(seg, PlateSegmentSpec) else 1.0
    if isinstance(fs[0], tuple):
        return max(max(abs(float(f[0])) for f in fs), 1.0), max(max(abs(float(f[1])) for f in fs), 1.0)
    return max(max(abs(float(f)) for f in fs), 1.0)


def quadrature_energy(u: SolutionSpec, seg) -> float:
    """Energy along the segment by composite Gauss-Legendre on direct evaluation."""
    if isinstance(seg, PlateSegmentSpec):
        fs, ft = _max_freq(u, seg)
        s, ws = _gl_panels(seg.S, fs)
        t, wt = _gl_panels(seg.T, ft)
        total = 0.0
        for si, wsi in zip(s, ws):
            vals = evaluate(u, seg.t1 + t, seg.x1 + seg.a * si, seg.y1 + seg.b * si)
            total += wsi * float(np.sum(wt * np.abs(vals) ** 2))
        return float(total)
    t, w = _gl_panels(seg.T, _max_freq(u, seg))
    a = float(seg.a)
    vals = evaluate(u, seg.t1 + t, seg.x1 - a * t)
    return float(np.sum(w * np.abs(vals) ** 2))


def energy_paths(u: SolutionSpec, seg) -> tuple[float, float]:
    """(Gram-path energy, quadrature-path energy)."""
    return restrict_to_segment(u, seg).energy(), quadrature_energy(u, seg)


def segment_energy(u: SolutionSpec, seg, verify: bool = True, rtol: float = 1e-6) -> float:
    """``int |u|^2`` over the observation segment.

    Computed from the Gram quadratic form of the merged restricted sum. With
    ``verify`` the direct-evaluation quadrature must agree to ``rtol``
    (relative, with an absolute floor scaled by the coefficient norm).
    """
    R = restrict_to_segment(u, seg)
    e = R.energy()
    if verify:
        q = quadrature_energy(u, seg)
        measure = seg.S * seg.T if isinstance(seg, PlateSegmentSpec) else seg.T
        floor = 1e-12 * measure * max(u.coefficient_norm_sq(), 1.0)
        if abs(e - q) > rtol * max(e, q) + floor:
            raise QuadratureMismatch(f"Gram energy {e!r} vs quadrature {q!r}")
    return e


def sample_segment(u: SolutionSpec, seg: SegmentSpec, n: int = 200):
    """Rows ``(t, Re u, Im u, |u|)`` at ``n`` equispaced times along the segment."""
    t = np.linspace(0.0, seg.T, n)
    vals = evaluate(u, seg.t1 + t, seg.x1 - float(seg.a) * t)
    return [(float(ti), float(v.real), float(v.imag), float(abs(v))) for ti, v in zip(t, vals)]


# -- Schrodinger constructions -----------------------------------------------------


def _int_slope(a) -> int:
    a = rat_parse(a)
    if a.denominator != 1:
        raise ValueError(f"integer slope required, got {rat_str(a)}")
    return int(a)


def _partner_coefficient(a: int, k: int, t1: float, x1: float) -> complex:
    """``c_{a-k}`` cancelling ``c_k = 1`` on the segment through ``(t1, x1)``."""
    j = a - k
    return -cmath.exp(1j * ((k * k - j * j) * t1 + (k - j) * x1))


def null_schrodinger(a, t1: float, x1: float, k: int) -> SolutionSpec:
    """Two-mode periodic solution vanishing on ``{(t1 + t, x1 - a t)}`` (integer ``a``)."""
    a = _int_slope(a)
    if 2 * k == a:
        raise ValueError("k = a/2 has no partner mode")
    return SolutionSpec("schrodinger_periodic", {k: 1.0, a - k: _partner_coefficient(a, k, t1, x1)})


def null_schrodinger_dirichlet(a, t1: float, x1: float, k: int) -> SolutionSpec:
    """Odd four-mode combination built from the two-mode null pair.

    Modes ``k, a-k`` carry ``c/2i`` and their mirrors ``-k, k-a`` carry
    ``-c/2i``. The ``k, a-k`` pair cancels on the segment; the mirrored pair
    sits at frequencies ``k^2 + a k`` and ``k^2 - 3 a k + 2 a^2``, which differ
    unless ``a = 0``, so the segment energy is generally positive.
    """
    a = _int_slope(a)
    idx = {k, a - k, -k, k - a}
    if len(idx) != 4:
        raise ValueError(f"indices k, a-k, -k, k-a must be distinct (got {sorted(idx)})")
    ck, cj = 1.0, _partner_coefficient(a, k, t1, x1)
    coeffs = {k: ck / 2j, -k: -ck / 2j, a - k: cj / 2j, k - a: -cj / 2j}
    return SolutionSpec("schrodinger_dirichlet", coeffs)


def _phase(k: int, t: float, x: float) -> complex:
    return cmath.exp(1j * (k * k * t + k * x))


@dataclass(frozen=True)
class ChainConstruction:
    spec: SolutionSpec
    segments: tuple
    d: MappingProxyType  # k -> d_k on the first segment
    q: int
    p: int


def vanishing_ratio_chain(a1, a2, first, second, n: int, T: float = 1.0) -> ChainConstruction:
    """Chain of ``2n + 2`` unimodular coefficients with two-segment defect 2.

    ``first = (t1, x1)`` observes slope ``a1``, ``second = (t2, x2)`` slope ``a2``.
    ``omega_k = phi_k / phi_{a2-k}`` with ``phi_k = exp(i(k^2 (t2-t1) + k (x2-x1)))``
    turns the second-segment pairing ``e_k + e_{a2-k}`` into
    ``omega_k d_k + d_{a1-k+p}`` up to a unimodular factor.
    """
    a1, a2 = _int_slope(a1), _int_slope(a2)
    if a1 == a2:
        raise ValueError("slopes must differ")
    if a2 < a1:
        a1, a2, first, second = a2, a1, second, first
    (t1, x1), (t2, x2) = first, second
    p = a2 - a1
    q = a1 // 2 + 1  # smallest integer > a1/2

    def phi(k):
        return cmath.exp(1j * (k * k * (t2 - t1) + k * (x2 - x1)))

    def omega(k):
        return phi(k) / phi(a2 - k)

    d = {q: 1.0 + 0j}
    d[a1 - q] = -d[q]
    for j in range(1, n + 1):
        lo = a1 - q - (j - 1) * p
        d[q + j * p] = -omega(lo) * d[lo]
        d[a1 - q - j * p] = -d[q + j * p]
    coeffs = {k: dk / _phase(k, t1, x1) for k, dk in d.items()}
    spec = SolutionSpec("schrodinger_periodic", coeffs)
    segs = (SegmentSpec(t1, x1, a1, T), SegmentSpec(t2, x2, a2, T))
    return ChainConstruction(spec, segs, MappingProxyType(d), q, p)


def two_segment_defect(u: SolutionSpec, segments) -> float:
    """``sum`` over segments of the merged-amplitude defect ``sum |d_k + d_{a-k}|^2``."""
    return float(sum(restrict_to_segment(u, s).defect() for s in segments))


def vanishing_ratio_sgn(a_list, point, n: int) -> SolutionSpec:
    """``d_k = sgn k`` for ``|k| <= n`` at the common observation point ``(t1, x1)``."""
    for a in a_list:
        _int_slope(a)
    t1, x1 = point
    coeffs = {k: (1.0 if k > 0 else -1.0) / _phase(k, t1, x1) for k in range(-n, n + 1) if k}
    return SolutionSpec("schrodinger_periodic", coeffs)


def sgn_defect_counts(a: int, n: int) -> dict:
    """Counts of ``k`` with ``d_k + d_{a-k}`` equal to 2 and to 1 for ``d_k = sgn k``."""
    a = _int_slope(a)

    def d(k):
        return 0 if k == 0 or abs(k) > n else (1 if k > 0 else -1)

    twos = sum(1 for k in range(-n - abs(a) - 1, n + abs(a) + 2) if d(k) + d(a - k) == 2)
    ones = sum(1 for k in range(-n - abs(a) - 1, n + abs(a) + 2) if d(k) + d(a - k) == 1)
    return {"twos": twos, "ones": ones}


def energy_ratio(u: SolutionSpec, segments, verify: bool = False) -> float:
    """Total observed energy over ``||u_0||^2 = 2 pi sum |c_k|^2``."""
    e = sum(segment_energy(u, s, verify=verify) for s in segments)
    return e / u.l2_norm_sq()


# -- beam constructions ---------------------------------------------------------


@dataclass(frozen=True)
class PiMultiple:
    """The real number ``r * pi`` with ``r`` rational."""

    r: Fraction

    def __float__(self):
        return float(self.r) * math.pi


def parse_time(s) -> float | PiMultiple:
    """Decimal text, or ``"<rational>pi"`` for exact multiples of pi."""
    if isinstance(s, (PiMultiple, float, int)):
        return s
    txt = s.strip().replace("π", "pi")
    if txt.endswith("pi"):
        head = txt[:-2].strip().rstrip("*").strip()
        if head in ("", "+"):
            return PiMultiple(Fraction(1))
        if head == "-":
            return PiMultiple(Fraction(-1))
        try:
            return PiMultiple(rat_parse(head))
        except ValueError:
            return PiMultiple(Fraction(head))  # exact decimal text, e.g. "0.25pi"
    return float(txt)


def beam_det(k: int, t1: float, t2: float) -> complex:
    """Determinant of ``[[e^{ik^2 t1}, e^{-ik^2 t1}], [e^{ik^2 t2}, e^{-ik^2 t2}]]``."""
    kk = k * k
    return cmath.exp(1j * kk * t1) * cmath.exp(-1j * kk * t2) - cmath.exp(-1j * kk * t1) * cmath.exp(1j * kk * t2)


def find_singular_k(ratio, kmax: int = 10_000) -> int | None:
    """Smallest ``k >= 1`` with ``k^2 (t2 - t1) / pi`` an integer, for rational ``ratio``."""
    r = rat_parse(ratio)
    for k in range(1, kmax + 1):
        if (k * k * r).denominator == 1:
            return k
    return None


def _slices_compatible(t1, t2, k: int) -> bool:
    if isinstance(t1, PiMultiple) and isinstance(t2, PiMultiple):
        return (k * k * (t2.r - t1.r)).denominator == 1
    v = k * k * (float(t2) - float(t1)) / math.pi
    return abs(v - round(v)) <= 1e-12 * max(1.0, abs(v))


def null_beam_vertical(t1, t2, k: int) -> SolutionSpec:
    """Single-mode beam solution vanishing identically at times ``t1`` and ``t2``.

    Requires ``k^2 (t2 - t1)`` to be a multiple of ``pi`` (exact when both
    times are ``PiMultiple``).
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    if not _slices_compatible(t1, t2, k):
        raise ValueError(f"k^2 (t2 - t1) is not a multiple of pi for k={k}")
    t1f = float(t1)
    kk = k * k
    return SolutionSpec(
        "beam_periodic", {(k, 1): cmath.exp(-1j * kk * t1f), (k, -1): -cmath.exp(1j * kk * t1f)}
    )


def null_beam_oblique(a, t1: float, x1: float, point) -> SolutionSpec:
    """Two-mode beam solution vanishing on ``{(t1 + t, x1 - a t)}`` for ``(k, m)`` in ``A_a``."""
    a = rat_parse(a)
    k, m = point
    if (k, m) == (0, 0) or not circle_member(a, (k, m)):
        raise ValueError(f"({k}, {m}) is not a nonzero point of A_{rat_str(a)}")
    ck = cmath.exp(1j * (-m * m * t1 + m * x1))
    cm = -cmath.exp(1j * (k * k * t1 + k * x1))
    # at index 0 both branch exponentials reduce to the constant mode
    key_k = (k, 1) if k else (0, 1)
    key_m = (m, -1) if m else (0, 1)
    return SolutionSpec("beam_periodic", {key_k: ck, key_m: cm})


def slice_energy(u: SolutionSpec, t: float, L: float = 2 * math.pi, x0: float = 0.0) -> float:
    """``int_{x0}^{x0+L} |u(t, x)|^2 dx`` from the spatial Gram form."""
    if u.family != "beam_periodic":
        raise ValueError("beam spec required")
    t = float(t)
    amps = defaultdict(complex)
    for (k, s), c in u.coeffs.items():
        if k == 0:
            amps[0] += c if s == 1 else c * t
        else:
            amps[k] += c * cmath.exp(1j * s * k * k * t)
    ks = sorted(amps)
    if not ks:
        return 0.0
    v = np.array([amps[k] * cmath.exp(1j * k * x0) for k in ks])
    G = build_gram([(k, k, 0) for k in ks], L)
    return max(G.quadratic_form(v), 0.0)


def slice_energy_quadrature(u: SolutionSpec, t: float, L: float = 2 * math.pi, x0: float = 0.0) -> float:
    kmax = max([abs(k) for (k, _) in u.coeffs] + [1])
    x, w = _gl_panels(L, kmax)
    vals = evaluate(u, float(t), x0 + x)
    return float(np.sum(w * np.abs(vals) ** 2))


def parseval_slice(u: SolutionSpec, t: float) -> float:
    """``2 pi (|c0+ + c0- t|^2 + sum_k |c_k^+ e^{ik^2 t} + c_k^- e^{-ik^2 t}|^2)``."""
    t = float(t)
    c = u.coeffs
    total = abs(c.get((0, 1), 0) + c.get((0, -1), 0) * t) ** 2
    ks = {k for (k, _) in c if k}
    for k in ks:
        total += abs(c.get((k, 1), 0) * cmath.exp(1j * k * k * t) + c.get((k, -1), 0) * cmath.exp(-1j * k * k * t)) ** 2
    return 2 * math.pi * total


def weighted_lhs(u: SolutionSpec, t1: float, t2: float) -> float:
    """``|c0+|^2 + |c0-|^2 + sum_k sin^2(k^2 (t1 - t2)) (|c_k^+|^2 + |c_k^-|^2)``."""
    c = u.coeffs
    total = abs(c.get((0, 1), 0)) ** 2 + abs(c.get((0, -1), 0)) ** 2
    for k in {k for (k, _) in c if k}:
        w = math.sin(k * k * (float(t1) - float(t2))) ** 2
        total += w * (abs(c.get((k, 1), 0)) ** 2 + abs(c.get((k, -1), 0)) ** 2)
    return total


def weighted_constant(t1: float, t2: float) -> float:
    """Constant ``C`` with ``weighted_lhs <= C * (two-slice energy)`` over length ``>= 2 pi``.

    Modes ``k != 0`` need ``1/(2 pi)``; the ``{1, t}`` block needs
    ``1/(2 pi s^2)`` with ``s`` the smallest singular value of ``[[1, t1], [1, t2]]``.
    """
    B = np.array([[1.0, float(t1)], [1.0, float(t2)]])
    s = np.linalg.svd(B, compute_uv=False)[-1]
    return 1.0 / (2 * math.pi * min(1.0, s * s))


def weighted_inverse_check(u: SolutionSpec, t1, t2, L: float = 2 * math.pi) -> dict:
    """Weighted two-slice inverse inequality for a beam spec."""
    if u.family != "beam_periodic":
        raise ValueError("beam spec required")
    if L < 2 * math.pi:
        raise ValueError("x-window must have length >= 2 pi")
    lhs = weighted_lhs(u, t1, t2)
    rhs = slice_energy(u, t1, L) + slice_energy(u, t2, L)
    C = weighted_constant(t1, t2)
    return {
        "lhs": lhs,
        "rhs": rhs,
        "ratio": lhs / rhs if rhs > 0 else (math.inf if lhs > 0 else 0.0),
        "constant": C,
        "holds": lhs <= C * rhs * (1 + 1e-9) + 1e-14,
    }


# -- plate ----------------------------------------------------------------------


def null_plate_perpendicular(a: int, b: int, t1: float, x1: float, y1: float) -> SolutionSpec:
    """Modes ``(b, -a)`` and ``(-b, a)`` combined to vanish on the segment direction ``(a, b)``.

    Both modes have segment frequency ``(0, a^2 + b^2)``; the combination is
    ``e^{i r t} sin(b (x - x1) - a (y - y1))`` up to a constant factor.
    """
    if (a, b) == (0, 0):
        raise ValueError("(a, b) must be nonzero")
    c1 = 1.0
    # with r = a^2 + b^2: c2 * e^{i(r t1 - b x1 + a y1)} = -e^{i(r t1 + b x1 - a y1)}
    c2 = -cmath.exp(1j * (2 * b * x1 - 2 * a * y1))
    return SolutionSpec("plate_periodic", {(b, -a, 1): c1, (-b, a, 1): c2})
