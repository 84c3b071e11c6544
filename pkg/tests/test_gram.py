import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from oblique import _core
from oblique.gram import (
    EigenSolverError,
    build_gram,
    coefficient_gram,
    coefficient_labels,
    extremal_eigs,
    gram_entry,
    gram_poly_entry,
    observability_constants,
    observability_sweep,
    sweep_is_interlaced,
)
from oblique.segments import PlateSegmentSpec, SegmentSpec
from oblique.spectra import beam_exponents, integer_exponents, plate_exponents, schrodinger_exponents


def quad_complex(f, T):
    re = quad(lambda t: f(t).real, 0, T, limit=400)[0]
    im = quad(lambda t: f(t).imag, 0, T, limit=400)[0]
    return re + 1j * im


def test_gram_entry_closed_form():
    assert abs(gram_entry(1, 0, math.pi) - 2j) < 1e-14
    assert gram_entry(3, 3, 2.5) == 2.5


@pytest.mark.parametrize("d1,d2", [(0, 0), (0, 1), (1, 0), (1, 1)])
@pytest.mark.parametrize("w", [0.0, 1e-5, 3e-3, 0.7, 12.0])
def test_poly_entry_matches_quadrature(d1, d2, w):
    T = 1.7
    got = gram_poly_entry(d1, w, d2, 0.0, T)
    ref = quad_complex(lambda t: t ** (d1 + d2) * np.exp(1j * w * t), T)
    assert abs(got - ref) < 1e-10


def test_parseval_integers():
    G = build_gram(integer_exponents(6), 2 * math.pi).entries
    assert np.allclose(G, 2 * math.pi * np.eye(G.shape[0]), atol=1e-12)


def test_readonly():
    G = build_gram(integer_exponents(2), 1.0)
    with pytest.raises(ValueError):
        G.entries[0, 0] = 0


def test_nonfinite_rejected():
    with pytest.raises(EigenSolverError):
        extremal_eigs(np.array([[1.0, np.nan], [np.nan, 1.0]]))


def test_empty_basis():
    with pytest.raises(ValueError):
        build_gram([], 1.0)


@given(st.lists(st.integers(-200, 200), min_size=1, max_size=12), st.floats(0.1, 10))
def test_hermitian_psd(values, T):
    basis = [(i, Fraction(v, 7), 0) for i, v in enumerate(values)]
    G = build_gram(basis, T)
    assert np.allclose(G.entries, G.entries.conj().T, atol=1e-12)
    lo, hi = extremal_eigs(G)
    assert lo >= -1e-10 * max(hi, 1)


@given(st.lists(st.integers(-60, 60), min_size=1, max_size=8), st.floats(0.2, 5))
def test_quadratic_form_equals_integral(values, T):
    freqs = [v / 3 for v in values]
    c = np.exp(1j * np.arange(len(freqs))) * (1 + np.arange(len(freqs)))
    G = build_gram([(i, f, 0) for i, f in enumerate(freqs)], T)

    def u(t):
        return sum(ck * np.exp(1j * f * t) for ck, f in zip(c, freqs))

    ref = quad(lambda t: abs(u(t)) ** 2, 0, T, limit=400)[0]
    assert G.quadratic_form(c) == pytest.approx(ref, rel=1e-7, abs=1e-9)


@given(st.integers(1, 8), st.floats(0.5, 4))
def test_integer_frequencies_periodic(N, T):
    """Integer frequencies: the window [0, T + 2 pi] adds exactly one 2 pi identity block."""
    G1 = build_gram(integer_exponents(N), T).entries
    G2 = build_gram(integer_exponents(N), T + 2 * math.pi).entries
    assert np.allclose(G2 - G1, 2 * math.pi * np.eye(G1.shape[0]), atol=1e-10)


def test_beam_basis_with_poly_block():
    E = beam_exponents("1/2", 2)
    G = build_gram(E, 3.0)
    t_row = [i for i, (_, _, d) in enumerate(G.basis) if d == 1][0]
    assert G.entries[t_row, t_row].real == pytest.approx(9.0)


def test_plate_gram_product_structure():
    E = plate_exponents(1, 2, 1)
    G = build_gram(E, (1.5, 2.0))
    i, j = 2, 5
    assert G.basis[i][2] == G.basis[j][2] == 0
    (_, f1, _), (_, f2, _) = G.basis[i], G.basis[j]
    ref = gram_entry(f2[0], f1[0], 1.5) * gram_entry(f2[1], f1[1], 2.0)
    assert abs(G.entries[i, j] - ref) < 1e-12


def test_collision_gives_singular():
    assert extremal_eigs(build_gram(schrodinger_exponents(2, 6), 1.0))[0] < 1e-12


@pytest.mark.parametrize("a", ["1/2", "1/3", "-13/5"])
def test_interlacing_sweep(a):
    sweep = observability_sweep("schrodinger", SegmentSpec(0.0, 0.0, a, 1.0), range(2, 12))
    assert sweep_is_interlaced(sweep)


def test_parallel_sweep_matches_serial():
    seg = SegmentSpec(0.0, 0.0, "1/2", 1.0)
    a = observability_sweep("schrodinger", seg, [3, 5], workers=1)
    b = observability_sweep("schrodinger", seg, [3, 5], workers=2)
    assert [e.c_minus for e in a] == [e.c_minus for e in b]


def test_wide_window_is_well_conditioned():
    e = observability_constants("schrodinger", SegmentSpec(0.0, 0.0, "1/2", 4 * math.pi + 0.5), 8)
    assert e.c_minus > 1.0


def test_coefficient_gram_two_segments_integer_null():
    """Two integer slopes give a positive coefficient-space form where one slope alone is singular."""
    one = coefficient_gram("schrodinger", 4, [SegmentSpec(0.0, 0.0, 2, 2 * math.pi)])
    assert np.linalg.eigvalsh(one)[0] < 1e-10
    assert len(coefficient_labels("schrodinger", 4)) == one.shape[0]


def test_plate_segment_observability_runs():
    seg = PlateSegmentSpec(0.0, 0.0, 0.0, 1, 1, 2 * math.pi)
    e = observability_constants("plate", seg, 2)
    assert e.size == 2 * 25 - 1 + 1


def test_backend_parity_exp_gram():
    rng = np.random.default_rng(1)
    f = np.sort(rng.uniform(-40, 40, 30))
    f[3] = f[4]
    assert np.allclose(_core.exp_gram(f, 1.3), _core.exp_gram(f, 1.3, backend="python"), atol=1e-12)
