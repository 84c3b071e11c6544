import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oblique import _core, _fallback
from oblique.exact import rat_parse, scan_box

compiled = pytest.mark.skipif(_core.BACKEND != "compiled", reason="extension not built")


@compiled
@given(st.integers(-60, 60).filter(bool), st.integers(1, 7))
def test_circle_scan_parity(p, q):
    a = rat_parse(f"{p}/{q}")
    box = scan_box(a)
    assert sorted(_core.circle_scan(a.numerator, a.denominator, *box)) == sorted(
        _fallback.circle_scan(a.numerator, a.denominator, *box)
    )


@compiled
@given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=25), st.floats(0.01, 20))
def test_exp_gram_parity(freqs, T):
    f = np.array(freqs)
    assert np.allclose(_core.exp_gram(f, T), _fallback.exp_gram(f, T), atol=1e-9 * T, rtol=1e-9)


@compiled
@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=2, max_size=40))
def test_min_distance_parity(pts):
    xs = np.array([p[0] for p in pts], float)
    ys = np.array([p[1] for p in pts], float)
    assert _core.min_distance_2d(xs, ys) == _fallback.min_distance_2d(xs, ys)


def test_min_distance_single_point():
    assert _core.min_distance_2d(np.array([1.0]), np.array([2.0])) == float("inf")


def test_overflow_risk_routes_to_exact_path():
    p = 2**62 + 1
    assert sorted(_core.circle_scan(p, 1, p - 1, p + 1, -1, 1)) == [(p, 0)]


def test_pure_environment_switch():
    env = dict(os.environ, OBLIQUE_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from oblique import _core; print(_core.BACKEND)"], capture_output=True, text=True, env=env
    )
    assert out.stdout.strip() == "python"
