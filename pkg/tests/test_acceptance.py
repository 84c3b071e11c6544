"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (lines are repeated in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
Tolerances are fixed here and never loosened to make a criterion pass.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np

from oblique import _core
from oblique.exact import enumerate_aset, rat_parse
from oblique.gram import observability_constants, observability_sweep, sweep_is_interlaced
from oblique.obstruction import (
    build_graph,
    constraint_system,
    find_cycles,
    graph_from_asets,
    kernel_from_asets,
    kernel_oracle,
    maximal_paths,
    search_cycles,
    synthetic_instance,
)
from oblique.segments import SegmentSpec
from oblique.solutions import (
    beam_det,
    energy_paths,
    energy_ratio,
    find_singular_k,
    null_beam_oblique,
    null_beam_vertical,
    null_schrodinger,
    null_schrodinger_dirichlet,
    parseval_slice,
    slice_energy,
    slice_energy_quadrature,
    two_segment_defect,
    vanishing_ratio_chain,
    vanishing_ratio_sgn,
    weighted_inverse_check,
    SolutionSpec,
)

RESULTS = []

SEED = 20240611
NULL_ENERGY_TOL = 1e-10
DRAWS = 50

# mu_min at N = 30, T = 1, t1 = x1 = 0, recorded on the first certified run
GOLDEN_MU_MIN_30 = {"1/2": 9.442086583286553e-12, "1/3": 7.021752057176468e-12, "-13/5": 8.075989512296117e-12}
GOLDEN_RTOL = 1e-2


def report(n, name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {name} -- {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def _brute_aset(a):
    R = int(abs(a) * 3) + 2
    return sorted(
        (x, y)
        for x in range(-R, R + 1)
        for y in range(-R, R + 1)
        if (x, y) != (0, 0) and Fraction(x * x + y * y) - a * x + a * y == 0
    )


def _svd_nullity(M):
    if M.shape[1] == 0:
        return 0
    if M.shape[0] == 0:
        return M.shape[1]
    s = np.linalg.svd(M, compute_uv=False)
    return M.shape[1] - int(np.sum(s > 1e-9))


def test_criterion_1_lattice_fidelity():
    t0 = time.perf_counter()
    problems = []
    if not {(-3, 2), (-2, 3)} <= set(enumerate_aset("-13/5")):
        problems.append("A(-13/5)")
    if not {(-4, 2), (-2, 4)} <= set(enumerate_aset("-10/3")):
        problems.append("A(-10/3)")
    A5 = enumerate_aset(5)
    if len(A5) != 11 or sorted(A5) != _brute_aset(Fraction(5)):
        problems.append("A(5)")
    slopes = {Fraction(p, q) for q in range(1, 7) for p in range(-10 * q, 10 * q + 1) if p}
    for a in sorted(slopes):
        A = enumerate_aset(a)
        pts = set(A)
        if any((-y, -x) not in pts for x, y in pts):
            problems.append(f"reflection {a}")
        if len(A) > math.sqrt(2) * math.pi * abs(a):
            problems.append(f"cardinality {a}")
        if a.denominator == 1 and not {(int(a), 0), (0, -int(a)), (int(a), -int(a))} <= pts:
            problems.append(f"triple {a}")
    dt = time.perf_counter() - t0
    ok = not problems and dt < 5
    report(1, "lattice fidelity", ok, f"{len(slopes)} slopes checked, |A_5|={len(A5)}, issues={problems[:3]}, {dt:.2f}s")
    assert ok


def test_criterion_2_graph_kernel():
    t0 = time.perf_counter()
    G = build_graph(["-13/5", "-10/3"])
    n_paths = len([p for p in maximal_paths(G) if len(p) > 1])
    n_cycles = len(find_cycles(G))
    kdim = kernel_oracle(["-13/5", "-10/3"]).dimension
    rng = random.Random(SEED)
    mismatches = with_cycle = 0
    for _ in range(1000):
        sets = synthetic_instance(rng)
        has_cycle = bool(find_cycles(graph_from_asets(sets)))
        _, M = constraint_system([tuple(s) for s in sets])
        nullity = _svd_nullity(M)
        mismatches += has_cycle != (nullity > 0)
        mismatches += kernel_from_asets(sets).dimension != nullity
        with_cycle += has_cycle
    dt = time.perf_counter() - t0
    ok = (n_paths, n_cycles, kdim) == (2, 0, 0) and mismatches == 0 and dt < 60
    report(
        2,
        "graph/kernel",
        ok,
        f"example paths={n_paths} cycles={n_cycles} kernel={kdim}; 1000 synthetic ({with_cycle} with cycles), "
        f"mismatches={mismatches}, {dt:.2f}s",
    )
    assert ok


def test_criterion_3_non_observability_detection():
    t0 = time.perf_counter()
    bad = []
    for a in range(-5, 6):
        e = observability_constants("schrodinger", SegmentSpec(0.0, 0.0, a, 1.0), 8)
        if not e.c_minus <= 1e-9 * e.c_plus:
            bad.append(f"a={a}: {e.c_minus:.3e}")
    stab = []
    for a, golden in GOLDEN_MU_MIN_30.items():
        seg = SegmentSpec(0.0, 0.0, a, 1.0)
        m30 = observability_constants("schrodinger", seg, 30).c_minus
        m60 = observability_constants("schrodinger", seg, 60).c_minus
        ratio = m60 / m30
        stab.append(f"{a}: ratio={ratio:.4f}")
        if not (m30 > 0 and m60 > 0 and ratio >= 0.9):
            bad.append(f"a={a} ratio {ratio}")
        if abs(m30 - golden) > GOLDEN_RTOL * golden:
            bad.append(f"a={a} golden drift {m30:.4e} vs {golden:.4e}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 120
    report(3, "non-observability detection", ok, f"integer |a|<=5 singular; {', '.join(stab)}; issues={bad}; {dt:.2f}s")
    assert ok


def _energy_ok(u, seg):
    g, q = energy_paths(u, seg)
    return max(g, q), u.coefficient_norm_sq() >= 1 and g <= NULL_ENERGY_TOL and q <= NULL_ENERGY_TOL


def test_criterion_4a_null_schrodinger():
    rng = random.Random(SEED + 1)
    worst, fails = 0.0, 0
    for _ in range(DRAWS):
        a = rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
        k = rng.choice([k for k in range(-6, 7) if 2 * k != a])
        t1, x1, T = rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(0.5, 4)
        e, ok = _energy_ok(null_schrodinger(a, t1, x1, k), SegmentSpec(t1, x1, a, T))
        worst, fails = max(worst, e), fails + (not ok)
    report("4a", "null periodic Schrodinger solutions", fails == 0, f"{DRAWS} draws, worst energy {worst:.2e}")
    assert fails == 0


def test_criterion_4b_null_schrodinger_dirichlet():
    """The four-mode odd construction; its mirrored pair does not cancel for a != 0."""
    rng = random.Random(SEED + 2)
    worst, best, fails = 0.0, math.inf, 0
    for _ in range(DRAWS):
        a = rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
        k = rng.choice([k for k in range(-6, 7) if len({k, a - k, -k, k - a}) == 4])
        t1, x1, T = rng.uniform(-3, 3), rng.uniform(0.2, 3), rng.uniform(0.5, 4)
        u = null_schrodinger_dirichlet(a, t1, x1, k)
        e, ok = _energy_ok(u, SegmentSpec(t1, x1, a, T))
        worst, best, fails = max(worst, e), min(best, e), fails + (not ok)
    report(
        "4b",
        "null Dirichlet Schrodinger solutions",
        fails == 0,
        f"{DRAWS} draws, {fails} non-vanishing, energy range [{best:.2e}, {worst:.2e}]",
    )
    assert fails == 0


def test_criterion_4c_null_beam_vertical():
    rng = random.Random(SEED + 3)
    worst, fails = 0.0, 0
    for _ in range(DRAWS):
        r = Fraction(rng.randint(1, 11), rng.randint(1, 6))
        k = find_singular_k(r)
        t1 = rng.uniform(-3, 3)
        t2 = t1 + float(r) * math.pi
        u = null_beam_vertical(t1, t2, k)
        es = [f(u, t) for t in (t1, t2) for f in (slice_energy, slice_energy_quadrature)]
        e = max(es)
        ok = u.coefficient_norm_sq() >= 1 and e <= NULL_ENERGY_TOL
        worst, fails = max(worst, e), fails + (not ok)
    report("4c", "null beam solutions on two time slices", fails == 0, f"{DRAWS} draws, worst slice energy {worst:.2e}")
    assert fails == 0


def test_criterion_4d_null_beam_oblique():
    rng = random.Random(SEED + 4)
    slopes = [a for a in ["1", "2", "-3", "5", "7", "-13/5", "-10/3", "25/2"] if len(enumerate_aset(a))]
    worst, fails = 0.0, 0
    for _ in range(DRAWS):
        a = rng.choice(slopes)
        pt = rng.choice(enumerate_aset(a).points)
        t1, x1, T = rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(0.5, 4)
        e, ok = _energy_ok(null_beam_oblique(a, t1, x1, pt), SegmentSpec(t1, x1, a, T))
        worst, fails = max(worst, e), fails + (not ok)
    report("4d", "null beam solutions on one oblique segment", fails == 0, f"{DRAWS} draws, worst energy {worst:.2e}")
    assert fails == 0


def test_criterion_5_vanishing_ratios():
    t0 = time.perf_counter()
    bad = []
    for a1, a2 in [(3, 4), (2, 5), (-1, 3), (1, 2)]:
        for n in (1, 5, 20, 60):
            ch = vanishing_ratio_chain(a1, a2, (0.3, -0.2), (1.7, 0.9), n)
            if len(ch.d) != 2 * n + 2 or any(abs(abs(v) - 1) > 1e-12 for v in ch.d.values()):
                bad.append(f"chain size ({a1},{a2},{n})")
            if abs(ch.spec.coefficient_norm_sq() - (2 * n + 2)) > 1e-9:
                bad.append(f"chain norm ({a1},{a2},{n})")
            if abs(two_segment_defect(ch.spec, ch.segments) - 2) > 1e-9:
                bad.append(f"chain defect ({a1},{a2},{n})")
    ratios = {}
    for slopes in ([1, 2], [1, 2, 3]):
        segs = [SegmentSpec(0.0, 0.0, a, 1.0) for a in slopes]
        r = {}
        for n in (25, 200):
            u = vanishing_ratio_sgn(slopes, (0.0, 0.0), n)
            if abs(u.l2_norm_sq() - 4 * n * math.pi) > 1e-9 * n:
                bad.append(f"sgn norm {slopes} n={n}")
            r[n] = energy_ratio(u, segs, verify=True)
        ratios[str(slopes)] = r[200] / r[25]
        if not r[200] <= 0.25 * r[25]:
            bad.append(f"sgn ratio {slopes}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 30
    report(5, "vanishing ratios", ok, f"ratio(200)/ratio(25)={ {k: round(v, 4) for k, v in ratios.items()} }; issues={bad}; {dt:.2f}s")
    assert ok


def _random_beam_spec(rng, modes=10):
    keys = set()
    while len(keys) < modes:
        k = rng.randint(-8, 8)
        keys.add((k, rng.choice([1, -1])))
    return SolutionSpec("beam_periodic", {key: complex(rng.gauss(0, 1), rng.gauss(0, 1)) for key in keys})


def test_criterion_6_beam_two_slice():
    rng = random.Random(SEED + 6)
    det_err = 0.0
    for _ in range(20):
        t1, t2 = rng.uniform(-3, 3), rng.uniform(-3, 3)
        for k in range(-20, 21):
            det_err = max(det_err, abs(beam_det(k, t1, t2) - (-2j * math.sin(k * k * (t2 - t1)))))
    singular = {}
    for r in ["1/2", "1/3", "2/5", "3/4", "5/6", "7/3"]:
        k = find_singular_k(r)
        singular[r] = k
        if k is None or abs(beam_det(k, 0.0, float(rat_parse(r)) * math.pi)) > 1e-12:
            singular[r] = None
    weighted_fail = 0
    parseval_err = 0.0
    for _ in range(100):
        u = _random_beam_spec(rng)
        t1 = rng.uniform(-2, 2)
        t2 = t1 + rng.uniform(0.1, 3)
        weighted_fail += not weighted_inverse_check(u, t1, t2)["holds"]
        for t in (t1, t2):
            ref = parseval_slice(u, t)
            parseval_err = max(parseval_err, abs(slice_energy_quadrature(u, t) - ref) / ref)
    ok = det_err <= 1e-12 and None not in singular.values() and weighted_fail == 0 and parseval_err <= 1e-8
    report(
        6,
        "beam two-slice theory",
        ok,
        f"det err {det_err:.1e}; singular k {singular}; weighted failures {weighted_fail}/100; Parseval rel err {parseval_err:.1e}",
    )
    assert ok


def test_criterion_7a_plate_lattice_gap():
    pts = sorted({(m, m * m + n * n) for m in range(-30, 31) for n in range(-30, 31)})
    xs = np.array([p[0] for p in pts], float)
    ys = np.array([p[1] for p in pts], float)
    g = _core.min_distance_2d(xs, ys)
    arr = np.array(pts, float)
    brute = min(
        float(np.min(np.hypot(*(arr[i + 1 :] - arr[i]).T))) for i in range(len(arr) - 1)
    )
    ok = g == 1.0 and brute == 1.0
    report("7a", "plate 2-D gap", ok, f"kernel gap {g}, brute-force gap {brute}")
    assert ok


def test_criterion_7b_plate_gram():
    t0 = time.perf_counter()
    from oblique.segments import PlateSegmentSpec

    rows, bad = [], []
    for a, b in [(1, 1), (2, 1), (1, 0)]:
        seg = PlateSegmentSpec(0.0, 0.0, 0.0, a, b, 2 * math.pi, 1.0)
        sweep = observability_sweep("plate", seg, range(2, 7))
        lo = min(e.c_minus for e in sweep)
        inter = sweep_is_interlaced(sweep)
        rows.append(f"({a},{b}) min mu_min={lo:.1e} interlaced={inter}")
        if not (lo > 0 and inter):
            bad.append((a, b))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 180
    report("7b", "plate Gram positivity and interlacing", ok, f"{'; '.join(rows)}; {dt:.1f}s")
    assert ok


def test_criterion_8_search_consistency():
    t0 = time.perf_counter()
    rep = search_cycles(40, 6)
    dt = time.perf_counter() - t0
    ok = rep["cycles_found"] == 0 and rep["kernels_found"] == 0 and not rep["guaranteed_violations"] and dt < 600
    report(
        8,
        "search consistency",
        ok,
        f"{rep['pairs_total']} pairs ({rep['pairs_guaranteed']} guaranteed, {rep['pairs_searched']} searched), "
        f"cycles={rep['cycles_found']}, kernels={rep['kernels_found']}, "
        f"guaranteed violations={len(rep['guaranteed_violations'])}, {dt:.1f}s",
    )
    assert ok


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
