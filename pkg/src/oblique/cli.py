"""Command-line front end: ``oblique <subcommand> [options]``.

Exit codes: 0 success, 2 invalid input, 3 anomaly (cycle test and kernel
disagree, or a selftest check failed), 4 search discovery.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import re
import sys
import time
from fractions import Fraction

import numpy as np

from . import _core
from .exact import enumerate_aset, projections, rat_parse, rat_str
from .gram import observability_sweep, sweep_is_interlaced
from .obstruction import (
    SCHEMA,
    build_graph,
    find_cycles,
    kernel_oracle,
    lemma47_check,
    maximal_paths,
    pair_report,
    search_cycles,
    synthetic_instance,
    theorem48_verdict,
    verdict_from_asets,
)
from .segments import PlateSegmentSpec, SegmentSpec
from .solutions import (
    PiMultiple,
    energy_paths,
    energy_ratio,
    null_beam_oblique,
    null_beam_vertical,
    null_plate_perpendicular,
    null_schrodinger,
    null_schrodinger_dirichlet,
    parse_time,
    slice_energy,
    slice_energy_quadrature,
    spec_to_dict,
    two_segment_defect,
    vanishing_ratio_chain,
    vanishing_ratio_sgn,
)
from .spectra import (
    beam_exponents,
    gap,
    integer_exponents,
    plate_exponents,
    schrodinger_exponents,
    separation_certificate,
    square_exponents,
    tail_gap,
)

EXIT_OK, EXIT_INVALID, EXIT_ANOMALY, EXIT_DISCOVERY = 0, 2, 3, 4


# -- output --------------------------------------------------------------------------


def jsonable(obj):
    """Recursively convert to plain JSON types (Fractions and non-finite floats to text)."""
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, str) else k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj, key=repr) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in seq]
    if isinstance(obj, Fraction):
        return rat_str(obj)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else ("inf" if x > 0 else "-inf" if x < 0 else "nan")
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=True)


def rows_to_csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        cells = {k: jsonable(r.get(k)) for k in columns}
        w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in cells.items()})
    return buf.getvalue()


def emit(args, report: dict, rows=None, columns=None):
    report = {"schema": SCHEMA, **report}
    if args.format == "csv" and rows is not None:
        text = rows_to_csv(rows, columns)
    else:
        text = dumps(report) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report


# -- subcommands ---------------------------------------------------------------------


def _exponent_set(args, N):
    if args.custom:
        return {"squares": square_exponents, "integers": integer_exponents}[args.custom](N)
    a = rat_parse(args.a)
    if args.family == "schrodinger":
        return schrodinger_exponents(a, N)
    if args.family == "beam":
        return beam_exponents(a, N)
    return plate_exponents(_int(args.a, "--a"), _int(args.b, "--b"), N)


def _int(text, name) -> int:
    v = rat_parse(text)
    if v.denominator != 1:
        raise ValueError(f"{name} must be an integer")
    return int(v)


def _label_radius(E, label) -> int:
    if not isinstance(label, tuple):
        return abs(label)
    if E.family == "plate":
        return max(abs(label[0]), abs(label[1]))
    return abs(label[0])


def cmd_gap(args):
    E = _exponent_set(args, args.N)
    g = gap(E, exact=not E.is_planar)
    table = []
    for j in range(args.drop + 1):
        F = [lab for lab in E.labels if _label_radius(E, lab) < j]
        table.append({"drop": j, "removed": len(F), "gap": tail_gap(E, F, exact=not E.is_planar)})
    report = {
        "command": "gap",
        "family": args.custom or args.family,
        "N": args.N,
        "gap": g,
        "collisions": [list(c) for c in E.collisions],
        "tail_gaps": table,
    }
    if args.drop:
        report["tail_gap"] = table[-1]["gap"]
    if not args.custom and args.family == "schrodinger":
        cert = separation_certificate(args.a, args.N)
        report["certificate"] = {k: v for k, v in cert.items() if k != "collisions"}
    if args.family == "beam" and not args.custom:
        from .spectra import beam_cross_collisions

        report["cross_collisions"] = sorted(beam_cross_collisions(E))
    emit(args, report, table, ["drop", "removed", "gap"])
    return EXIT_OK


def cmd_aset(args):
    a = rat_parse(args.a)
    A = enumerate_aset(a)
    P, M = projections(A)
    rows = [{"x": p.x, "y": p.y} for p in A]
    report = {
        "command": "aset",
        "a": a,
        "size": len(A),
        "points": [list(p) for p in A],
        "x_projection": sorted(P),
        "y_projection": sorted(M),
        "bound": math.sqrt(2) * math.pi * abs(float(a)),
    }
    emit(args, report, rows, ["x", "y"])
    return EXIT_OK


def _segment(args):
    t1, x1, T = float(args.t1), float(args.x1), float(args.T)
    if args.family == "plate":
        return PlateSegmentSpec(t1, x1, float(args.y1), _int(args.a, "--a"), _int(args.b, "--b"), T, float(args.S))
    return SegmentSpec(t1, x1, args.a, T)


def cmd_observe(args):
    seg = _segment(args)
    lo = args.Nmin if args.Nmin is not None else args.N
    hi = args.Nmax if args.Nmax is not None else args.N
    if lo is None or hi is None or lo < 1 or hi < lo:
        raise ValueError("give --N or a range --Nmin <= --Nmax (both >= 1)")
    sweep = observability_sweep(args.family, seg, range(lo, hi + 1), workers=args.workers)
    rows = [e.as_row() for e in sweep]
    report = {
        "command": "observe",
        "family": args.family,
        "a": rat_parse(args.a),
        "b": args.b,
        "T": float(args.T),
        "rows": rows,
        "interlaced": sweep_is_interlaced(sweep),
    }
    emit(args, report, rows, ["N", "c_minus", "c_plus", "gap", "size"])
    return EXIT_OK


def _time_value(x):
    return float(x.r) * math.pi if isinstance(x, PiMultiple) else float(x)


def cmd_counterexample(args):
    kind = args.kind
    t1, x1 = _time_value(parse_time(args.t1)), float(args.x1)
    T = float(args.T)
    checks = []
    if kind in ("schrodinger", "dirichlet"):
        build = null_schrodinger if kind == "schrodinger" else null_schrodinger_dirichlet
        u = build(args.a, t1, x1, args.k)
        seg = SegmentSpec(t1, x1, args.a, T)
        g, q = energy_paths(u, seg)
        checks.append({"segment": [t1, x1, rat_parse(args.a), T], "gram_energy": g, "quadrature_energy": q})
        extra = {}
    elif kind == "beam-oblique":
        u = null_beam_oblique(args.a, t1, x1, tuple(_int(v, "--point") for v in args.point.split(",")))
        seg = SegmentSpec(t1, x1, args.a, T)
        g, q = energy_paths(u, seg)
        checks.append({"segment": [t1, x1, rat_parse(args.a), T], "gram_energy": g, "quadrature_energy": q})
        extra = {}
    elif kind == "beam-vertical":
        ta, tb = parse_time(args.t1), parse_time(args.t2)
        u = null_beam_vertical(ta, tb, args.k)
        for t in (_time_value(ta), _time_value(tb)):
            checks.append({"slice_t": t, "gram_energy": slice_energy(u, t), "quadrature_energy": slice_energy_quadrature(u, t)})
        extra = {}
    elif kind == "plate":
        a, b = _int(args.a, "--a"), _int(args.b, "--b")
        u = null_plate_perpendicular(a, b, t1, x1, float(args.y1))
        seg = PlateSegmentSpec(t1, x1, float(args.y1), a, b, T, float(args.S))
        g, q = energy_paths(u, seg)
        checks.append({"segment": [t1, x1, float(args.y1), a, b, T, float(args.S)], "gram_energy": g, "quadrature_energy": q})
        extra = {}
    elif kind == "chain":
        a1, a2 = args.a, args.a2
        first, second = (t1, x1), (float(args.t2), float(args.x2))
        ch = vanishing_ratio_chain(a1, a2, first, second, args.n, T)
        u = ch.spec
        for s in ch.segments:
            g, q = energy_paths(u, s)
            checks.append({"segment": [s.t1, s.x1, s.a, s.T], "gram_energy": g, "quadrature_energy": q})
        extra = {"defect": two_segment_defect(u, ch.segments), "ratio": energy_ratio(u, ch.segments)}
    elif kind == "sgn":
        slopes = [rat_parse(v) for v in args.slopes.split(",")]
        u = vanishing_ratio_sgn(slopes, (t1, x1), args.n)
        segs = [SegmentSpec(t1, x1, a, T) for a in slopes]
        for s in segs:
            g, q = energy_paths(u, s)
            checks.append({"segment": [s.t1, s.x1, s.a, s.T], "gram_energy": g, "quadrature_energy": q})
        extra = {"ratio": energy_ratio(u, segs)}
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(kind)
    report = {
        "command": "counterexample",
        "kind": kind,
        "spec": spec_to_dict(u),
        "coefficient_norm_sq": u.coefficient_norm_sq(),
        "l2_norm_sq": u.l2_norm_sq(),
        "checks": checks,
        "max_energy": max(max(c["gram_energy"], c["quadrature_energy"]) for c in checks),
        **extra,
    }
    emit(args, report, checks, list(checks[0].keys()))
    return EXIT_OK


def cmd_graph(args):
    slopes = [args.a1, args.a2] + [getattr(args, f"a{j}") for j in range(3, args.m + 1)]
    if any(s is None for s in slopes):
        raise ValueError(f"--m {args.m} needs --a1 ... --a{args.m}")
    if args.m == 2:
        rep = theorem48_verdict(slopes[0], slopes[1], relaxed=True)
        rep["lemma47"] = lemma47_check(slopes[0], slopes[1])
        rep["relaxed"] = any(rat_parse(s).denominator != 1 for s in slopes)
    else:
        G = build_graph(slopes)
        K = kernel_oracle(slopes)
        rep = pair_report(G, K)
        rep["verdict"] = "fails" if K.dimension > 0 else "holds"
        rep["anomaly"] = bool(rep["cycles"]) != (K.dimension > 0)
        rep["kernel_basis"] = list(K.basis)
        rep["variables"] = list(K.variables)
    rep.pop("schema", None)
    rep["command"] = "graph"
    rep["maximal_path_count"] = len(rep["maximal_paths"])
    rep["cycle_count"] = len(rep["cycles"])
    row = {k: rep[k] for k in ("pair", "vertex_count", "edge_count", "maximal_path_count", "cycle_count", "kernel_dimension", "verdict", "anomaly")}
    emit(args, rep, [row], list(row.keys()))
    return EXIT_ANOMALY if rep["anomaly"] else EXIT_OK


SEARCH_COLUMNS = ["pair", "aset_sizes", "vertex_count", "edge_count", "paths", "cycles", "kernel_dimension", "classifier"]


def cmd_search(args):
    t0 = time.perf_counter()
    rep = search_cycles(args.P, args.Q, workers=args.workers, only_guaranteed=args.only_guaranteed)
    rows = [
        {**r, "paths": len(r["maximal_paths"]), "cycles": len(r["cycles"]), "pair": " ".join(r["pair"]), "aset_sizes": " ".join(map(str, r["aset_sizes"]))}
        for r in rep.pop("rows")
    ]
    rep["command"] = "search"
    rep["runtime_s"] = round(time.perf_counter() - t0, 3)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(rows_to_csv(rows, SEARCH_COLUMNS))
    emit(args, rep, rows, SEARCH_COLUMNS)
    if rep["hits"] or rep["guaranteed_violations"]:
        return EXIT_DISCOVERY
    return EXIT_OK


def cmd_plate_check(args):
    M = args.M
    freqs = {(m, m * m + n * n) for m in range(-M, M + 1) for n in range(-M, M + 1)}
    xs, ys = zip(*sorted(freqs))
    g2 = _core.min_distance_2d(np.array(xs, float), np.array(ys, float))
    a, b = _int(args.a, "--a"), _int(args.b, "--b")
    seg = PlateSegmentSpec(float(args.t1), float(args.x1), float(args.y1), a, b, float(args.T), float(args.S))
    sweep = observability_sweep("plate", seg, range(args.Nmin, args.Nmax + 1), workers=args.workers)
    u = null_plate_perpendicular(a, b, seg.t1, seg.x1, seg.y1)
    ge, qe = energy_paths(u, seg)
    rows = [e.as_row() for e in sweep]
    report = {
        "command": "plate-check",
        "lattice_gap": g2,
        "lattice_radius": M,
        "direction": [a, b],
        "rows": rows,
        "interlaced": sweep_is_interlaced(sweep),
        "min_c_minus": min(r["c_minus"] for r in rows),
        "perpendicular_null": {"gram_energy": ge, "quadrature_energy": qe, "coefficient_norm_sq": u.coefficient_norm_sq()},
    }
    emit(args, report, rows, ["N", "c_minus", "c_plus", "gap", "size"])
    return EXIT_OK


def _selftest_checks(seed: int, instances: int):
    rng = random.Random(seed)
    out = []

    def check(name, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # report, do not abort the suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append({"check": name, "passed": bool(ok), "detail": detail})

    def a5():
        A = enumerate_aset(5)
        return len(A) == 11, len(A)

    def example_pair():
        G = build_graph(["-13/5", "-10/3"])
        paths = [p for p in maximal_paths(G) if len(p) > 1]
        K = kernel_oracle(["-13/5", "-10/3"])
        return (len(paths), len(find_cycles(G)), K.dimension) == (2, 0, 0), [len(paths), len(find_cycles(G)), K.dimension]

    def synthetic():
        bad = 0
        for _ in range(instances):
            sets = synthetic_instance(rng)
            r = verdict_from_asets(sets)
            bad += r["anomaly"]
        return bad == 0, f"{bad} mismatches over {instances}"

    def backends():
        fr = np.array(sorted(rng.sample(range(-50, 50), 12)), float)
        g1 = _core.exp_gram(fr, 1.3)
        g2 = _core.exp_gram(fr, 1.3, backend="python")
        return np.allclose(g1, g2, atol=1e-12), _core.BACKEND

    def null_on_segment():
        t1, x1 = rng.uniform(-1, 1), rng.uniform(-1, 1)
        u = null_schrodinger(3, t1, x1, 1)
        g, q = energy_paths(u, SegmentSpec(t1, x1, 3, 1.0))
        return max(g, q) <= 1e-10, max(g, q)

    check("aset_A5_size", a5)
    check("graph_example_pair", example_pair)
    check("synthetic_cycle_kernel_equivalence", synthetic)
    check("backend_parity", backends)
    check("null_schrodinger_energy", null_on_segment)
    return out


def cmd_selftest(args):
    checks = _selftest_checks(args.seed, args.instances)
    ok = all(c["passed"] for c in checks)
    emit(args, {"command": "selftest", "seed": args.seed, "backend": _core.BACKEND, "checks": checks, "passed": ok}, checks, ["check", "passed", "detail"])
    return EXIT_OK if ok else EXIT_ANOMALY


# -- parser --------------------------------------------------------------------------


def _common(p):
    p.add_argument("--format", choices=["json", "csv"], default="json", help="output format (default json)")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized parts")


def _segment_args(p, T="1.0"):
    p.add_argument("--t1", default="0.0", help="segment start time (decimal)")
    p.add_argument("--x1", default="0.0", help="segment start position (decimal)")
    p.add_argument("--y1", default="0.0", help="plate: second coordinate of the start point")
    p.add_argument("--T", default=T, help="segment duration (decimal)")
    p.add_argument("--S", default="1.0", help="plate: transverse width of the strip")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oblique", description="Observability certificates and counterexamples along oblique segments.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gap", help="uniform gap, tail gaps and separation certificate",
                       description="CSV columns: drop, removed, gap (gap after removing labels of radius < drop).")
    p.add_argument("--family", choices=["schrodinger", "beam", "plate"], default="schrodinger")
    p.add_argument("--custom", choices=["squares", "integers"], help="use a fixed frequency set instead of a family")
    p.add_argument("--a", default="1/2", help="slope (exact rational text)")
    p.add_argument("--b", default="0", help="plate: second direction component")
    p.add_argument("--N", type=int, default=20)
    p.add_argument("--drop", type=int, default=0, help="tail-gap table up to this many removed shells")
    _common(p)
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("aset", help="integer lattice points of the slope circle", description="CSV columns: x, y.")
    p.add_argument("--a", required=True, help="slope (exact rational text)")
    _common(p)
    p.set_defaults(func=cmd_aset)

    p = sub.add_parser("observe", help="truncated Gram observability constants over an N sweep",
                       description="CSV columns: N, c_minus, c_plus, gap, size.")
    p.add_argument("--family", choices=["schrodinger", "beam", "plate"], default="schrodinger")
    p.add_argument("--a", default="1/2")
    p.add_argument("--b", default="0")
    p.add_argument("--N", type=int)
    p.add_argument("--Nmin", type=int)
    p.add_argument("--Nmax", type=int)
    p.add_argument("--workers", type=int, default=1)
    _segment_args(p)
    _common(p)
    p.set_defaults(func=cmd_observe)

    p = sub.add_parser("counterexample", help="construct and verify null / vanishing-ratio solutions",
                       description="CSV columns: one row per observed segment or slice with both energy paths.")
    p.add_argument("--kind", required=True, choices=["schrodinger", "dirichlet", "chain", "sgn", "beam-vertical", "beam-oblique", "plate"])
    p.add_argument("--a", default="3", help="slope (first slope for chain)")
    p.add_argument("--a2", default="4", help="chain: second slope")
    p.add_argument("--b", default="1", help="plate: second direction component")
    p.add_argument("--k", type=int, default=1, help="mode index")
    p.add_argument("--n", type=int, default=10, help="chain/sgn size parameter")
    p.add_argument("--t2", default="1.0", help="second time (beam-vertical accepts '<rational>pi')")
    p.add_argument("--x2", default="0.5")
    p.add_argument("--slopes", default="1,2", help="sgn: comma-separated integer slopes")
    p.add_argument("--point", default="2,1", help="beam-oblique: lattice point k,m on the slope circle")
    _segment_args(p)
    _common(p)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("graph", help="obstruction graph, cycles and kernel verdict for slopes",
                       description="CSV columns: pair, vertex_count, edge_count, maximal_path_count, cycle_count, kernel_dimension, verdict, anomaly.")
    p.add_argument("--a1", required=True)
    p.add_argument("--a2", required=True)
    p.add_argument("--m", type=int, default=2, help="number of slopes (>= 2)")
    for j in range(3, 10):
        p.add_argument(f"--a{j}")
    _common(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("search", help="scan rational slope pairs for cycles and nontrivial kernels",
                       description="CSV columns: " + ", ".join(SEARCH_COLUMNS) + " (one row per pair with nonempty sets).")
    p.add_argument("--P", type=int, required=True, help="numerator bound")
    p.add_argument("--Q", type=int, required=True, help="denominator bound")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--only-guaranteed", action="store_true", help="restrict to pairs classified no_cycle_guaranteed")
    p.add_argument("--csv", help="also write the per-pair CSV summary here")
    _common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("plate-check", help="plate lattice gap, Gram sweep and perpendicular null solution",
                       description="CSV columns: N, c_minus, c_plus, gap, size.")
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="1")
    p.add_argument("--M", type=int, default=30, help="lattice radius for the gap scan")
    p.add_argument("--Nmin", type=int, default=2)
    p.add_argument("--Nmax", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    _segment_args(p, T=repr(2 * math.pi))
    _common(p)
    p.set_defaults(func=cmd_plate_check)

    p = sub.add_parser("selftest", help="fast internal consistency checks", description="CSV columns: check, passed, detail.")
    p.add_argument("--instances", type=int, default=200, help="synthetic graph instances")
    _common(p)
    p.set_defaults(func=cmd_selftest)
    return ap


_NEG_VALUE = re.compile(r"^[-−]\d[\w/.,+−-]*$")


def _glue_negative_values(argv):
    """Attach values such as ``-13/5`` to the preceding option (``--a1=-13/5``)."""
    out = []
    for tok in argv:
        if out and _NEG_VALUE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
