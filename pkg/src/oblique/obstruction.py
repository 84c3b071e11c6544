"""Shared-coordinate obstruction graphs of lattice-circle sets, their cycles, and
the finite linear system whose kernel decides two-segment beam observability."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .exact import LatticePoint, enumerate_aset, projections, rat_parse, rat_str

SCHEMA = 1


@dataclass(frozen=True)
class ObservationGraph:
    """Vertices ``(owner, point)`` from several lattice sets; edges join vertices of
    different owners that share their first (``"x"``) or second (``"y"``) coordinate."""

    slopes: tuple
    vertices: tuple  # (owner index, LatticePoint)
    edges: tuple  # (i, j, axis) with i < j
    asets: tuple = field(repr=False, default=())

    @property
    def adjacency(self):
        adj = defaultdict(list)
        for i, j, ax in self.edges:
            adj[i].append((j, ax))
            adj[j].append((i, ax))
        return adj

    def degree(self, i: int) -> int:
        return len(self.adjacency.get(i, ()))

    def degrees(self):
        adj = self.adjacency
        return [len(adj.get(i, ())) for i in range(len(self.vertices))]


def _check_slopes(slopes):
    slopes = tuple(rat_parse(a) for a in slopes)
    if any(a == 0 for a in slopes):
        raise ValueError("slopes must be nonzero")
    if len(set(slopes)) != len(slopes):
        raise ValueError("slopes must be distinct")
    return slopes


def graph_from_asets(point_sets, slopes=None) -> ObservationGraph:
    """Graph on explicitly given point sets (one per owner)."""
    sets = [tuple(LatticePoint(*p) for p in ps) for ps in point_sets]
    vertices = []
    seen = {}
    for owner, ps in enumerate(sets):
        if len(set(ps)) != len(ps):
            raise ValueError(f"owner {owner} lists a point twice")
        for p in ps:
            if p in seen:
                raise ValueError(f"point {tuple(p)} belongs to owners {seen[p]} and {owner}")
            seen[p] = owner
            vertices.append((owner, p))
    by_x, by_y = defaultdict(list), defaultdict(list)
    for i, (_, p) in enumerate(vertices):
        by_x[p.x].append(i)
        by_y[p.y].append(i)
    edges = []
    for axis, groups in (("x", by_x), ("y", by_y)):
        for members in groups.values():
            for i, j in combinations(members, 2):
                if vertices[i][0] != vertices[j][0]:
                    edges.append((min(i, j), max(i, j), axis))
    edges.sort()
    return ObservationGraph(tuple(slopes or ()), tuple(vertices), tuple(edges), tuple(sets))


def build_graph(slopes) -> ObservationGraph:
    """Graph ``G(a_1, ..., a_m)`` over the lattice sets ``A_{a_j}``."""
    slopes = _check_slopes(slopes)
    if len(slopes) < 2:
        raise ValueError("at least two slopes required")
    return graph_from_asets([enumerate_aset(a).points for a in slopes], slopes)


def lemma47_check(a1, a2) -> dict:
    """Disjointness of the two sets and coordinate-distinctness inside each set."""
    a1, a2 = _check_slopes((a1, a2))
    A1, A2 = enumerate_aset(a1), enumerate_aset(a2)
    common = sorted(set(A1.points) & set(A2.points))
    violations = []
    for j, A in ((0, A1), (1, A2)):
        for p, q in combinations(A.points, 2):
            if p.x == q.x or p.y == q.y:
                violations.append({"owner": j, "points": [list(p), list(q)], "axis": "x" if p.x == q.x else "y"})
    return {
        "pair": [rat_str(a1), rat_str(a2)],
        "disjoint": not common,
        "common_points": [list(p) for p in common],
        "coordinate_distinct": not violations,
        "violations": violations,
    }


# -- components, paths, cycles -------------------------------------------------------


def components(G: ObservationGraph):
    adj = G.adjacency
    seen = set()
    comps = []
    for s in range(len(G.vertices)):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w, _ in adj.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def maximal_paths(G: ObservationGraph):
    """Connected components that are simple paths, each listed from one endpoint."""
    adj = G.adjacency
    out = []
    for comp in components(G):
        n_edges = sum(len(adj.get(v, ())) for v in comp) // 2
        if n_edges != len(comp) - 1 or any(len(adj.get(v, ())) > 2 for v in comp):
            continue
        start = next((v for v in comp if len(adj.get(v, ())) <= 1), comp[0])
        path, prev = [start], None
        while True:
            nxt = [w for w, _ in adj.get(path[-1], ()) if w != prev]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])
        out.append(path)
    return out


def find_cycles(G: ObservationGraph, max_length: int | None = None):
    """All simple alternating cycles, each once up to rotation and reflection.

    A cycle walks shared-x and shared-y edges in strict alternation, so it has
    even length >= 4. Runs of one axis (several points on a common line, which
    integer slopes produce) are not cycles. Depth-first search from every
    vertex ``s`` through vertices ``> s``; a cycle is kept in the orientation
    whose second vertex is smaller than its last.
    """
    axis = {}
    for i, j, ax in G.edges:
        axis[(i, j)] = axis[(j, i)] = ax
    adj = {v: sorted(w for w, _ in nb) for v, nb in G.adjacency.items()}
    n = len(G.vertices)
    cap = n if max_length is None else min(n, max_length)
    cycles = []
    for s in range(n):
        if s not in adj:
            continue
        path = [s]
        on_path = {s}

        def step(v, last):
            return iter([w for w in adj[v] if w > s and axis[(v, w)] != last])

        iters = [step(s, None)]
        while iters:
            w = next(iters[-1], None)
            if w is None:
                iters.pop()
                on_path.discard(path.pop())
                continue
            if w in on_path:
                continue
            last = axis[(path[-1], w)]
            path.append(w)
            on_path.add(w)
            if (
                len(path) >= 4
                and len(path) % 2 == 0
                and (w, s) in axis
                and axis[(w, s)] != last
                and axis[(w, s)] != axis[(s, path[1])]
                and path[1] < path[-1]
            ):
                cycles.append(list(path))
            if len(path) < cap:
                iters.append(step(w, last))
            else:
                on_path.discard(path.pop())
    return cycles


def cycle_alternates(G: ObservationGraph, cycle) -> bool:
    """True when consecutive edges of the cycle alternate shared-x / shared-y."""
    axes = {}
    for i, j, ax in G.edges:
        axes.setdefault((i, j), set()).add(ax)
    seq = []
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        ax = axes[(min(u, v), max(u, v))]
        if len(ax) != 1:
            return False
        seq.append(next(iter(ax)))
    return all(a != b for a, b in zip(seq, seq[1:] + seq[:1]))


# -- kernel oracle -------------------------------------------------------------------


@dataclass(frozen=True)
class KernelReport:
    dimension: int
    basis: tuple  # dicts "+k"/"-m" -> value
    residual: float
    variables: tuple
    n_constraints: int


def nullspace(M, tol: float = 1e-10):
    """Basis of ``{v : M v = 0}`` by Gauss-Jordan elimination with partial pivoting.

    Each basis vector sets one free variable to 1 and the other free ones to 0.
    """
    A = np.array(M, dtype=float)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = r + int(np.argmax(np.abs(A[r:, c])))
        if abs(A[p, c]) <= tol:
            continue
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] /= A[r, c]
        for i in range(rows):
            if i != r and A[i, c] != 0:
                A[i] -= A[i, c] * A[r]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(cols)
        v[f] = 1.0
        for i, pc in enumerate(pivots):
            v[pc] = -A[i, f]
        basis.append(v)
    return basis


def constraint_system(point_sets):
    """Variables and constraint matrix of the finite quadratic form.

    ``d+_k = 0`` unless ``k`` lies in every first projection, ``d-_m = 0``
    unless ``m`` lies in every second projection, and ``d+_k + d-_m = 0`` for
    every point ``(k, m)`` of any set.
    """
    projs = [projections(ps) for ps in point_sets]
    plus_all = sorted(set().union(*[p for p, _ in projs])) if projs else []
    minus_all = sorted(set().union(*[m for _, m in projs])) if projs else []
    plus_common = set.intersection(*[set(p) for p, _ in projs]) if projs else set()
    minus_common = set.intersection(*[set(m) for _, m in projs]) if projs else set()
    variables = [f"+{k}" for k in plus_all] + [f"-{m}" for m in minus_all]
    col = {v: i for i, v in enumerate(variables)}
    rows = []
    for k in plus_all:
        if k not in plus_common:
            r = np.zeros(len(variables))
            r[col[f"+{k}"]] = 1
            rows.append(r)
    for m in minus_all:
        if m not in minus_common:
            r = np.zeros(len(variables))
            r[col[f"-{m}"]] = 1
            rows.append(r)
    for ps in point_sets:
        for k, m in ps:
            r = np.zeros(len(variables))
            r[col[f"+{k}"]] += 1
            r[col[f"-{m}"]] += 1
            rows.append(r)
    M = np.array(rows).reshape(len(rows), len(variables))
    return variables, M


def kernel_from_asets(point_sets) -> KernelReport:
    variables, M = constraint_system([tuple(tuple(p) for p in ps) for ps in point_sets])
    if not variables:
        return KernelReport(0, (), 0.0, (), 0)
    basis = nullspace(M)
    residual = max((float(np.max(np.abs(M @ v))) if M.size else 0.0 for v in basis), default=0.0)
    named = tuple({variables[i]: float(x) for i, x in enumerate(v) if x != 0} for v in basis)
    return KernelReport(len(basis), named, residual, tuple(variables), M.shape[0])


def kernel_oracle(slopes) -> KernelReport:
    """Kernel of the observation quadratic form for one or more distinct nonzero slopes."""
    slopes = _check_slopes(slopes)
    return kernel_from_asets([enumerate_aset(a).points for a in slopes])


# -- verdicts ------------------------------------------------------------------------


def prop49_classify(a1, a2) -> str:
    """``"no_cycle_guaranteed"`` for opposite signs or ratio ``>= 3/2``, else ``"unknown"``."""
    a1, a2 = rat_parse(a1), rat_parse(a2)
    if a1 == 0 or a2 == 0:
        raise ValueError("slopes must be nonzero")
    if (a1 > 0) != (a2 > 0):
        return "no_cycle_guaranteed"
    hi, lo = max(abs(a1), abs(a2)), min(abs(a1), abs(a2))
    return "no_cycle_guaranteed" if hi / lo >= Fraction(3, 2) else "unknown"


def pair_report(G: ObservationGraph, K: KernelReport, classifier=None) -> dict:
    cycles = find_cycles(G)
    paths = [p for p in maximal_paths(G) if len(p) > 1]

    def pts(idx):
        return [[G.vertices[i][0], list(G.vertices[i][1])] for i in idx]

    return {
        "pair": [rat_str(a) for a in G.slopes],
        "aset_sizes": [len(s) for s in G.asets],
        "vertex_count": len(G.vertices),
        "edge_count": len(G.edges),
        "maximal_paths": [pts(p) for p in paths],
        "cycles": [pts(c) for c in cycles],
        "kernel_dimension": K.dimension,
        "classifier": classifier,
    }


def verdict_from_asets(point_sets, slopes=None) -> dict:
    G = graph_from_asets(point_sets, slopes)
    K = kernel_from_asets(point_sets)
    rep = pair_report(G, K)
    has_cycle = bool(rep["cycles"])
    rep["verdict"] = "fails" if K.dimension > 0 else "holds"
    rep["anomaly"] = has_cycle != (K.dimension > 0)
    rep["kernel_residual"] = K.residual
    return rep


def theorem48_verdict(a1, a2, relaxed: bool = False) -> dict:
    """Two-segment beam verdict: kernel oracle decides, cycle test is cross-checked.

    Without ``relaxed`` both slopes must be integers. A disagreement between
    cycle presence and kernel nontriviality is flagged as ``anomaly``.
    """
    a1, a2 = _check_slopes((a1, a2))
    if not relaxed and (a1.denominator != 1 or a2.denominator != 1):
        raise ValueError("integer slopes required (use relaxed mode for rationals)")
    sets = [enumerate_aset(a1).points, enumerate_aset(a2).points]
    rep = verdict_from_asets(sets, (a1, a2))
    rep["classifier"] = prop49_classify(a1, a2)
    rep["relaxed"] = relaxed
    rep["schema"] = SCHEMA
    return rep


def synthetic_instance(rng: random.Random, max_points: int = 5, pool: int = 5):
    """Two disjoint point sets, each with pairwise distinct x's and distinct y's.

    Both sets draw coordinates from a shared pool of ``pool`` values, so
    shared coordinates (and hence cycles) are common. Every vertex has at most
    one shared-x and one shared-y neighbour in the other set (degree <= 2).
    """
    values = list(range(-(pool // 2), pool - pool // 2))

    def draw():
        n = rng.randint(min(2, max_points), min(max_points, pool))
        return list(zip(rng.sample(values, n), rng.sample(values, n)))

    while True:
        A1, A2 = draw(), draw()
        if not set(A1) & set(A2):
            return A1, A2


# -- search --------------------------------------------------------------------------


def rationals(P: int, Q: int):
    """Distinct nonzero ``p/q`` with ``|p| <= P``, ``1 <= q <= Q``, sorted."""
    return sorted({Fraction(p, q) for q in range(1, Q + 1) for p in range(-P, P + 1) if p})


_ASET_CACHE: dict = {}


def _aset(a):
    s = _ASET_CACHE.get(a)
    if s is None:
        s = _ASET_CACHE[a] = enumerate_aset(a).points
    return s


def _examine(pair):
    a1, a2 = pair
    cls = prop49_classify(a1, a2)
    sets = [_aset(a1), _aset(a2)]
    if not sets[0] or not sets[1]:
        # an empty set isolates every vertex: no edges, and the forced zeros kill the kernel
        rep = None
        return cls, rep, 0, 0
    G = graph_from_asets(sets, (a1, a2))
    if cls == "no_cycle_guaranteed":
        return cls, None, len(find_cycles(G)), -1
    K = kernel_from_asets(sets)
    rep = pair_report(G, K, cls)
    return cls, rep, len(rep["cycles"]), K.dimension


def search_cycles(P: int, Q: int, workers: int = 1, check_guaranteed: bool = True, only_guaranteed: bool = False) -> dict:
    """Scan all slope pairs in the region for cycles and nontrivial kernels.

    Pairs classified ``no_cycle_guaranteed`` are skipped by the main scan; with
    ``check_guaranteed`` their graphs are still checked for cycles.
    """
    if P < 1 or Q < 1:
        raise ValueError("P and Q must be >= 1")
    vals = rationals(P, Q)
    pairs = list(combinations(vals, 2))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_examine, pairs, chunksize=256))
    else:
        results = [_examine(p) for p in pairs]
    hits, violations, rows = [], [], []
    searched = guaranteed = 0
    for (a1, a2), (cls, rep, ncyc, kdim) in zip(pairs, results):
        if cls == "no_cycle_guaranteed":
            guaranteed += 1
            if ncyc and check_guaranteed:
                violations.append([rat_str(a1), rat_str(a2)])
            if not only_guaranteed:
                continue
        elif only_guaranteed:
            continue
        else:
            searched += 1
        if rep is not None:
            rows.append(rep)
            if ncyc or kdim > 0:
                hits.append(rep)
    return {
        "schema": SCHEMA,
        "P": P,
        "Q": Q,
        "slopes": len(vals),
        "pairs_total": len(pairs),
        "pairs_searched": searched,
        "pairs_guaranteed": guaranteed,
        "nonempty_pairs": len(rows),
        "cycles_found": sum(len(r["cycles"]) for r in hits),
        "kernels_found": sum(1 for r in hits if r["kernel_dimension"] > 0),
        "hits": hits,
        "guaranteed_violations": violations,
        "rows": rows,
    }
