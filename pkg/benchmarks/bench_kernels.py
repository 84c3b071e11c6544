"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --repeat 5
"""

import argparse
import timeit

import numpy as np

from oblique import _core
from oblique.exact import rat_parse, scan_box


def cases(size):
    rng = np.random.default_rng(0)
    a = rat_parse(f"-{size * 13}/5")
    box = scan_box(a)
    freqs = np.sort(rng.uniform(-size * 50, size * 50, size * 8))
    xs = rng.uniform(-100, 100, size * 20)
    ys = rng.uniform(-100, 100, size * 20)
    return {
        "circle_scan": lambda b: _core.circle_scan(a.numerator, a.denominator, *box, backend=b),
        "exp_gram": lambda b: _core.exp_gram(freqs, 1.0, backend=b),
        "min_distance_2d": lambda b: _core.min_distance_2d(xs, ys, backend=b),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--size", type=int, default=20, help="problem scale")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"compiled backend available: {_core.BACKEND == 'compiled'}")
    print(f"{'kernel':<18}{'python [s]':>12}{'compiled [s]':>14}{'speedup':>10}")
    for name, fn in cases(args.size).items():
        t_py = min(timeit.repeat(lambda: fn("python"), number=1, repeat=args.repeat))
        if _core.BACKEND == "compiled":
            t_c = min(timeit.repeat(lambda: fn(None), number=1, repeat=args.repeat))
            print(f"{name:<18}{t_py:>12.4f}{t_c:>14.4f}{t_py / t_c:>10.1f}")
        else:
            print(f"{name:<18}{t_py:>12.4f}{'n/a':>14}{'':>10}")


if __name__ == "__main__":
    main()
