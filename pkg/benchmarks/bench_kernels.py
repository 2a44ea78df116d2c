"""Compare the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py --r-max 2000 --repeat 3

Both paths are called directly, so the HERMLAT_NO_NUMBA flag is irrelevant
here.  Each benchmark first checks that the two implementations agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hermlat import _kernels
from hermlat.standard import D, E


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def seisu_jit(r_min: int, r_max: int):
    n = r_max - r_min + 1
    best = np.full(n, -1, dtype=np.int64)
    arg = np.full(n, -1, dtype=np.int64)
    _kernels._seisu_jit(r_min, r_max, best, arg)
    return best, arg


def bench_seisu(r_max: int, repeat: int) -> None:
    a = _kernels._seisu_numpy(3, r_max)
    b = seisu_jit(3, r_max)  # also triggers compilation
    assert np.array_equal(a[0], b[0]), "seisu minima differ"
    t_np = best_of(lambda: _kernels._seisu_numpy(3, r_max), repeat)
    t_nb = best_of(lambda: seisu_jit(3, r_max), repeat)
    print(f"seisu r<= {r_max:5d}   numpy {t_np:8.4f} s   numba {t_nb:8.4f} s   ratio {t_np / t_nb:6.2f}")


def bench_box(name: str, gram, bound: int, repeat: int) -> None:
    g = np.asarray([[int(x) for x in row] for row in gram], dtype=np.int64)
    bounds = np.full(len(g), bound, dtype=np.int64)
    a = _kernels._box_numpy(g, bounds, 2)
    b = _kernels._box_jit(g, bounds, 2)
    assert a == b, f"box counts differ: {a} vs {b}"
    t_np = best_of(lambda: _kernels._box_numpy(g, bounds, 2), repeat)
    t_nb = best_of(lambda: _kernels._box_jit(g, bounds, 2), repeat)
    print(f"box {name:<4} b={bound}  numpy {t_np:8.4f} s   numba {t_nb:8.4f} s   ratio {t_np / t_nb:6.2f}"
          f"   count {a}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r-max", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    bench_seisu(args.r_max, args.repeat)
    bench_box("D4", D(4).gram, 3, args.repeat)
    bench_box("D5", D(5).gram, 2, args.repeat)
    bench_box("E6", E(6).gram, 2, args.repeat)


if __name__ == "__main__":
    main()
