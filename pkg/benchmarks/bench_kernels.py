"""Time the numba kernels against the numpy fallback on the same inputs.

    python benchmarks/bench_kernels.py --n 12 --repeat 5

Numba compile time is paid once in a warm-up call and excluded.
"""
import argparse
import time

import numpy as np

from qsigma._accel import HAS_NUMBA, numba_kernels, numpy_kernels
from qsigma.enumerate import poset_levels
from qsigma.poset import FinitePoset, linear_extension


def _best(fn, repeat):
    fn()  # warm-up / jit
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases(n):
    # widest (2^n upper sets) and tallest (n+1 upper sets, every subset directed)
    A = FinitePoset.antichain(n)
    B = FinitePoset.chain(n)
    return {"antichain": A, "chain": B}


def bench_poset(name, P, repeat):
    up = P.up_array
    order = np.asarray(linear_extension(P)[::-1], dtype=np.int64)
    ups = numpy_kernels.upsets(up, order)
    ds = numpy_kernels.directed_subsets(up, P.n)
    rows = []
    for kname, args in [("upsets", (up, order)),
                        ("directed_subsets", (up, P.n)),
                        ("scott_test", (ups, *ds)),
                        ("saturated_subsets", (ups, P.n, False)),
                        ("transitive_closure", (P.leq,))]:
        t_np = _best(lambda: getattr(numpy_kernels, kname)(*args), repeat)
        t_nb = _best(lambda: getattr(numba_kernels, kname)(*args), repeat) if HAS_NUMBA else float("nan")
        rows.append((name, kname, t_np, t_nb))
    return rows


def bench_scan(n, repeat):
    # end-to-end: k-split flags over Q for every poset of size n
    members = []
    for P in poset_levels(n)[-1]:
        order = np.asarray(linear_extension(P)[::-1], dtype=np.int64)
        members.append(numpy_kernels.upsets(P.up_array, order)[1:])

    def run(k):
        for m in members:
            k.k_split_flags(m)
    return [(f"all n={n} posets", "k_split_flags", _best(lambda: run(numpy_kernels), repeat),
             _best(lambda: run(numba_kernels), repeat) if HAS_NUMBA else float("nan"))]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=12, help="ground set size for single-poset kernels")
    ap.add_argument("--scan-n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    rows = []
    for name, P in cases(args.n).items():
        rows += bench_poset(f"{name}({args.n})", P, args.repeat)
    rows += bench_scan(args.scan_n, args.repeat)
    print(f"{'input':<18}{'kernel':<20}{'numpy ms':>10}{'numba ms':>10}{'speedup':>9}")
    for name, k, a, b in rows:
        print(f"{name:<18}{k:<20}{a * 1e3:>10.3f}{b * 1e3:>10.3f}{a / b:>8.1f}x")


if __name__ == "__main__":
    main()
