#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the smallest-prime-factor sieve and the f/sigma range scan on the
same inputs and reports the speedup. The pure kernel is exercised on a
fraction of the range (it is the slow path by design); its timing is
scaled up for the comparison line.

Usage:
    python benchmarks/bench_kernels.py [--limit 2000000] [--repeat 3]
"""

import argparse
import time

import numpy as np

from pracnum import _core_py

try:
    from pracnum import _core
except ImportError:
    _core = None


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--pure-fraction", type=float, default=0.1,
                        help="fraction of the range scanned with the pure kernel")
    args = parser.parse_args()

    limit = args.limit
    pure_hi = max(2, int(limit * args.pure_fraction))
    print(f"range 1..{limit}, pure kernel measured on 1..{pure_hi}")
    print(f"{'step':<24}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")

    t_pure_spf, spf_pure = best_of(args.repeat, _core_py.build_spf, limit)
    if _core is not None:
        t_comp_spf, spf_comp = best_of(args.repeat, _core.build_spf, limit)
        assert np.array_equal(spf_pure, spf_comp), "kernel mismatch in build_spf"
        print(f"{'build_spf':<24}{t_pure_spf:>12.4f}{t_comp_spf:>14.4f}"
              f"{t_pure_spf / t_comp_spf:>9.1f}x")
    else:
        print(f"{'build_spf':<24}{t_pure_spf:>12.4f}{'n/a':>14}{'':>10}")

    t_pure, (f_pure, s_pure) = best_of(
        args.repeat, _core_py.scan_f_sigma, 1, pure_hi + 1, spf_pure)
    scale = limit / pure_hi
    if _core is not None:
        t_comp, (f_comp, s_comp) = best_of(
            args.repeat, _core.scan_f_sigma, 1, limit + 1, spf_pure)
        assert np.array_equal(f_pure, f_comp[:pure_hi]), "kernel mismatch in scan"
        assert np.array_equal(s_pure, s_comp[:pure_hi]), "kernel mismatch in scan"
        print(f"{'scan_f_sigma (scaled)':<24}{t_pure * scale:>12.4f}{t_comp:>14.4f}"
              f"{t_pure * scale / t_comp:>9.1f}x")
    else:
        print(f"{'scan_f_sigma (scaled)':<24}{t_pure * scale:>12.4f}{'n/a':>14}{'':>10}")

    if _core is None:
        print("compiled kernel not available; install with a C compiler to compare")


if __name__ == "__main__":
    main()
