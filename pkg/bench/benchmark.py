#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same workloads through both backends and prints a speedup table.
The sweep workloads are the inner loops of `phiord verify`, so the table is
a direct measure of what the extension buys during verification.

Usage: python3 bench/benchmark.py [--quick]
"""

import argparse
import sys
import time

from phiord import _kernels_py as pure

try:
    from phiord import _kernels as compiled
except ImportError:
    compiled = None


def workloads(quick):
    s = 1 if not quick else 4  # shrink factor for --quick
    return [
        ("factorize n <= 50000",
         lambda k: [k.factor_pairs(n) for n in range(2, 50001 // s)]),
        ("totient n <= 50000",
         lambda k: [k.totient(n) for n in range(1, 50001 // s)]),
        ("totient gcd-scan n near 10^6",
         lambda k: [k.totient_scan(n) for n in range(10**6 // s - 4,
                                                     10**6 // s + 1)]),
        ("mod_pow, 50000 64-bit triples",
         lambda k: [k.mod_pow(x, 2**63 + 4141, 2**64 - 59)
                    for x in range(2, 50002 // s)]),
        ("progression sweep n <= 150",
         lambda k: [k.progression_sweep(n) for n in range(2, 151 // s)]),
        ("power-trace sweep n <= 400",
         lambda k: [k.trace_sweep(n) for n in range(2, 401 // s)]),
        ("order sweep n <= 400 (with scan oracle)",
         lambda k: [k.order_sweep(n, 400) for n in range(2, 401 // s)]),
        ("coset sweep n <= 400",
         lambda k: [k.coset_sweep(n) for n in range(2, 401 // s)]),
        ("class-product sweep n <= 150",
         lambda k: [k.class_product_sweep(n) for n in range(2, 151 // s)]),
    ]


def best_of(fn, kernel, repeats=2):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(kernel)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller workloads (rough numbers, fast run)")
    args = parser.parse_args(argv)

    if compiled is None:
        print("compiled kernels not built; showing pure-Python times only",
              file=sys.stderr)

    name_w = 42
    print(f"{'workload':<{name_w}} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, fn in workloads(args.quick):
        t_pure = best_of(fn, pure)
        if compiled is not None:
            t_comp = best_of(fn, compiled)
            print(f"{name:<{name_w}} {t_pure:>9.3f}s {t_comp:>9.3f}s "
                  f"{t_pure / t_comp:>8.1f}x")
        else:
            print(f"{name:<{name_w}} {t_pure:>9.3f}s {'-':>10} {'-':>9}")


if __name__ == "__main__":
    main()
