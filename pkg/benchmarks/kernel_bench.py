#!/usr/bin/env python3
"""Compare the compiled and pure-Python arithmetic kernels.

Runs identical workloads through both implementations, checks that the
results agree entry for entry, and prints wall-clock timings.  Workloads
are seeded, so repeated runs measure the same computation.

    python3 benchmarks/kernel_bench.py [--size 40] [--conductor 12] [--repeat 3]
"""

import argparse
import random
import sys
import time

from nicholsforge._kernel import py_impl
from nicholsforge._rat import RAT, R_ZERO
from nicholsforge.scalars import field_context

try:
    from nicholsforge._kernel import cy_impl
except ImportError:
    cy_impl = None


def random_poly(rng, phi):
    return tuple(
        RAT(rng.randrange(-3, 4), rng.randrange(1, 4)) if rng.random() < 0.6 else R_ZERO
        for _ in range(phi)
    )


def build_matrix(rng, nrows, ncols, phi):
    return [[random_poly(rng, phi) for _ in range(ncols)] for _ in range(nrows)]


def bench(kernel, rows, ctx, repeat):
    red, modpoly = ctx.red, ctx.modpoly
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernel.rref_rows(rows, red, modpoly)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench_mul(kernel, pairs, ctx, repeat):
    red = ctx.red
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [kernel.poly_mul(a, b, red) for a, b in pairs]
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=40, help="matrix rows (columns: 1.5x)")
    parser.add_argument("--conductor", type=int, default=12)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=20260815)
    args = parser.parse_args()

    ctx = field_context(args.conductor)
    rng = random.Random(args.seed)
    rows = build_matrix(rng, args.size, args.size * 3 // 2, ctx.phi)
    pairs = [(random_poly(rng, ctx.phi), random_poly(rng, ctx.phi)) for _ in range(4000)]

    print(f"conductor {args.conductor} (degree {ctx.phi}), "
          f"matrix {args.size} x {args.size * 3 // 2}, best of {args.repeat}")

    t_py, r_py = bench(py_impl, rows, ctx, args.repeat)
    m_py, p_py = bench_mul(py_impl, pairs, ctx, args.repeat)
    print(f"python  rref {t_py * 1000:8.1f} ms   mul x4000 {m_py * 1000:8.1f} ms")

    if cy_impl is None:
        print("cython  not built; install with the extension to compare")
        return 0

    t_cy, r_cy = bench(cy_impl, rows, ctx, args.repeat)
    m_cy, p_cy = bench_mul(cy_impl, pairs, ctx, args.repeat)
    print(f"cython  rref {t_cy * 1000:8.1f} ms   mul x4000 {m_cy * 1000:8.1f} ms")
    print(f"speedup rref {t_py / t_cy:6.2f}x          mul {m_py / m_cy:6.2f}x")

    if r_py[0] != r_cy[0] or [list(r) for r in r_py[1]] != [list(r) for r in r_cy[1]]:
        print("MISMATCH: kernels disagree on rref output", file=sys.stderr)
        return 1
    if p_py != p_cy:
        print("MISMATCH: kernels disagree on products", file=sys.stderr)
        return 1
    print("kernels agree on all outputs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
