#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Micro-benchmarks hit the kernel functions directly; the end-to-end rows
swap the active backend inside ``symfusion.kernels`` (all call sites
resolve the functions through that module at call time) and rebuild a
mid-sized fusion operator from scratch.

Run:  python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from symfusion import _kernels_py
from symfusion import kernels as active

try:
    from symfusion import _kernels_cy
except ImportError:
    _kernels_cy = None

KERNEL_NAMES = ("compose", "ga_mul", "sparse_mm", "zpoly_add", "zpoly_scale",
                "zpoly_scale_linear", "bareiss_rank", "frac_rref")


def timed(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_ga_mul(impl):
    from symfusion.shapes import Partition, row_tableau, skew
    from symfusion.symalg import e_row

    e = e_row(row_tableau(skew(Partition((3, 2, 1)))))  # 6 boxes, many terms
    return timed(impl.ga_mul, e.terms, e.terms)


def bench_sparse_mm(impl):
    rng = random.Random(1)
    dim = 200
    rows = {}
    for _ in range(6 * dim):
        r, c = rng.randrange(dim), rng.randrange(dim)
        rows.setdefault(r, {})[c] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return timed(impl.sparse_mm, rows, rows)


def bench_bareiss(impl):
    rng = random.Random(2)
    n = 120
    mat = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
    return timed(lambda: impl.bareiss_rank([row[:] for row in mat], n))


def bench_zpoly(impl):
    rng = random.Random(3)
    polys = [tuple(rng.randint(-9, 9) for _ in range(12)) for _ in range(2000)]

    def run():
        acc = ()
        for p in polys:
            acc = impl.zpoly_add(acc, impl.zpoly_scale_linear(p, 3, -2))
        return acc

    return timed(run)


def _swap_backend(impl):
    for name in KERNEL_NAMES:
        setattr(active, name, getattr(impl, name))


def bench_fusion_operator(impl):
    from symfusion import fusion
    from symfusion.fusion import FusionConfig, f_operator_general
    from symfusion.shapes import Partition, row_tableau, skew

    _swap_backend(impl)
    cfg = FusionConfig(row_tableau(skew(Partition((3, 1)))), 4, 0, "alternating")

    def run():
        fusion._f_operator_cached.cache_clear()
        fusion._e_operator_cached.cache_clear()
        return f_operator_general(cfg)

    return timed(run, repeat=2)


def main():
    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))
    rows = []
    for bench_name, bench in (("ga_mul S6 symmetrizer", bench_ga_mul),
                              ("sparse_mm 200x200", bench_sparse_mm),
                              ("bareiss_rank 120x120", bench_bareiss),
                              ("zpoly pipeline", bench_zpoly),
                              ("fusion operator Sp4 (3,1)", bench_fusion_operator)):
        times = {}
        outs = {}
        for name, impl in backends:
            times[name], outs[name] = bench(impl)
        if len(outs) == 2 and all(v is not None for v in outs.values()):
            assert outs["python"] == outs["cython"], f"backends disagree on {bench_name}"
        rows.append((bench_name, times))
    _swap_backend(_kernels_cy or _kernels_py)

    width = max(len(r[0]) for r in rows) + 2
    header = f"{'benchmark':<{width}}" + "".join(f"{n:>12}" for n, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for bench_name, times in rows:
        line = f"{bench_name:<{width}}"
        for name, _ in backends:
            line += f"{times[name] * 1000:>10.1f}ms"
        if len(backends) == 2:
            line += f"{times['python'] / times['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
