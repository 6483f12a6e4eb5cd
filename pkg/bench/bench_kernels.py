#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

The workload is the real one: the even-like duadic pass (four weight
tracks) for a few lengths, plus a binary span walk.  Both backends produce
identical histograms; this script only compares speed.

Usage: python bench/bench_kernels.py [--max-dim 13]
"""

import argparse
import time

import numpy as np

from duadiq import _kernels, gf4
from duadiq.cyclic import CyclicCode, DefiningSet
from duadiq.duadic import find_splittings


def duadic_pass_inputs(n):
    split = next(s for s in find_splittings(n) if s.has_multiplier(-2))
    even = CyclicCode(DefiningSet(n, split.s1.members | {0}))
    g = even.gen_matrix
    lo, hi = gf4.pack_planes(g)
    olo, ohi = gf4.pack_planes(gf4.MUL_TABLE[2][g])
    sg_lo, sg_hi = _kernels._scaled_generators(lo, hi, olo, ohi)
    ones = np.ones(n, dtype=np.uint8)
    offsets = np.vstack([np.zeros(n, dtype=np.uint8), ones,
                         gf4.scalar_mul(2, ones), gf4.scalar_mul(3, ones)])
    off_lo, off_hi = gf4.pack_planes(offsets)
    return even.dim, sg_lo, sg_hi, off_lo, off_hi


def run_backend(backend, sg_lo, sg_hi, off_lo, off_hi, nbins):
    t0 = time.perf_counter()
    hist = _kernels.gray_weight_hists(sg_lo, sg_hi, off_lo, off_hi, nbins, backend=backend)
    return hist, time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-dim", type=int, default=13,
                        help="largest span dimension to walk (4^dim steps)")
    args = parser.parse_args()

    _kernels.warm_up()
    print(f"active backend: {_kernels.active_backend()}")
    print(f"{'n':>4} {'dim':>4} {'steps':>12} {'numba s':>9} {'numpy s':>9} {'speedup':>8}")
    for n in (13, 17, 23, 29):
        dim, sg_lo, sg_hi, off_lo, off_hi = duadic_pass_inputs(n)
        if dim > args.max_dim:
            continue
        steps = 4**dim
        h_nb, t_nb = run_backend("numba", sg_lo, sg_hi, off_lo, off_hi, n + 1)
        h_np, t_np = run_backend("numpy", sg_lo, sg_hi, off_lo, off_hi, n + 1)
        assert np.array_equal(h_nb, h_np), "backends disagree"
        print(f"{n:>4} {dim:>4} {steps:>12} {t_nb:>9.3f} {t_np:>9.3f} {t_np / t_nb:>8.1f}x")

    rng = np.random.default_rng(0)
    rows = rng.integers(0, 2, (20, 63)).astype(np.uint8)
    lo, _ = gf4.pack_planes(rows)
    off = np.zeros((1, 1), dtype=np.uint64)
    t0 = time.perf_counter()
    a = _kernels.gray_weight_hists_binary(lo, off, 64, backend="numba")
    t_nb = time.perf_counter() - t0
    t0 = time.perf_counter()
    b = _kernels.gray_weight_hists_binary(lo, off, 64, backend="numpy")
    t_np = time.perf_counter() - t0
    assert np.array_equal(a, b)
    print(f"binary 2^20 span:{'':>14} {t_nb:>9.3f} {t_np:>9.3f} {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
