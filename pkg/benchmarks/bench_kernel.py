"""Benchmark: pure-Python vs compiled subset-search kernel.

The kernel is the hot inner loop of every exact dimension computation, so
this is the number that decides whether the extension is worth building.

Usage:  python benchmarks/bench_kernel.py [--quick]
"""

import argparse
import random
import time

import numpy as np

from truncdim import _kernel_py
from truncdim.families import path
from truncdim.graph import all_pairs_distances, enumerate_connected_graphs
from truncdim.resolve import truncated_matrix

try:
    from truncdim import _kernel_c
except ImportError:
    _kernel_c = None


def workload_connected_graphs(n, k):
    mats = []
    for g in enumerate_connected_graphs(n):
        mats.append(np.ascontiguousarray(
            truncated_matrix(all_pairs_distances(g), k), dtype=np.int32))
    return mats


def workload_trees(n, k, count, seed=7):
    rng = random.Random(seed)
    mats = []
    from truncdim.families import random_tree
    for _ in range(count):
        t = random_tree(n, rng)
        mats.append(np.ascontiguousarray(
            truncated_matrix(all_pairs_distances(t), k), dtype=np.int32))
    return mats


def workload_long_path(n, k):
    return [np.ascontiguousarray(
        truncated_matrix(all_pairs_distances(path(n)), k), dtype=np.int32)]


def time_impl(impl, mats, repeats=1):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for m in mats:
            impl.min_distinguishing_subset(m, m.shape[1])
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()

    workloads = [
        ("connected graphs n=5, k=1", workload_connected_graphs(5, 1)),
        ("connected graphs n=6, k=2", workload_connected_graphs(6, 2)),
        ("random trees n=12, k=1",
         workload_trees(12, 1, 200 if args.quick else 2000)),
        ("path n=20, k=2", workload_long_path(20, 2)),
    ]
    if args.quick:
        workloads[1] = ("connected graphs n=5, k=2", workload_connected_graphs(5, 2))

    print(f"{'workload':32s} {'matrices':>9s} {'python':>10s} "
          f"{'cython':>10s} {'speedup':>8s}")
    for name, mats in workloads:
        t_py = time_impl(_kernel_py, mats)
        if _kernel_c is not None:
            t_c = time_impl(_kernel_c, mats)
            print(f"{name:32s} {len(mats):9d} {t_py:9.3f}s {t_c:9.3f}s "
                  f"{t_py / t_c:7.1f}x")
        else:
            print(f"{name:32s} {len(mats):9d} {t_py:9.3f}s "
                  f"{'(extension not built)':>20s}")


if __name__ == "__main__":
    main()
