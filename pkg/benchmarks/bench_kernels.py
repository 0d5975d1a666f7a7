#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths on a few representative networks: the all-pairs
BFS that builds the distance matrix, and the full k=2 verification scan
over all vertex pairs with the certified candidate set as members.

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --families bf:6 benes:5 --repeat 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import resolvekit as rk
from resolvekit._kernels import available_backends, load_backend


def candidate_members(family: str, g) -> np.ndarray:
    if family == "bf":
        r = max(rk.level_of_label(lab) for lab in g.labels)
        keep = {0, r}
        ids = [v for v in range(g.n)
               if rk.level_of_label(g.labels[v]) in keep]
    elif family == "benes":
        top = max(rk.level_of_label(lab) for lab in g.labels)
        keep = {0, top // 2, top}
        ids = [v for v in range(g.n)
               if rk.level_of_label(g.labels[v]) in keep]
    else:
        ids = sorted(rk.twin_vertices(g))
    return np.asarray(ids, dtype=np.int32)


def best_of(repeat: int, fn) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


BUILDERS = {"bf": rk.butterfly, "benes": rk.benes, "sl": rk.silicate}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--families", nargs="+", default=["bf:5", "bf:6", "benes:4", "sl:3"],
                        metavar="FAMILY:PARAM",
                        help="instances to time (families: bf, benes, sl)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of this many runs")
    args = parser.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("note: compiled backend not built, timing the fallback only")

    header = f"{'instance':>10} {'n':>5} {'kernel':>22}"
    for name in backends:
        header += f" {name:>12}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for spec in args.families:
        family, _, param = spec.partition(":")
        if family not in BUILDERS:
            parser.error(f"unknown family {family!r} (use bf, benes, sl)")
        g = BUILDERS[family](int(param))
        members = candidate_members(family, g)
        dist = load_backend(backends[0]).all_pairs_bfs(g._indptr, g._indices, g.n)

        rows = [
            ("all_pairs_bfs",
             lambda impl: impl.all_pairs_bfs(g._indptr, g._indices, g.n)),
            ("first_deficient_pair k=2",
             lambda impl: impl.first_deficient_pair(dist, members, 2)),
            ("min_pair_coverage",
             lambda impl: impl.min_pair_coverage(
                 dist, np.arange(g.n, dtype=np.int32))),
        ]
        for kernel_name, call in rows:
            line = f"{spec:>10} {g.n:>5} {kernel_name:>22}"
            times = []
            for backend in backends:
                impl = load_backend(backend)
                t = best_of(args.repeat, lambda: call(impl))
                times.append(t)
                line += f" {t * 1e3:>10.2f}ms"
            if len(times) == 2 and times[1] > 0:
                line += f" {times[0] / times[1]:>8.1f}x"
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
