"""Time the compiled series kernels against the numpy fallback.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.  Prints one
row per workload with the best-of-N wall time of each backend and the
speed-up.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from qfht import _backend


def workloads(rng: np.random.Generator):
    w_small = rng.standard_normal(2000) * 5 + 1j * rng.standard_normal(2000) * 5
    w_large = rng.random(200) * 1e4 + 0j
    xs, ys = rng.random(400) * 20, rng.random(400) * 20
    return {
        "inorm_series, 2000 moderate args": lambda k: k.inorm_series(1.5, w_small, 1e-17, 10000),
        "inorm_series, 200 args up to 1e4": lambda k: k.inorm_series(1.5, w_large, 1e-17, 10000),
        "kernel_sum, theta=0.9, one point": lambda k: k.laguerre_kernel_sum(0.9, 1.0, 3.0, 7.0, 1e-15, 2000, 5),
        "kernel_grid, theta=0.6+0.3i, 400 pts": lambda k: k.laguerre_kernel_grid(0.6 + 0.3j, 2.5, xs, ys, 1e-15, 2000, 5),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = {"python": _backend.get("python")}
    if _backend.COMPILED_AVAILABLE:
        backends["cython"] = _backend.get("cython")
    else:
        print("compiled kernels not built; timing the fallback only")

    rng = np.random.default_rng(0)
    print(f"{'workload':40s}" + "".join(f"{name:>12s}" for name in backends) + f"{'speed-up':>10s}")
    for label, job in workloads(rng).items():
        times = {
            name: min(timeit.repeat(lambda k=mod: job(k), number=1, repeat=args.repeat))
            for name, mod in backends.items()
        }
        row = f"{label:40s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times.values())
        if "cython" in times:
            row += f"{times['python'] / times['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
