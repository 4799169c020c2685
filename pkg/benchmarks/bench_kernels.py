"""Time the numba and pure-numpy kernel backends on oracle-sized workloads.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from boothlem import kernels
from boothlem.oracles import CIRCLE_POINTS, GRID_POINTS, SCAN_POINTS, SWEEP_POINTS

WORKLOADS = {
    "h_extremes": lambda k: k.h_extremes(0.5, 1.2, GRID_POINTS),
    "radial_margins": lambda k: k.radial_margins(0.5, _RE, _IM),
    "circle_margins": lambda k: k.circle_margins(0.5, 1.0, -1.0, 0.3, max(CIRCLE_POINTS, SWEEP_POINTS)),
    "lemma_margins": lambda k: k.lemma_margins(0.5, 1.0, -1.0, _RS),
}

_rng = np.random.default_rng(0)
_RE = _rng.uniform(-1.0, 3.0, GRID_POINTS)
_IM = _rng.uniform(-1.5, 1.5, GRID_POINTS)
_RS = np.linspace(1e-9, 1.0 - 1e-9, SCAN_POINTS)


def best_of(fn, impl, repeat):
    fn(impl)  # warm-up, includes JIT compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(impl)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args(argv)
    impls = {"numpy": kernels.numpy_impl}
    if kernels.numba_impl is not None:
        impls["numba"] = kernels.numba_impl
    print(f"{'kernel':<16}" + "".join(f"{name + ' [ms]':>14}" for name in impls) + f"{'speedup':>10}")
    for label, fn in WORKLOADS.items():
        ms = {name: 1e3 * best_of(fn, impl, args.repeat) for name, impl in impls.items()}
        row = f"{label:<16}" + "".join(f"{ms[name]:>14.3f}" for name in impls)
        if "numba" in ms:
            row += f"{ms['numpy'] / ms['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
