"""Benchmark the compiled summation kernel against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py [n_eigenvalues]
"""

import sys
import time

import numpy as np

from rieszbounds._kernels import _ckernels_or_none, pykernels


def _time(fn, *args, repeat=5):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    rng = np.random.default_rng(0)
    lams = np.sort(rng.uniform(1.0, 1000.0, n))
    z = 900.0

    backends = [("python", pykernels)]
    ck = _ckernels_or_none()
    if ck is not None:
        backends.insert(0, ("c", ck))
    else:
        print("compiled kernel unavailable; benchmarking fallback only")

    print(f"n = {n}, z = {z}")
    for sigma in (0.5, 1.0, 2.0):
        results = {}
        for name, mod in backends:
            t, (val, cnt) = _time(mod.riesz_sum, lams, sigma, z)
            results[name] = (t, val)
            print(f"  riesz_sum sigma={sigma:<4} [{name:6s}] "
                  f"{t*1e3:8.2f} ms  value={val:.12e}  terms={cnt}")
        if len(results) == 2:
            rel = abs(results["c"][1] - results["python"][1]) \
                / abs(results["python"][1])
            speedup = results["python"][0] / results["c"][0]
            print(f"    speedup x{speedup:.1f}, backend deviation {rel:.2e}")

    for name, mod in backends:
        t, val = _time(mod.power_sum, lams, n, 2.0)
        print(f"  power_sum p=2       [{name:6s}] {t*1e3:8.2f} ms  "
              f"value={val:.12e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
