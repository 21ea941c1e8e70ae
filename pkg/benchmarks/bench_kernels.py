"""Benchmark the compiled kernels against the pure Python fallback.

Times the two hot loops of the oracle sweeps (minimal-hitting-set
enumeration and exact integer rank) on representative inputs, plus an
end-to-end full-oracle sweep with each backend.

Run: python3 benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time

from mixedprod import _kernels_py

try:
    from mixedprod import _kernels
except ImportError:
    _kernels = None


def hitting_set_inputs():
    rng = random.Random(42)
    cases = []
    for _ in range(200):
        nbits = rng.randint(6, 16)
        nsets = rng.randint(4, 24)
        cases.append(([rng.randint(1, (1 << nbits) - 1) for _ in range(nsets)], nbits))
    return cases


def rank_inputs():
    rng = random.Random(43)
    cases = []
    for _ in range(100):
        nr, nc = rng.randint(10, 40), rng.randint(10, 40)
        cases.append([[rng.choice((-1, 0, 0, 0, 1)) for _ in range(nc)]
                      for _ in range(nr)])
    return cases


def bench(label, impls, run_case, cases, repeats=3):
    print(f"\n{label}")
    base = None
    for impl in impls:
        best = min(
            _timed(lambda: [run_case(impl, c) for c in cases])
            for _ in range(repeats))
        if base is None:
            base = best
        speedup = base / best
        print(f"  {impl.BACKEND:>8}: {best * 1e3:8.1f} ms   ({speedup:.1f}x)")


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def bench_sweep():
    print("\nfull-oracle sweep (n,m <= 3, s <= 3), subprocess per backend", flush=True)
    code = ("from mixedprod.sweep import SweepConfig, run_sweep;"
            "import mixedprod, time; t0=time.time();"
            "r=run_sweep(SweepConfig(3,3,3,'full'));"
            "print(f'  {mixedprod.BACKEND:>8}: {time.time()-t0:6.2f} s "
            "({r.configs_checked} specs, {len(r.mismatches)} mismatches)')")
    for env_pure in ("1", ""):
        env = dict(os.environ)
        env.pop("MIXEDPROD_PURE", None)
        if env_pure:
            env["MIXEDPROD_PURE"] = env_pure
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    impls = [_kernels_py] + ([_kernels] if _kernels is not None else [])
    if _kernels is None:
        print("compiled backend not available; timing the fallback only")
    bench("minimal_hitting_sets (200 random families)", impls,
          lambda impl, c: impl.minimal_hitting_sets(*c), hitting_set_inputs())
    bench("rank_int (100 random sparse sign matrices)", impls,
          lambda impl, c: impl.rank_int(c), rank_inputs())
    bench_sweep()


if __name__ == "__main__":
    main()
