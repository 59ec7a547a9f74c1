#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Two layers:

  * micro: the raw kernels (Koszul monomial merge, Bareiss elimination)
    timed in-process against both implementations;
  * pipeline: a realistic workload (forcing plus the Betti vector of a
    six-dimensional fiber twisted over S2) executed in subprocesses, once
    per backend, selected through NILSPLIT_PURE_PYTHON.

Usage: python benchmarks/bench_kernels.py [--merges N] [--ranks N]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from nilsplit import _kernels_py

try:
    from nilsplit import _speedups
except ImportError:
    _speedups = None

PIPELINE_SNIPPET = """
import time
from nilsplit import catalog, kernels
from nilsplit.bundles import build_twisted, forcing_check, sphere_base, total_betti
from nilsplit.lie_algebras import ce_model
from nilsplit.symplectic import SymplecticForm

t0 = time.perf_counter()
doc = catalog.get("h3-plus-h3")
fiber = ce_model(doc.to_spec())
sf = SymplecticForm.from_coeffs(fiber, doc.omega_coeffs())
for _ in range(3):
    forcing_check(fiber, sf, sphere_base())
    tm = build_twisted(fiber, sphere_base(), [[0]] * 6)
    total_betti(tm, 8)
print(f"{kernels.BACKEND} {time.perf_counter() - t0:.4f}")
"""


def random_keys(rng, count, ngens, parity):
    keys = []
    for _ in range(count):
        key = []
        for i in range(ngens):
            if rng.random() < 0.5:
                key.extend([i, 1 if parity[i] else rng.randint(1, 3)])
        keys.append(tuple(key))
    return keys


def bench_merges(impl, pairs, parity, repeat):
    merge = impl.merge_monomials
    t0 = time.perf_counter()
    for _ in range(repeat):
        for a, b in pairs:
            merge(a, b, parity)
    return time.perf_counter() - t0


def bench_ranks(impl, matrices, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for rows in matrices:
            impl.bareiss_rank([list(r) for r in rows])
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--merges", type=int, default=20000)
    parser.add_argument("--ranks", type=int, default=60)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(7)
    parity = bytes([1, 1, 1, 1, 0, 0, 1, 0])
    pairs = list(
        zip(
            random_keys(rng, args.merges, 8, parity),
            random_keys(rng, args.merges, 8, parity),
        )
    )
    matrices = [
        [[rng.randint(-5, 5) for _ in range(30)] for _ in range(30)]
        for _ in range(args.ranks)
    ]

    impls = [("python", _kernels_py)]
    if _speedups is not None:
        impls.append(("c", _speedups))

    print(f"== micro: merge_monomials ({args.merges} pairs x {args.repeat}) ==")
    base_time = None
    for name, impl in impls:
        t = bench_merges(impl, pairs, parity, args.repeat)
        base_time = base_time or t
        print(f"  {name:7s} {t:8.4f}s  (x{base_time / t:.2f})")

    print(f"== micro: bareiss_rank ({args.ranks} 30x30 matrices x {args.repeat}) ==")
    base_time = None
    for name, impl in impls:
        t = bench_ranks(impl, matrices, args.repeat)
        base_time = base_time or t
        print(f"  {name:7s} {t:8.4f}s  (x{base_time / t:.2f})")

    print("== pipeline: h3+h3 forcing + twisted Betti vector, per backend ==")
    for env_val in ("1", ""):
        env = dict(os.environ)
        if env_val:
            env["NILSPLIT_PURE_PYTHON"] = env_val
        else:
            env.pop("NILSPLIT_PURE_PYTHON", None)
        out = subprocess.run(
            [sys.executable, "-c", PIPELINE_SNIPPET],
            capture_output=True,
            text=True,
            env=env,
        )
        line = out.stdout.strip() or out.stderr.strip()
        print(f"  {line}")


if __name__ == "__main__":
    main()
