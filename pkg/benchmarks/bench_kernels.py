"""Compare the numba and numpy kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Both backends are imported in one process (the env flag only picks the
default), so every workload runs on identical inputs and the results are
checked for agreement before timings are reported.
"""
import argparse
import json
import time

import numpy as np

from rankmetric import _kernels
from rankmetric.gf import GF
from rankmetric.search import SearchProblem, candidates


def batch(q, N, m, n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.integers(0, q, size=(N, m, n)).astype(np.int64)


def distinct(W):
    flat = np.unique(W.reshape(len(W), -1), axis=0)
    return flat.reshape((len(flat),) + W.shape[1:])


def workloads():
    # (label, kernel index, field, args builder)
    F2, F8, F9 = GF(2), GF(8), GF(9)
    yield "batch_rank  F2   20000 x 4x4", 1, F2, lambda: (batch(2, 20000, 4, 4),)
    yield "batch_rank  F8   20000 x 5x5", 1, F8, lambda: (batch(8, 20000, 5, 5),)
    yield "batch_rank  F9    5000 x 8x8", 1, F9, lambda: (batch(9, 5000, 8, 8),)
    # distinct words, so neither kernel can stop early on a zero distance
    yield "min_dist    F8     800 x 3x3", 2, F8, lambda: (distinct(batch(8, 800, 3, 3, seed=1)),)
    full = candidates(SearchProblem((3, 3), 2, 2))
    yield "adjacency   F2  512 x 3x3 d=2", 3, F2, lambda: (full, 2)


def timed(fn, args, field, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args, *field.kernel_args())
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    backends = sorted(_kernels.BACKENDS)
    if "numba" not in backends:
        print("numba is not installed; only the numpy backend is available")

    rows = []
    for label, idx, field, build in workloads():
        inputs = build()
        results = {}
        outputs = {}
        for name in backends:
            fn = _kernels.BACKENDS[name][idx]
            fn(*[a[:2] if isinstance(a, np.ndarray) else a for a in inputs], *field.kernel_args())  # warm-up / JIT
            results[name], outputs[name] = timed(fn, inputs, field, args.repeat)
        ref = outputs[backends[0]]
        for name in backends[1:]:
            assert np.array_equal(np.asarray(ref), np.asarray(outputs[name])), f"{label}: backends disagree"
        rows.append({"workload": label, **{f"{k}_s": v for k, v in results.items()}})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    header = f"{'workload':32s}" + "".join(f"{b + ' (s)':>14s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for row in rows:
        line = f"{row['workload']:32s}" + "".join(f"{row[b + '_s']:14.4f}" for b in backends)
        if len(backends) == 2:
            line += f"{row['numpy_s'] / row['numba_s']:9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
