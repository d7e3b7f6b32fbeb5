"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the hot kernel workloads the library actually hits (dense
polynomial products and modexps for factorization, table-driven rank and
codeword enumeration for the code layer) on both implementations,
checks the outputs are identical, and reports timings.

    python3 benchmarks/bench_backends.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from constakit import _kernels_numpy as knp
from constakit.backend import bit_array

try:
    from constakit import _kernels_numba as knb
except ImportError:
    knb = None


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads():
    rng = np.random.default_rng(4242)
    p7 = 7
    f242 = rng.integers(0, p7, size=242).astype(np.int64)
    f242[-1] = 1
    g242 = rng.integers(0, p7, size=242).astype(np.int64)
    g242[-1] = 1
    yield (
        "poly_mul deg-241 x deg-241 (F_7)",
        lambda K: K.poly_mul(f242, g242, p7),
    )
    ebits = bit_array(7**110)
    yield (
        "poly_powmod X^(7^110) mod deg-242 (F_7)",
        lambda K: K.poly_powmod(np.array([0, 1], dtype=np.int64), ebits, f242, p7),
    )
    h9 = np.array([1, 0, 1], dtype=np.int64)
    red9 = np.array([[2, 0]], dtype=np.int64)
    F2d = rng.integers(0, 3, size=(242, 2)).astype(np.int64)
    F2d[-1] = (1, 0)
    G2d = rng.integers(0, 3, size=(121, 2)).astype(np.int64)
    G2d[-1] = (1, 0)
    yield (
        "xpoly_mul deg-241 x deg-120 (F_9)",
        lambda K: K.xpoly_mul(F2d, G2d, red9, 3),
    )
    yield (
        "xpoly_divmod deg-362 / deg-242 (F_9)",
        lambda K: K.xpoly_divmod(
            K.xpoly_mul(F2d, G2d, red9, 3), F2d, red9, h9, 3
        )[1],
    )
    q = 7
    idx = np.arange(q, dtype=np.int64)
    add_t = (idx[:, None] + idx[None, :]) % q
    mul_t = (idx[:, None] * idx[None, :]) % q
    neg_t = (-idx) % q
    inv_t = np.array([0] + [pow(int(i), q - 2, q) for i in idx[1:]], dtype=np.int64)
    M = rng.integers(0, q, size=(84, 42)).astype(np.int64)
    yield (
        "tab_rref 84x42 (F_7)",
        lambda K: K.tab_rref(M, add_t, mul_t, inv_t, neg_t)[1],
    )
    G = rng.integers(0, q, size=(6, 42)).astype(np.int64)
    rowmul = np.zeros((6, q, 42), dtype=np.int64)
    for v in range(q):
        rowmul[:, v, :] = mul_t[v, G]
    yield (
        "tab_weight_hist 7^6 words, N=42",
        lambda K: K.tab_weight_hist(rowmul, add_t, 42),
    )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if knb is None:
        print("numba unavailable; nothing to compare")
        return

    print(f"{'workload':45s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        fn(knb)  # warm the JIT before timing
        t_nb, out_nb = timed(lambda: fn(knb), args.repeat)
        t_np, out_np = timed(lambda: fn(knp), args.repeat)
        same = (
            np.array_equal(out_nb, out_np)
            if isinstance(out_nb, np.ndarray)
            else out_nb == out_np
        )
        if not same:
            raise SystemExit(f"MISMATCH between backends in: {name}")
        print(f"{name:45s} {t_nb*1e3:9.2f}ms {t_np*1e3:9.2f}ms {t_np/t_nb:7.1f}x")
    print("all outputs identical across backends")


if __name__ == "__main__":
    main()
