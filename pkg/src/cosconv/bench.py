"""Wall-clock comparison of the naive and fast Z_n paths."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .algebra import Signal, cosine_convolve, l1_norm
from .groups import Group
from .rng import SplitMix64
from .transform import cosine_convolve_fast, dct_fast, dct_naive

BENCH_TOL = 1e-9
COLUMNS = ("n", "dct_naive_ns", "dct_fast_ns", "cosine_naive_ns", "cosine_fast_ns")


@dataclass
class BenchRow:
    n: int
    dct_naive_ns: int
    dct_fast_ns: int
    cosine_naive_ns: int
    cosine_fast_ns: int

    def astuple(self):
        return (self.n, self.dct_naive_ns, self.dct_fast_ns, self.cosine_naive_ns, self.cosine_fast_ns)


class OracleMismatch(AssertionError):
    pass


def _median_ns(fn, repeats: int) -> int:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times))


def bench_size(n: int, repeats: int = 5, seed: int = 42) -> BenchRow:
    """Time one size after checking that fast and naive agree on the inputs."""
    if n < 1:
        raise ValueError("sizes must be >= 1")
    g = Group.cyclic(n)
    rng = SplitMix64(seed).fork(f"bench-{n}")
    f, h = Signal(g, rng.uniform(n)), Signal(g, rng.uniform(n))

    gap = np.max(np.abs(dct_fast(f).values - dct_naive(f).values))
    if gap > BENCH_TOL * (1 + l1_norm(f)):
        raise OracleMismatch(f"dct fast/naive mismatch at n={n}: {gap}")
    gap = np.max(np.abs(cosine_convolve_fast(f, h).values - cosine_convolve(f, h).values))
    if gap > BENCH_TOL * (1 + l1_norm(f) * l1_norm(h)):
        raise OracleMismatch(f"cosine convolution fast/naive mismatch at n={n}: {gap}")

    return BenchRow(
        n,
        _median_ns(lambda: dct_naive(f), repeats),
        _median_ns(lambda: dct_fast(f), repeats),
        _median_ns(lambda: cosine_convolve(f, h), repeats),
        _median_ns(lambda: cosine_convolve_fast(f, h), repeats),
    )


def run_bench(sizes, repeats: int = 5, seed: int = 42) -> list[BenchRow]:
    return [bench_size(int(n), repeats, seed) for n in sizes]


def to_csv(rows) -> str:
    lines = [",".join(COLUMNS)]
    lines += [",".join(str(v) for v in r.astuple()) for r in rows]
    return "\n".join(lines) + "\n"
