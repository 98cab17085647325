"""SplitMix64, the seeded generator behind every random signal.

Bit-exact definition (all arithmetic modulo 2**64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

A uniform double in [0, 1) is ``(output >> 11) * 2**-53``; samples in
[-1, 1) are ``2*u - 1``.  The i-th draw after seeding with ``s`` depends
only on ``s + i*gamma``, so batches are generated vectorized.
"""

from __future__ import annotations

import zlib

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & MASK64

    def next_u64(self, count: int) -> np.ndarray:
        if count < 0:
            raise ValueError("count must be >= 0")
        steps = np.arange(1, count + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + steps * np.uint64(GAMMA)
            out = _mix(z)
        self.state = (self.state + count * GAMMA) & MASK64
        return out

    def random(self, count: int) -> np.ndarray:
        """Uniform doubles in [0, 1)."""
        return (self.next_u64(count) >> np.uint64(11)).astype(np.float64) * 2.0 ** -53

    def uniform(self, count: int, low: float = -1.0, high: float = 1.0) -> np.ndarray:
        return low + (high - low) * self.random(count)

    def integers(self, count: int, bound: int) -> np.ndarray:
        """Integers in [0, bound) as floor(u * bound) of uniform doubles."""
        if bound < 1:
            raise ValueError("bound must be >= 1")
        return np.floor(self.random(count) * bound).astype(np.int64)

    def fork(self, label: str) -> SplitMix64:
        """Independent stream keyed by ``label``, leaving this one untouched."""
        key = zlib.crc32(label.encode("utf-8"))
        return SplitMix64(int(_mix(np.array([self.state ^ key], dtype=np.uint64))[0]))
