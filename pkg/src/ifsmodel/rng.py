"""Portable deterministic random numbers (splitmix64).

The generator is part of the public contract: rendering is bit-reproducible
across implementations that follow these update equations. All arithmetic is
modulo 2**64. The i-th output (i = 1, 2, ...) for a given seed is

    s = (seed + i * 0x9E3779B97F4A7C15) mod 2**64
    z = ((s ^ (s >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    out_i = z ^ (z >> 31)

and the corresponding uniform double in [0, 1) is

    u_i = (out_i >> 11) * 2**-53

Because out_i depends only on (seed, i), a block of outputs can be produced
in one vectorized pass; the scalar and vectorized paths are bit-identical.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_INV_2_53 = 2.0 ** -53


def _mix(s: int) -> int:
    z = ((s ^ (s >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential splitmix64 stream seeded by a 64-bit unsigned integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def next_double(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * _INV_2_53


def u64_block(seed: int, n: int, offset: int = 0) -> np.ndarray:
    """Outputs offset+1 .. offset+n of the stream for `seed`, as uint64.

    Identical to calling SplitMix64(seed).next_u64() offset+n times and
    keeping the last n values.
    """
    idx = np.arange(offset + 1, offset + n + 1, dtype=np.uint64)
    s = (np.uint64(seed & _MASK64) + idx * np.uint64(_GAMMA))
    z = (s ^ (s >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def double_block(seed: int, n: int, offset: int = 0) -> np.ndarray:
    """Uniform doubles in [0, 1), vectorized counterpart of next_double."""
    return (u64_block(seed, n, offset) >> np.uint64(11)).astype(np.float64) * _INV_2_53
