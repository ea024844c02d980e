"""Deterministic 64-bit PRNG (splitmix64).

Every randomized operation in the package takes an explicit seed and draws
from this generator, so identical seeds give byte-identical outputs across
platforms and Python versions (the stdlib does not promise that for all of
its distribution helpers).
"""

from __future__ import annotations

from typing import Sequence, TypeVar

_MASK = (1 << 64) - 1

T = TypeVar("T")


class SplitMix64:
    """splitmix64 as published by Steele, Lea & Flood (constant increment
    0x9E3779B97F4A7C15, two xor-shift/multiply finalization rounds)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection sampling."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        limit = _MASK + 1 - ((_MASK + 1) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0**-53)

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.randrange(len(seq))]

    def coin(self, p: float = 0.5) -> bool:
        return self.random() < p
