"""Deterministic 64-bit splitmix generator.

Replays must be reproducible across implementations, so the simulator does not
rely on any library RNG.  The generator below is splitmix64 with the standard
constants; the same seed therefore produces the same stream in any language
with 64-bit unsigned arithmetic.

    state  <- state + 0x9E3779B97F4A7C15   (mod 2^64)
    z      <- state
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    output <- z ^ (z >> 31)

Doubles in [0, 1) take the top 53 bits: ``(output >> 11) * 2**-53``.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Counter-based splitmix64 stream seeded by a 64-bit integer."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        """Uniform double in [lo, hi) from the top 53 bits of the stream."""
        u = (self.next_u64() >> 11) * 2.0**-53
        return lo + (hi - lo) * u

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n) by unbiased rejection."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = _MASK - (_MASK + 1) % n
        while True:
            u = self.next_u64()
            if u <= limit:
                return u % n
