"""Counter-based 64-bit generator for reproducible instance sampling.

The generator is SplitMix64 evaluated at an explicit counter:

    state(i) = (seed + (i + 1) * 0x9E3779B97F4A7C15) mod 2^64
    z = state(i)
    z = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z = (z XOR (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    out(i) = z XOR (z >> 31)

``unit(i)`` maps the top 53 bits of out(i) to [0, 1): (out(i) >> 11) * 2^-53.
Every draw is addressed by its counter, so instance generation is stateless,
order-independent, and bit-reproducible across platforms and languages.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def splitmix64(seed: int, counter: int) -> int:
    """The i-th 64-bit output of SplitMix64 seeded with ``seed``."""
    z = (seed + (counter + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


class CounterRng:
    """Stateless addressed generator; draw i never depends on draw j."""

    __slots__ = ("seed",)

    def __init__(self, seed: int):
        self.seed = seed & _MASK64

    def raw(self, counter: int) -> int:
        return splitmix64(self.seed, counter)

    def unit(self, counter: int) -> float:
        """Uniform float in [0, 1) from the top 53 bits of draw ``counter``."""
        return (self.raw(counter) >> 11) * 2.0**-53

    def below(self, counter: int, bound: int) -> int:
        """Uniform integer in [0, bound) by 64-bit modular reduction."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.raw(counter) % bound
