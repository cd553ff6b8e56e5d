"""SplitMix64 with hash-derived per-trial streams.

The generator is the reference SplitMix64: state advances by the odd
constant 0x9E3779B97F4A7C15 and each output is the finalising mix

    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27; z *= 0x94D049BB133111EB
    z ^= z >> 31

(all mod 2^64).  First outputs for seed 0, matching the reference C
implementation:

    0xE220A8397B1DCDAF  0x6E789E6AA1B965F4  0x06C45D188009454F
    0xF88BB8A8724C81EC  0x1B39896A51A8749B

Because the state is just a counter, output j of a stream with initial
state s equals mix64(s + (j+1)*GOLDEN); `uniforms` exploits that to fill
numpy arrays without a Python-level loop, bit-identical to the scalar
path.

Independent streams are derived by hashing, never by jumping:

    stream_for(seed, index).state = mix64(seed XOR (index+1)*GOLDEN mod 2^64)

which is injective in index for a fixed seed, so parallel trials can be
scheduled in any order, on any worker count, with identical results.
"""

from __future__ import annotations

import numpy as np

__all__ = ["SplitMix64", "mix64", "stream_for"]

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_NP_GOLDEN = np.uint64(GOLDEN)
_NP_MIX1 = np.uint64(_MIX1)
_NP_MIX2 = np.uint64(_MIX2)
_INV_2_53 = float(2.0**-53)


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, state: int):
        self.state = state & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_float(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * _INV_2_53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (unbiased)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = MASK64 - (MASK64 + 1) % n
        while True:
            x = self.next_u64()
            if x <= limit:
                return x % n

    def uniforms(self, count: int) -> np.ndarray:
        """`count` uniforms in [0, 1), advancing the stream accordingly.

        Identical values to `count` calls of next_float.
        """
        js = np.arange(1, count + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + js * _NP_GOLDEN
            z = (z ^ (z >> np.uint64(30))) * _NP_MIX1
            z = (z ^ (z >> np.uint64(27))) * _NP_MIX2
            z ^= z >> np.uint64(31)
        self.state = (self.state + count * GOLDEN) & MASK64
        return (z >> np.uint64(11)).astype(np.float64) * _INV_2_53


def stream_for(seed: int, index: int) -> SplitMix64:
    """Independent stream for the given trial index (see module docs)."""
    return SplitMix64(mix64((seed & MASK64) ^ (((index + 1) * GOLDEN) & MASK64)))
