"""Deterministic 64-bit linear congruential generator.

Used everywhere randomness is needed so that equal seeds give bit-identical
runs on every platform.  Constants are the MMIX multiplier/increment:
state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64,
output = top 31 bits of the new state.
"""

from __future__ import annotations

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int):
        self.seed = seed
        self.state = seed & _MASK

    def next_word(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state >> 33

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n)."""
        assert n >= 1
        return self.next_word() % n
