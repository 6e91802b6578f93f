"""Deterministic cross-platform random generator for fuzz runs.

This is Marsaglia's xorshift64* with the standard shift triple
(12, 25, 27) and multiplier 2685821657736338717.  It is specified by
algorithm rather than delegated to ``random`` so that a seeded fuzz run
replays bit-for-bit on any platform and any Python version.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1
_MULT = 2685821657736338717
_MIX = 0x9E3779B97F4A7C15  # used only to spread user seeds over 64 bits


def _mix64(x: int) -> int:
    x &= _MASK
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK
    x ^= x >> 31
    return x


class XorShift64Star:
    """64-bit xorshift* stream; state is never zero."""

    def __init__(self, seed: int):
        state = _mix64((seed & _MASK) ^ _MIX)
        self._state = state if state != 0 else _MIX

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self._state = x
        return (x * _MULT) & _MASK

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def rational(self, max_den: int, signed: bool = True) -> Fraction:
        num_lo = -max_den if signed else 1
        return Fraction(self.randint(num_lo, max_den), self.randint(1, max_den))


def substream(seed: int, index: int) -> XorShift64Star:
    """Stream for the ``index``-th work item of a seeded run.

    Deriving per-item streams keeps parallel fuzzing deterministic: the
    result of item k does not depend on how items are split over workers.
    """
    return XorShift64Star(_mix64(seed & _MASK) ^ _mix64(index & _MASK))
