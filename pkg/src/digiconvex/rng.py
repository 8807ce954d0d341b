"""Seeded xorshift64* generator.

The recurrence is fixed so instances are reproducible in any language::

    state = seed ^ 0x9E3779B97F4A7C15   (if that is 0, use 0x9E3779B97F4A7C15)
    next():
        state ^= state >> 12
        state ^= (state << 25) mod 2**64
        state ^= state >> 27
        return (state * 0x2545F4914F6CDD1D) mod 2**64

``below(m)`` is ``next() % m``; ``shuffle`` is Fisher-Yates from the last
position down, swapping ``i`` with ``below(i + 1)``.
"""

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MULT = 0x2545F4914F6CDD1D


class XorShift64Star:
    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        s = (seed & MASK) ^ GOLDEN
        self.state = s or GOLDEN

    def next(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & MASK
        s ^= s >> 27
        self.state = s
        return (s * MULT) & MASK

    def below(self, m: int) -> int:
        return self.next() % m

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in the closed range [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
