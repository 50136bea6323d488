"""Seeded generator shared by the randomized suites.

A 64-bit linear congruential generator::

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

Each draw returns the high 32 bits of the new state.  The seed is the initial
state.  Fixed constants make suite output reproducible across implementations.
"""

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed=0):
        self.state = seed & MASK

    def next32(self):
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state >> 32

    def below(self, bound):
        """Uniform-ish integer in ``[0, bound)`` (plain modulo reduction)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next32() % bound

    def between(self, lo, hi):
        """Integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]
