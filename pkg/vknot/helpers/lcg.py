"""Reproducible pseudo-random numbers for generators and walks.

A 32-bit linear congruential generator:

    state <- (1664525 * state + 1013904223) mod 2**32

seeded with ``seed mod 2**32``. ``below(n)`` maps the next state to ``[0, n)`` by
multiply-shift, ``(state * n) >> 32``. The sequence is fixed forever, independent of
the Python version, so a seed printed in a log replays the same diagram everywhere.
"""

from typing import Sequence, TypeVar

T = TypeVar("T")

_A = 1664525
_C = 1013904223
_MASK = 0xFFFFFFFF


class Lcg:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def next(self) -> int:
        self.state = (_A * self.state + _C) & _MASK
        return self.state

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return (self.next() * n) >> 32

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def sign(self) -> int:
        return 1 if self.below(2) == 0 else -1

    def shuffle(self, items: list) -> None:
        # Fisher-Yates, back to front
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
