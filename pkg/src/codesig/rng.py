"""Seedable, forkable randomness.

Every operation in the library that needs randomness takes an explicit Rng;
nothing reads ambient entropy.  The CLI creates one from --seed (or from OS
entropy when --seed is absent) and passes it down.
"""

from __future__ import annotations

import random


class Rng:
    """Deterministic random stream with child-stream forking.

    Wraps the stdlib Mersenne Twister, whose output is stable across
    platforms for a fixed seed.  ``fork()`` draws a fresh 128-bit seed from
    the parent, giving an independent child stream; forking is deterministic
    given the parent's seed and the call order.
    """

    def __init__(self, seed: int | bytes | str | None = None):
        self._rand = random.Random(seed)

    def fork(self) -> "Rng":
        return Rng(self._rand.getrandbits(128))

    def randbits(self, k: int) -> int:
        return self._rand.getrandbits(k) if k > 0 else 0

    def randrange(self, bound: int) -> int:
        return self._rand.randrange(bound)

    def randint(self, lo: int, hi: int) -> int:
        return self._rand.randint(lo, hi)

    def choice(self, seq):
        return self._rand.choice(seq)

    def shuffle(self, seq: list) -> None:
        self._rand.shuffle(seq)

    def sample(self, population, k: int) -> list:
        return self._rand.sample(population, k)

    def bytes(self, k: int) -> bytes:
        return self._rand.getrandbits(8 * k).to_bytes(k, "little") if k else b""
