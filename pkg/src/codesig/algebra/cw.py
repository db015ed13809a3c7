"""Constant-weight words as combinatorial ranks.

Order: vectors compared as the string v_0 v_1 ... v_{n-1} with '0' < '1',
so the smallest weight-t word has its ones in the last t coordinates and
rank 0, and the largest (ones first) has rank C(n,t)-1.  Ranks address a
weight-t word in ceil(log2 C(n,t)) bits, which is how ring and CFS
signatures ship their error patterns.
"""

from __future__ import annotations

from math import comb

from ..errors import IndexOutOfRange, WeightMismatch
from .bits import BitVector


def cw_rank(v: BitVector) -> int:
    """Lexicographic rank of v within the weight-t stratum, t = v.weight()."""
    n, t_rem = v.n, v.weight()
    rank = 0
    for i in range(n):
        if t_rem == 0:
            break
        remaining = n - i - 1
        if v.get(i):
            rank += comb(remaining, t_rem)
            t_rem -= 1
    return rank


def cw_unrank(n: int, t: int, index: int) -> BitVector:
    """Inverse of cw_rank on the weight-t stratum of length-n vectors."""
    if not 0 <= t <= n:
        raise WeightMismatch(f"weight {t} outside [0, {n}]")
    if not 0 <= index < comb(n, t):
        raise IndexOutOfRange(f"rank {index} outside [0, C({n},{t}))")
    bits = 0
    t_rem = t
    for i in range(n):
        if t_rem == 0:
            break
        zero_block = comb(n - i - 1, t_rem)
        if index >= zero_block:
            index -= zero_block
            bits |= 1 << i
            t_rem -= 1
    return BitVector(n, bits)


def count_weight_at_most(n: int, t: int) -> int:
    """|{v in GF(2)^n : weight(v) <= t}|."""
    return sum(comb(n, w) for w in range(min(t, n) + 1))


def rank_bits(n: int, t: int) -> int:
    """Bits needed to address one weight-t word of length n."""
    c = comb(n, t)
    return max(c - 1, 0).bit_length()


def random_weight_at_most(n: int, t: int, rng) -> BitVector:
    """Uniform over all words of weight <= t (by stratum size, then unrank)."""
    total = count_weight_at_most(n, t)
    idx = rng.randrange(total)
    for w in range(t + 1):
        c = comb(n, w)
        if idx < c:
            return cw_unrank(n, w, idx)
        idx -= c
    raise AssertionError("unreachable")
