"""Brute-force syndrome decoding, the ground truth for every decoder test.

Exponential in t; guarded by an enumeration budget so it stays test-only.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from ..errors import DimensionMismatch, OracleTooLarge
from .bits import BitMatrix, BitVector

DEFAULT_CANDIDATE_CAP = 1 << 22


def sd_bruteforce(
    h: BitMatrix,
    s: BitVector,
    t: int,
    max_candidates: int = DEFAULT_CANDIDATE_CAP,
) -> BitVector | None:
    """Minimal-weight x with h @ x^T = s and weight(x) <= t, else None.

    Ties within the minimal weight break to the lexicographically smallest
    vector (v_0 first, '0' < '1'), making the oracle deterministic.
    """
    if s.n != h.rows:
        raise DimensionMismatch(f"syndrome length {s.n} != rows {h.rows}")
    n = h.cols
    t = min(t, n)
    total = sum(comb(n, w) for w in range(t + 1))
    if total > max_candidates:
        raise OracleTooLarge(
            f"{total} candidate words exceed the enumeration cap {max_candidates}"
        )
    if s.is_zero():
        return BitVector(n, 0)
    cols = h.column_ints()
    target = s.bits
    for w in range(1, t + 1):
        # combinations over mirrored indices enumerate weight-w vectors in
        # ascending lexicographic (v_0-first) order
        for combo in combinations(range(n), w):
            acc = 0
            for j in combo:
                acc ^= cols[n - 1 - j]
            if acc == target:
                return BitVector.from_indices(n, [n - 1 - j for j in combo])
    return None
