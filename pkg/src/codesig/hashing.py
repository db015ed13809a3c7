"""Hash plumbing shared by all schemes.

SHA-256 everywhere, with two derived primitives:

* fixed-width bit extraction (counter-mode expansion, LSB-first bytes), used
  to map messages onto syndrome spaces of exactly n-k bits;
* an unbiased base-3 stream for Fiat-Shamir challenges (bytes >= 243 are
  rejected; an accepted byte yields five balanced trits).
"""

from __future__ import annotations

import hashlib
from typing import Iterator

from .algebra import BitVector

DIGEST_BYTES = 32


def digest(*parts: bytes) -> bytes:
    h = hashlib.sha256()
    for p in parts:
        h.update(p)
    return h.digest()


def _expand(data: bytes, nbytes: int) -> bytes:
    out = bytearray()
    ctr = 0
    while len(out) < nbytes:
        out += hashlib.sha256(data + ctr.to_bytes(4, "big")).digest()
        ctr += 1
    return bytes(out[:nbytes])


def hash_to_bits(data: bytes, nbits: int) -> BitVector:
    """First nbits of the counter-mode expansion of data (LSB-first)."""
    raw = _expand(data, (nbits + 7) // 8)
    bits = int.from_bytes(raw, "little") & ((1 << nbits) - 1)
    return BitVector(nbits, bits)


def hash_to_int(data: bytes, nbits: int) -> int:
    return hash_to_bits(data, nbits).bits


def message_digest(message: bytes) -> bytes:
    return hashlib.sha256(message).digest()


def counter_hash(message: bytes, counter: int, nbits: int) -> BitVector:
    """h(h(M) || i) truncated to nbits; the CFS signing target.

    The inner hash is the full 32-byte digest; the counter is appended as
    8 bytes big-endian so independent implementations agree byte-for-byte.
    """
    return hash_to_bits(message_digest(message) + counter.to_bytes(8, "big"), nbits)


def trit_stream(seed: bytes) -> Iterator[int]:
    """Endless unbiased challenges in {0,1,2} derived from seed."""
    ctr = 0
    while True:
        block = hashlib.sha256(seed + ctr.to_bytes(4, "big")).digest()
        ctr += 1
        for byte in block:
            if byte >= 243:  # 243 = 3^5; larger values would bias the trits
                continue
            for _ in range(5):
                yield byte % 3
                byte //= 3


def trits(seed: bytes, count: int) -> list[int]:
    stream = trit_stream(seed)
    return [next(stream) for _ in range(count)]
