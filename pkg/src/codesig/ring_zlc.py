"""ZLC ring signatures: a CFS trapdoor closes a hash ring over N members.

Each ring slot i contributes a weight-t word z_i; the chain

    x_{i+1} = h(N | h(M) | H_i z_i^T xor x_i)

must return to its start after one lap.  Everyone but the signer picks z_i
at random; the signer closes the ring by trapdoor-decoding the one syndrome
that makes the chain consistent, retrying with fresh randomness until the
syndrome is decodable (expected ~t! laps, as in CFS).  A verifier sees only
the glue value and the N error-word indices, so every slot looks alike.

Signature encoding: the glue (n-k bits) plus one index per slot.  Decoded
words can have weight below t, and a combinatorial rank alone does not say
which stratum it addresses, so each index ships as a 16-bit weight followed
by ceil(log2 C(n, w)) rank bits.  That is slightly wider than the
fixed-width tm + l*ceil(log2 C(n,t)) estimate, which costmodel reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import BitVector, cw_rank, cw_unrank, random_weight_vector, rank_bits
from .errors import (
    AttemptBudgetExceeded,
    ParameterInvalid,
    resolve_budget,
)
from .goppa import NiederreiterKeyPair, NiederreiterPublicKey, trapdoor_solve
from .hashing import digest, hash_to_bits, message_digest
from .rng import Rng

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class RingDescriptor:
    """Ordered CFS public keys; the canonical order is by serialized bytes.

    Canonical ordering keeps the member list itself from leaking who built
    the descriptor.  All members must share (m, t).
    """

    members: tuple[NiederreiterPublicKey, ...]

    def __init__(self, members, canonicalize: bool = True):
        members = list(members)
        if not members:
            raise ParameterInvalid("empty ring")
        m, t, n = members[0].m, members[0].t, members[0].n
        for pk in members:
            if (pk.m, pk.t, pk.n) != (m, t, n):
                raise ParameterInvalid("ring members must share parameters")
        if canonicalize:
            members.sort(key=lambda pk: pk.to_bytes())
        object.__setattr__(self, "members", tuple(members))

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def n(self) -> int:
        return self.members[0].n

    @property
    def t(self) -> int:
        return self.members[0].t

    @property
    def glue_bits(self) -> int:
        return self.members[0].syndrome_bits

    def digest(self) -> bytes:
        return digest(b"ring", *[pk.to_bytes() for pk in self.members])

    def index_of(self, pk: NiederreiterPublicKey) -> int:
        for i, member in enumerate(self.members):
            if member == pk:
                return i
        raise ParameterInvalid("public key not in the ring")


@dataclass(frozen=True)
class RingSignature:
    glue: BitVector  # x_0, n-k bits
    words: tuple[BitVector, ...]  # z_i per slot, weight <= t
    attempts: int = field(compare=False, default=0)

    def bit_length(self, n: int) -> int:
        """Exact packed size: glue + per-slot (16-bit weight + rank bits)."""
        return self.glue.n + sum(16 + rank_bits(n, z.weight()) for z in self.words)


class VerifyCounters:
    """Tallies of the verification cost model (column ops and hash calls)."""

    def __init__(self):
        self.column_ops = 0
        self.hash_calls = 0


def _chain_hash(ring_size: int, mdigest: bytes, vec: BitVector) -> BitVector:
    data = ring_size.to_bytes(4, "big") + mdigest + vec.to_bytes()
    return hash_to_bits(b"zlcring" + data, vec.n)


def zlc_sign(
    ring: RingDescriptor,
    signer: NiederreiterKeyPair,
    message: bytes,
    rng: Rng,
    budget: int | None = None,
) -> RingSignature:
    """Close the ring at the signer's slot; retries are full resamples."""
    r = ring.index_of(signer.public)
    n, t, nk = ring.n, ring.t, ring.glue_bits
    mdigest = message_digest(message)
    cap = resolve_budget(budget, DEFAULT_BUDGET)
    for attempt in range(1, cap + 1):
        xbar = BitVector(nk, rng.randbits(nk))
        xs: dict[int, BitVector] = {}
        words: dict[int, BitVector] = {}
        xs[(r + 1) % ring.size] = _chain_hash(ring.size, mdigest, xbar)
        for step in range(1, ring.size):
            i = (r + step) % ring.size
            z = random_weight_vector(n, t, rng)
            words[i] = z
            syn = ring.members[i].h.mul_vec(z)
            xs[(i + 1) % ring.size] = _chain_hash(ring.size, mdigest, syn ^ xs[i])
        z_r = trapdoor_solve(signer, xs[r] ^ xbar)
        if z_r is None or z_r.weight() != t:
            # exact weight keeps the signer's slot indistinguishable from the
            # random slots (decoded words of weight < t would mark it)
            continue
        words[r] = z_r
        return RingSignature(
            glue=xs[0],
            words=tuple(words[i] for i in range(ring.size)),
            attempts=attempt,
        )
    raise AttemptBudgetExceeded(f"ring did not close within {cap} attempts")


def zlc_verify(
    ring: RingDescriptor,
    message: bytes,
    sig: RingSignature,
    counters: VerifyCounters | None = None,
) -> bool:
    """Iterate the chain from the glue; accept iff it returns to the glue."""
    if not isinstance(sig, RingSignature) or len(sig.words) != ring.size:
        return False
    if sig.glue.n != ring.glue_bits:
        return False
    mdigest = message_digest(message)
    if counters is not None:
        counters.hash_calls += 1  # h(M)
    x = sig.glue
    for i, z in enumerate(sig.words):
        if z.n != ring.n or z.weight() > ring.t:
            return False
        # syndrome of a weight-w word: w column accesses + XORs
        cols = ring.members[i].h.column_ints()
        acc = 0
        for j in z.support():
            acc ^= cols[j]
            if counters is not None:
                counters.column_ops += 1
        x = _chain_hash(ring.size, mdigest, BitVector(ring.glue_bits, acc) ^ x)
        if counters is not None:
            counters.hash_calls += 1
    return x == sig.glue


def encode_word_index(n: int, z: BitVector) -> tuple[int, int]:
    """(weight, rank) pair addressing z inside its weight stratum."""
    return z.weight(), cw_rank(z)


def decode_word_index(n: int, w: int, rank: int) -> BitVector:
    return cw_unrank(n, w, rank)
