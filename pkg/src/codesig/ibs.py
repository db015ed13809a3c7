"""Identity-based identification from a CFS key extraction (CGG).

A key generation center holding a Niederreiter trapdoor turns an identity
string into a low-weight secret: it runs the CFS signing loop on the
identity, yielding a counter j and a word s with H s^T = h(h(y)|j).  The
holder then authenticates with Stern's protocol against the syndrome that
any verifier can recompute from (y, j); no certificate is needed.

Extraction only guarantees weight(s) <= t, so a credential carries its
exact weight w, the protocol checks weight(sigma(s)) = w, and w is bound
into the commitment hashes (it is part of every commitment preimage), which
stops a prover from re-declaring the weight after committing.  Verifiers
still require w <= t: anything looser would make the underlying syndrome
problem easy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BitVector
from .cfs import CfsSignature, cfs_sign
from .errors import ParameterInvalid
from .goppa import NiederreiterKeyPair, NiederreiterPublicKey
from .hashing import counter_hash
from .rng import Rng
from .stern import (
    SternKeyPair,
    SternPublicKey,
    SternTranscript,
    stern_identify,
    stern_round,
)


@dataclass(frozen=True)
class IbsCredential:
    identity: bytes
    counter: int
    s: BitVector
    m: int
    t: int

    @property
    def weight(self) -> int:
        return self.s.weight()


def kgc_extract(
    kgc: NiederreiterKeyPair,
    identity: bytes,
    mode: str = "random",
    rng: Rng | None = None,
    budget: int | None = None,
) -> IbsCredential:
    """Run the CFS loop on the identity; the signature IS the credential."""
    sig: CfsSignature = cfs_sign(kgc, identity, mode=mode, rng=rng, budget=budget)
    return IbsCredential(identity, sig.counter, sig.error, sig.m, sig.t)


def credential_syndrome(pub: NiederreiterPublicKey, identity: bytes, counter: int) -> BitVector:
    """h(h(y)|j): the public syndrome a verifier derives on its own."""
    return counter_hash(identity, counter, pub.syndrome_bits)


def credential_valid(pub: NiederreiterPublicKey, cred: IbsCredential) -> bool:
    if cred.weight > pub.t or cred.s.n != pub.n:
        return False
    return pub.h.mul_vec(cred.s) == credential_syndrome(pub, cred.identity, cred.counter)


def stern_instance(pub: NiederreiterPublicKey, cred: IbsCredential) -> SternKeyPair:
    """Stern key pair over the KGC matrix with the credential's weight bound."""
    if cred.weight > pub.t:
        raise ParameterInvalid("credential weight above the scheme bound")
    y = credential_syndrome(pub, cred.identity, cred.counter)
    return SternKeyPair(SternPublicKey(pub.h, y, cred.weight), cred.s)


def ibs_identify(
    cred: IbsCredential,
    kgc_pub: NiederreiterPublicKey,
    rounds: int,
    rng: Rng,
) -> bool:
    """Stern rounds against the recomputed syndrome; (2/3)^rounds soundness."""
    return stern_identify(stern_instance(kgc_pub, cred), rounds, rng)


def ibs_round(
    cred: IbsCredential,
    kgc_pub: NiederreiterPublicKey,
    rng: Rng,
    round_index: int = 0,
) -> tuple[SternTranscript, bool]:
    return stern_round(stern_instance(kgc_pub, cred), rng, round_index)
