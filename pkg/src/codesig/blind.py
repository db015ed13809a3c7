"""Overbeck-style blind signatures on a permuted supercode.

Instead of blinding the message, the user blinds the signer's code: stack L
random rows R = K R_0 under the public code's generator G, permute the
columns, and derive a parity check H_b of the widened code.  The user solves
H_b x^T = h(M|H_b), un-permutes, and hands the signer only the syndrome
s = H (x Pi^{-1})^T.  A trapdoor preimage sigma of s differs from x Pi^{-1}
by a codeword, so sigma Pi lands in the right H_b coset and the verifier can
check everything against the blinded code alone:

    weight(sigma Pi) <= t  and  H_b (tau xor sigma Pi)^T = 0

for any tau solving the same system.  What ties H_b back to the signer's key
is an attestation that the blinded code is a permuted supercode of the
public one; a real zero-knowledge PKP proof is out of scope, so the toolkit
defines the attestation interface and ships a digest-binding stub that is
explicitly NOT zero knowledge.

The signer sees one syndrome per attempt; only a fraction C(n,t)/2^(mt) of
syndromes decode to an exact weight-t word, so a signature costs an expected
2^(mt)/C(n,t) blinding rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Protocol

from .algebra import (
    BitMatrix,
    BitVector,
    Permutation,
    random_invertible,
    random_permutation,
)
from .errors import (
    AttemptBudgetExceeded,
    ParameterInvalid,
    resolve_budget,
)
from .goppa import NiederreiterKeyPair, NiederreiterPublicKey, trapdoor_solve
from .hashing import digest, hash_to_bits, message_digest
from .rng import Rng

DEFAULT_BUDGET = 10**5
SEED_BYTES = 16


class PkpAttestation(Protocol):
    """Attestation that one code is an isometric (permuted) subcode of another.

    verify() receives the two parity-check matrices the verifier rebuilt and
    must accept only if the attestation was created for exactly that pair.
    """

    type_tag: int

    def verify(self, h_b: BitMatrix, h_0: BitMatrix) -> bool: ...

    def to_bytes(self) -> bytes: ...


@dataclass(frozen=True)
class DigestBindingAttestation:
    """Stub attestation: binds the (H_b, H_0) pair by digest.

    NOT zero knowledge and not a proof of the subcode relation; it only
    pins which matrices the unblinder committed to, so the surrounding
    protocol can be exercised end to end.  A real PKP zero-knowledge proof
    can be slotted in behind the same interface.
    """

    pair_digest: bytes
    disclosed: bool = True  # marks the stub as information-revealing

    type_tag = 1

    @classmethod
    def create(cls, h_b: BitMatrix, h_0: BitMatrix) -> "DigestBindingAttestation":
        return cls(digest(b"pkpstub", h_b.to_bytes(), h_0.to_bytes()))

    def verify(self, h_b: BitMatrix, h_0: BitMatrix) -> bool:
        return self.pair_digest == digest(b"pkpstub", h_b.to_bytes(), h_0.to_bytes())

    def to_bytes(self) -> bytes:
        return bytes([self.type_tag, 1 if self.disclosed else 0]) + self.pair_digest

    @classmethod
    def from_bytes(cls, data: bytes) -> "DigestBindingAttestation":
        if len(data) != 34 or data[0] != cls.type_tag:
            raise ParameterInvalid("bad attestation encoding")
        return cls(data[2:], bool(data[1]))


@dataclass(frozen=True)
class BlindingState:
    """User-side secret state between blinding and unblinding."""

    seed: bytes
    r0: BitMatrix  # p x n, derived from seed
    kmat: BitMatrix  # L x p, full rank
    perm: Permutation  # the column blinding Pi
    g_b: BitMatrix
    h_b: BitMatrix
    s: BitVector  # the syndrome handed to the signer
    message: bytes
    public: NiederreiterPublicKey


@dataclass(frozen=True)
class BlindSignature:
    seed: bytes
    h_b: BitMatrix
    sigma_p: BitVector  # sigma Pi, weight t
    attestation: DigestBindingAttestation
    attempts: int = field(compare=False, default=0)


def expand_seed_matrix(seed: bytes, rows: int, cols: int) -> BitMatrix:
    """Public p x n matrix R_0 derived from a short seed (hash expansion)."""
    return BitMatrix(
        rows,
        cols,
        [
            hash_to_bits(b"blindR0" + seed + i.to_bytes(4, "big"), cols).bits
            for i in range(rows)
        ],
    )


def _blind_target(message: bytes, h_b: BitMatrix) -> BitVector:
    return hash_to_bits(
        b"blindtgt" + message_digest(message) + h_b.to_bytes(), h_b.rows
    )


def blind(
    pub: NiederreiterPublicKey,
    message: bytes,
    p: int,
    subcode_dim: int,
    rng: Rng,
) -> tuple[BitVector, BlindingState]:
    """One blinding pass: build the blinded code and the signer's syndrome.

    subcode_dim is L, the number of independent extra rows mixed under the
    public code; it must stay below the syndrome length mt for H_b to be
    nonempty, and p >= L so K can have full rank.
    """
    mt = pub.syndrome_bits
    if not 0 < subcode_dim < mt:
        raise ParameterInvalid(f"need 0 < L < mt, got L={subcode_dim}, mt={mt}")
    if p < subcode_dim:
        raise ParameterInvalid("p must be >= L for a full-rank K")
    n = pub.n
    gen = pub.h.null_space()  # generator of the public code, k x n
    while True:
        seed = rng.bytes(SEED_BYTES)
        r0 = expand_seed_matrix(seed, p, n)
        kmat = _random_full_rank(subcode_dim, p, rng)
        rmat = kmat.matmul(r0)
        perm = random_permutation(n, rng)
        g_b = gen.stack(rmat).permute_cols(perm)
        if g_b.rank() < gen.rows + subcode_dim:
            continue  # extra rows fell into the code; fresh seed
        h_b = g_b.null_space()
        target = _blind_target(message, h_b)
        x = h_b.solve(target)
        if x is None:
            continue  # cannot happen with a full-rank kernel basis; retry anyway
        # blind the particular solution inside its coset so the signer's
        # syndrome carries no trace of the elimination order
        mask_bits = rng.randbits(g_b.rows)
        x = x ^ g_b.left_mul(BitVector(g_b.rows, mask_bits))
        s = pub.h.mul_vec(x.permute(perm.inverse()))
        state = BlindingState(
            seed, r0, kmat, perm, g_b, h_b, s, message, pub
        )
        return s, state


def _random_full_rank(rows: int, cols: int, rng: Rng) -> BitMatrix:
    while True:
        m = BitMatrix.random(rows, cols, rng)
        if m.rank() == rows:
            return m


def blind_sign(kp: NiederreiterKeyPair, s: BitVector) -> BitVector | None:
    """Signer role: trapdoor preimage of the blind syndrome, or None.

    A None only tells the user to re-blind; nothing else leaks.
    """
    if s.n != kp.public.syndrome_bits:
        raise ParameterInvalid("syndrome length mismatch")
    return trapdoor_solve(kp, s)


def unblind(state: BlindingState, sigma: BitVector) -> BlindSignature | None:
    """Check the signer's word, permute it into the blinded code, attest."""
    if sigma.n != state.public.n:
        return None
    if sigma.weight() != state.public.t:
        return None
    if state.public.h.mul_vec(sigma) != state.s:
        return None
    h_0 = state.public.h.stack(state.r0)
    return BlindSignature(
        seed=state.seed,
        h_b=state.h_b,
        sigma_p=sigma.permute(state.perm),
        attestation=DigestBindingAttestation.create(state.h_b, h_0),
    )


def blind_verify(
    pub: NiederreiterPublicKey,
    message: bytes,
    sig: BlindSignature,
    p: int,
) -> bool:
    """Rebuild R_0 from the seed, re-solve the target, check the coset."""
    if not isinstance(sig, BlindSignature):
        return False
    if sig.sigma_p.n != pub.n or sig.sigma_p.weight() > pub.t:
        return False
    if sig.h_b.cols != pub.n or not 0 < (pub.syndrome_bits - sig.h_b.rows) < pub.syndrome_bits:
        return False
    r0 = expand_seed_matrix(sig.seed, p, pub.n)
    h_0 = pub.h.stack(r0)
    if not sig.attestation.verify(sig.h_b, h_0):
        return False
    tau = sig.h_b.solve(_blind_target(message, sig.h_b))
    if tau is None:
        return False
    return sig.h_b.mul_vec(tau ^ sig.sigma_p).is_zero()


def blind_sign_flow(
    user_pub: NiederreiterPublicKey,
    signer: NiederreiterKeyPair,
    message: bytes,
    p: int,
    subcode_dim: int,
    rng: Rng,
    budget: int | None = None,
) -> BlindSignature:
    """Full blind -> sign -> unblind loop; expected 2^(mt)/C(n,t) passes."""
    cap = resolve_budget(budget, DEFAULT_BUDGET)
    for attempt in range(1, cap + 1):
        s, state = blind(user_pub, message, p, subcode_dim, rng)
        sigma = blind_sign(signer, s)
        if sigma is None:
            continue
        out = unblind(state, sigma)
        if out is not None:
            return BlindSignature(
                out.seed, out.h_b, out.sigma_p, out.attestation, attempts=attempt
            )
    raise AttemptBudgetExceeded(f"no decodable blind syndrome in {cap} passes")


def expected_blind_attempts(m: int, t: int) -> float:
    """2^(mt) / C(2^m, t), the published re-blinding cost."""
    return (1 << (m * t)) / comb(1 << m, t)
