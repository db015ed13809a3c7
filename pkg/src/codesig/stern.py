"""Stern's 3-pass zero-knowledge identification and its Fiat-Shamir signature.

The prover knows a low-weight s with H s^T = y and convinces a verifier by
committing to a random mask u and permutation sigma:

    c1 = h(sigma, H u^T),  c2 = h(sigma(u)),  c3 = h(sigma(u + s)).

The verifier picks b in {0,1,2}; the response reveals exactly one of
(u, sigma), (u + s, sigma) or (sigma(u), sigma(s)), and the verifier
recomputes the two commitments that do not require s.  An adversary who can
answer all three challenges knows s, so the per-round cheating bound is 2/3
and r rounds give soundness (2/3)^r.

Commitment preimages carry a one-byte slot tag and the public weight bound,
which blocks cross-slot replays and lets the identity-based variant bind a
credential weight w < t into the transcript.

The key pair here has no trapdoor at all: H is a bare random matrix.  A
double-circulant variant from the literature compresses the public key to
347 bits (private 694); the circulant structure itself is out of scope, but
the sizes are reported by costmodel.scheme_param_advisor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import (
    BitMatrix,
    BitVector,
    Permutation,
    random_bitvector,
    random_permutation,
    random_weight_vector,
    solve_linear,
)
from .errors import ParameterInvalid
from .hashing import digest, message_digest, trits
from .rng import Rng

_TAG_C1, _TAG_C2, _TAG_C3 = b"\x01", b"\x02", b"\x03"


@dataclass(frozen=True)
class SternPublicKey:
    h: BitMatrix
    y: BitVector
    weight: int

    @property
    def n(self) -> int:
        return self.h.cols


@dataclass(frozen=True)
class SternKeyPair:
    public: SternPublicKey
    s: BitVector


def stern_keygen(n: int, k: int, t: int, rng: Rng) -> SternKeyPair:
    """Random (n-k) x n parity check, uniform weight-t secret, y = H s^T."""
    if not (0 < k < n and 0 < t <= n):
        raise ParameterInvalid(f"need 0 < k < n and 0 < t <= n, got {(n, k, t)}")
    h = BitMatrix.random(n - k, n, rng)
    s = random_weight_vector(n, t, rng)
    return SternKeyPair(SternPublicKey(h, h.mul_vec(s), t), s)


# -- one round ---------------------------------------------------------------


@dataclass(frozen=True)
class Commitments:
    c1: bytes
    c2: bytes
    c3: bytes

    def concat(self) -> bytes:
        return self.c1 + self.c2 + self.c3


@dataclass(frozen=True)
class ProverState:
    key: SternKeyPair
    u: BitVector
    sigma: Permutation


@dataclass(frozen=True)
class RevealClear:
    """b=0 response: the mask and the permutation."""

    u: BitVector
    sigma: Permutation


@dataclass(frozen=True)
class RevealMasked:
    """b=1 response: u + s and the permutation."""

    v: BitVector
    sigma: Permutation


@dataclass(frozen=True)
class RevealPermuted:
    """b=2 response: sigma(u) and sigma(s); s appears only permuted."""

    pu: BitVector
    ps: BitVector


Response = RevealClear | RevealMasked | RevealPermuted


def _c1(weight: int, sigma: Permutation, syndrome: BitVector, y: BitVector) -> bytes:
    # binds the public syndrome, so a prover cannot re-target the instance
    # (an identity-based prover claiming the wrong counter fails b=0 too)
    return digest(
        _TAG_C1,
        weight.to_bytes(2, "big"),
        sigma.to_bytes(),
        syndrome.to_bytes(),
        y.to_bytes(),
    )


def _c2(weight: int, vec: BitVector) -> bytes:
    return digest(_TAG_C2, weight.to_bytes(2, "big"), vec.to_bytes())


def _c3(weight: int, vec: BitVector) -> bytes:
    return digest(_TAG_C3, weight.to_bytes(2, "big"), vec.to_bytes())


def commit(key: SternKeyPair, rng: Rng) -> tuple[ProverState, Commitments]:
    pub = key.public
    u = random_bitvector(pub.n, rng)
    sigma = random_permutation(pub.n, rng)
    coms = Commitments(
        _c1(pub.weight, sigma, pub.h.mul_vec(u), pub.y),
        _c2(pub.weight, u.permute(sigma)),
        _c3(pub.weight, (u ^ key.s).permute(sigma)),
    )
    return ProverState(key, u, sigma), coms


def respond(state: ProverState, b: int) -> Response:
    if b == 0:
        return RevealClear(state.u, state.sigma)
    if b == 1:
        return RevealMasked(state.u ^ state.key.s, state.sigma)
    if b == 2:
        return RevealPermuted(
            state.u.permute(state.sigma), state.key.s.permute(state.sigma)
        )
    raise ParameterInvalid(f"challenge {b} not in {{0,1,2}}")


def check(pub: SternPublicKey, coms: Commitments, b: int, resp: Response) -> bool:
    """Recompute the two commitments the challenge opens; never touches s."""
    w = pub.weight
    if b == 0:
        if not isinstance(resp, RevealClear):
            return False
        return coms.c1 == _c1(
            w, resp.sigma, pub.h.mul_vec(resp.u), pub.y
        ) and coms.c2 == _c2(w, resp.u.permute(resp.sigma))
    if b == 1:
        if not isinstance(resp, RevealMasked):
            return False
        # H u^T = H (u+s)^T + y, so c1 is checkable without u itself
        syn = pub.h.mul_vec(resp.v) ^ pub.y
        return coms.c1 == _c1(w, resp.sigma, syn, pub.y) and coms.c3 == _c3(
            w, resp.v.permute(resp.sigma)
        )
    if b == 2:
        if not isinstance(resp, RevealPermuted):
            return False
        return (
            coms.c2 == _c2(w, resp.pu)
            and coms.c3 == _c3(w, resp.pu ^ resp.ps)
            and resp.ps.weight() == w
        )
    return False


@dataclass(frozen=True)
class SternTranscript:
    round_index: int
    commitments: Commitments
    challenge: int
    response: Response
    accepted: bool


def stern_round(key: SternKeyPair, rng: Rng, round_index: int = 0) -> tuple[SternTranscript, bool]:
    """One honest commit/challenge/response/verify pass."""
    state, coms = commit(key, rng)
    b = rng.randrange(3)
    resp = respond(state, b)
    ok = check(key.public, coms, b, resp)
    return SternTranscript(round_index, coms, b, resp, ok), ok


def stern_identify(key: SternKeyPair, rounds: int, rng: Rng) -> bool:
    """Accept iff all rounds accept; impersonation odds <= (2/3)^rounds."""
    if rounds < 1:
        raise ParameterInvalid("rounds must be >= 1")
    return all(stern_round(key, rng, i)[1] for i in range(rounds))


def rounds_for_soundness(bits: int) -> int:
    """Smallest r with (2/3)^r <= 2^-bits."""
    r = math.ceil(bits / math.log2(1.5))
    while (2 / 3) ** r > 2 ** -bits:
        r += 1
    while r > 1 and (2 / 3) ** (r - 1) <= 2 ** -bits:
        r -= 1
    return r


# -- Fiat-Shamir signature ---------------------------------------------------


@dataclass(frozen=True)
class FsRound:
    commitments: Commitments
    response: Response


@dataclass(frozen=True)
class SternFsSignature:
    rounds: tuple[FsRound, ...]


def _challenge_seed(pub: SternPublicKey, message: bytes, all_coms: list[Commitments]) -> bytes:
    return digest(
        b"sternfs",
        message_digest(message),
        pub.y.to_bytes(),
        *[c.concat() for c in all_coms],
    )


def fs_challenges(pub: SternPublicKey, message: bytes, all_coms: list[Commitments]) -> list[int]:
    """Base-3 digits of h(M || all commitments), bias-free."""
    return trits(_challenge_seed(pub, message, all_coms), len(all_coms))


def stern_fs_sign(key: SternKeyPair, message: bytes, rounds: int, rng: Rng) -> SternFsSignature:
    if rounds < 1:
        raise ParameterInvalid("rounds must be >= 1")
    states, coms = [], []
    for _ in range(rounds):
        st, cm = commit(key, rng)
        states.append(st)
        coms.append(cm)
    challenges = fs_challenges(key.public, message, coms)
    return SternFsSignature(
        tuple(FsRound(cm, respond(st, b)) for st, cm, b in zip(states, coms, challenges))
    )


def stern_fs_verify(pub: SternPublicKey, message: bytes, sig: SternFsSignature) -> bool:
    if not isinstance(sig, SternFsSignature) or not sig.rounds:
        return False
    try:
        challenges = fs_challenges(pub, message, [r.commitments for r in sig.rounds])
        return all(
            check(pub, r.commitments, b, r.response)
            for r, b in zip(sig.rounds, challenges)
        )
    except Exception:
        return False


# -- the optimal cheating prover ----------------------------------------------


class OptimalCheater:
    """Best known impersonator: prepares for two of the three challenges.

    Receives only public data; the three strategies cover challenge pairs
    {0,1} (fake secret with the right syndrome, wrong weight), {0,2} (right
    weight, wrong syndrome) and {1,2} (commit c1 against the shifted
    syndrome).  Per-round acceptance is exactly 2/3.
    """

    PAIRS = ((0, 1), (0, 2), (1, 2))

    def __init__(self, pub: SternPublicKey, rng: Rng):
        self.pub = pub
        self.rng = rng
        # weight-ignoring solution of H x^T = y; exists for honest keys
        self._flat = solve_linear(pub.h, pub.y)
        if self._flat is None:
            raise ParameterInvalid("public syndrome outside the column space")

    def commit(self, strategy: int | None = None) -> tuple[dict, Commitments]:
        pub, rng = self.pub, self.rng
        if strategy is None:
            strategy = rng.randrange(3)
        u = random_bitvector(pub.n, rng)
        sigma = random_permutation(pub.n, rng)
        w = pub.weight
        if strategy == 0:  # prepared for {0,1}: fake = any solution, bad weight
            fake = self._flat
            coms = Commitments(
                _c1(w, sigma, pub.h.mul_vec(u), pub.y),
                _c2(w, u.permute(sigma)),
                _c3(w, (u ^ fake).permute(sigma)),
            )
        elif strategy == 1:  # prepared for {0,2}: good weight, bad syndrome
            fake = random_weight_vector(pub.n, w, self.rng)
            coms = Commitments(
                _c1(w, sigma, pub.h.mul_vec(u), pub.y),
                _c2(w, u.permute(sigma)),
                _c3(w, (u ^ fake).permute(sigma)),
            )
        else:  # prepared for {1,2}: c1 cheated against the shifted syndrome
            fake = random_weight_vector(pub.n, w, self.rng)
            coms = Commitments(
                _c1(w, sigma, pub.h.mul_vec(u ^ fake) ^ pub.y, pub.y),
                _c2(w, u.permute(sigma)),
                _c3(w, (u ^ fake).permute(sigma)),
            )
        state = {"u": u, "sigma": sigma, "fake": fake, "strategy": strategy}
        return state, coms

    def respond(self, state: dict, b: int) -> Response:
        u, sigma, fake = state["u"], state["sigma"], state["fake"]
        if b == 0:
            return RevealClear(u, sigma)
        if b == 1:
            return RevealMasked(u ^ fake, sigma)
        return RevealPermuted(u.permute(sigma), fake.permute(sigma))

    def round(self, strategy: int | None = None) -> bool:
        state, coms = self.commit(strategy)
        b = self.rng.randrange(3)
        return check(self.pub, coms, b, self.respond(state, b))
