"""Threshold ring signatures: the ACG and DV constructions.

ACG generalizes Stern's protocol to l-out-of-N: every member runs a Stern
round against their own H_i (secrets satisfy H_i s_i^T = 0, a null
syndrome, so masked responses stay checkable), a leader pads the N - l
missing members with s_i = 0, shuffles the per-member commitments with a
block permutation Pi, and hashes them into three master commitments.  The
b=2 arm checks total revealed weight l*t and per-block weight t or 0, which
is what pins the threshold.  Per-round cheating probability stays 2/3.

DV combines CFS trapdoors with polynomial secret sharing over GF(2^mt):
a degree N-l polynomial f is interpolated through the ring digest at 0 and
through keyed-permutation images of the non-signers' syndromes; each signer
then trapdoor-decodes their own evaluation point into a weight-<=t word,
retrying a fresh nonce r_i until the syndrome decodes.  The keyed
permutation family E_{k,i} is a 4-round Feistel over tm-bit strings with
hash-derived round functions; signers use its inverse so that the published
verification equation f(i) = E_{k,i}(y_i) holds for every slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    BitMatrix,
    BitVector,
    Gf2mField,
    Permutation,
    PolyRing,
    block_diagonal,
    degree,
    random_bitvector,
    random_permutation,
    random_weight_vector,
    random_weight_at_most,
    solve_linear,
)
from .errors import (
    AttemptBudgetExceeded,
    ParameterInvalid,
    resolve_budget,
)
from .goppa import NiederreiterKeyPair, NiederreiterPublicKey, trapdoor_solve
from .hashing import digest, hash_to_bits, hash_to_int, message_digest, trits
from .rng import Rng
from .stern import _c1, _c2, _c3

# =========================================================================
# ACG threshold ring identification
# =========================================================================


@dataclass(frozen=True)
class AcgRing:
    """Per-member parity checks; the ring matrix is their block diagonal."""

    members: tuple[BitMatrix, ...]
    n: int
    k: int
    t: int

    @property
    def size(self) -> int:
        return len(self.members)

    def ring_matrix(self) -> BitMatrix:
        return block_diagonal(list(self.members))


def acg_keygen(n: int, k: int, t: int, ring_size: int, rng: Rng) -> tuple[AcgRing, list[BitVector]]:
    """Sample each secret first, then a parity check vanishing on it.

    Rows are drawn uniformly from the hyperplane orthogonal to s_i
    (rejection, acceptance 1/2 per row), so H_i is uniform given H_i s_i^T = 0.
    """
    if not (0 < k < n and 0 < t <= n and ring_size >= 1):
        raise ParameterInvalid(f"bad ACG parameters {(n, k, t, ring_size)}")
    mats, secrets = [], []
    for _ in range(ring_size):
        s = random_weight_vector(n, t, rng)
        rows = []
        while len(rows) < n - k:
            cand = rng.randbits(n)
            if (cand & s.bits).bit_count() & 1:
                continue
            rows.append(cand)
        mats.append(BitMatrix(n - k, n, rows))
        secrets.append(s)
    return AcgRing(tuple(mats), n, k, t), secrets


@dataclass(frozen=True)
class AcgCommitments:
    c1: bytes
    c2: bytes
    c3: bytes

    def concat(self) -> bytes:
        return self.c1 + self.c2 + self.c3


@dataclass(frozen=True)
class AcgLeaderState:
    ring: AcgRing
    threshold: int
    zs: tuple[BitVector, ...]
    sigmas: tuple[Permutation, ...]
    secrets: tuple[BitVector, ...]  # zero vectors in the padded slots
    pi: Permutation  # block permutation on N slots


@dataclass(frozen=True)
class AcgRevealClear:
    """b=0: all masks, the block permutation and the per-member sigmas."""

    zs: tuple[BitVector, ...]
    pi: Permutation
    sigmas: tuple[Permutation, ...]


@dataclass(frozen=True)
class AcgRevealMasked:
    """b=1: all z_i + s_i, the block permutation and the sigmas."""

    xs: tuple[BitVector, ...]
    pi: Permutation
    sigmas: tuple[Permutation, ...]


@dataclass(frozen=True)
class AcgRevealPermuted:
    """b=2: blocks of Omega(z) and Omega(s) in post-permutation order."""

    pz: tuple[BitVector, ...]
    ps: tuple[BitVector, ...]


AcgResponse = AcgRevealClear | AcgRevealMasked | AcgRevealPermuted


def _master(tag: bytes, ring: AcgRing, threshold: int, digests: list[bytes]) -> bytes:
    return digest(
        tag,
        ring.size.to_bytes(4, "big"),
        threshold.to_bytes(2, "big"),
        ring.t.to_bytes(2, "big"),
        *digests,
    )


def acg_commit(
    ring: AcgRing,
    signer_secrets: dict[int, BitVector],
    threshold: int,
    rng: Rng,
) -> tuple[AcgLeaderState, AcgCommitments]:
    """Leader pass: real signers commit, missing slots are padded with s = 0."""
    if not 1 <= threshold <= ring.size:
        raise ParameterInvalid("threshold outside [1, N]")
    for i, s in signer_secrets.items():
        if not ring.members[i].mul_vec(s).is_zero():
            raise ParameterInvalid(f"secret {i} is not in the null space")
    zero = BitVector(ring.n, 0)
    null_syn = BitVector(ring.n - ring.k, 0)  # public syndromes are null here
    zs, sigmas, secrets = [], [], []
    c1s, c2s, c3s = [], [], []
    for i in range(ring.size):
        s = signer_secrets.get(i, zero)
        z = random_bitvector(ring.n, rng)
        sigma = random_permutation(ring.n, rng)
        c1s.append(_c1(ring.t, sigma, ring.members[i].mul_vec(z), null_syn))
        c2s.append(_c2(ring.t, z.permute(sigma)))
        c3s.append(_c3(ring.t, (z ^ s).permute(sigma)))
        zs.append(z)
        sigmas.append(sigma)
        secrets.append(s)
    pi = random_permutation(ring.size, rng)
    coms = AcgCommitments(
        _master(b"\x11", ring, threshold, pi.apply_seq(c1s)),
        _master(b"\x12", ring, threshold, pi.apply_seq(c2s)),
        _master(b"\x13", ring, threshold, pi.apply_seq(c3s)),
    )
    state = AcgLeaderState(
        ring, threshold, tuple(zs), tuple(sigmas), tuple(secrets), pi
    )
    return state, coms


def acg_respond(state: AcgLeaderState, b: int) -> AcgResponse:
    if b == 0:
        return AcgRevealClear(state.zs, state.pi, state.sigmas)
    if b == 1:
        xs = tuple(z ^ s for z, s in zip(state.zs, state.secrets))
        return AcgRevealMasked(xs, state.pi, state.sigmas)
    if b == 2:
        pz = state.pi.apply_seq(
            [z.permute(sg) for z, sg in zip(state.zs, state.sigmas)]
        )
        ps = state.pi.apply_seq(
            [s.permute(sg) for s, sg in zip(state.secrets, state.sigmas)]
        )
        return AcgRevealPermuted(tuple(pz), tuple(ps))
    raise ParameterInvalid(f"challenge {b} not in {{0,1,2}}")


def acg_check(
    ring: AcgRing, threshold: int, coms: AcgCommitments, b: int, resp: AcgResponse
) -> bool:
    n_members = ring.size
    if b == 0:
        if not isinstance(resp, AcgRevealClear) or len(resp.zs) != n_members:
            return False
        if resp.pi.size != n_members or len(resp.sigmas) != n_members:
            return False
        null_syn = BitVector(ring.n - ring.k, 0)
        c1s = [
            _c1(ring.t, sg, ring.members[i].mul_vec(z), null_syn)
            for i, (z, sg) in enumerate(zip(resp.zs, resp.sigmas))
        ]
        c2s = [
            _c2(ring.t, z.permute(sg)) for z, sg in zip(resp.zs, resp.sigmas)
        ]
        return coms.c1 == _master(
            b"\x11", ring, threshold, resp.pi.apply_seq(c1s)
        ) and coms.c2 == _master(b"\x12", ring, threshold, resp.pi.apply_seq(c2s))
    if b == 1:
        if not isinstance(resp, AcgRevealMasked) or len(resp.xs) != n_members:
            return False
        if resp.pi.size != n_members or len(resp.sigmas) != n_members:
            return False
        # null syndromes: H_i x_i^T = H_i z_i^T when H_i s_i^T = 0
        null_syn = BitVector(ring.n - ring.k, 0)
        c1s = [
            _c1(ring.t, sg, ring.members[i].mul_vec(x), null_syn)
            for i, (x, sg) in enumerate(zip(resp.xs, resp.sigmas))
        ]
        c3s = [
            _c3(ring.t, x.permute(sg)) for x, sg in zip(resp.xs, resp.sigmas)
        ]
        return coms.c1 == _master(
            b"\x11", ring, threshold, resp.pi.apply_seq(c1s)
        ) and coms.c3 == _master(b"\x13", ring, threshold, resp.pi.apply_seq(c3s))
    if b == 2:
        if not isinstance(resp, AcgRevealPermuted) or len(resp.pz) != n_members:
            return False
        if len(resp.ps) != n_members:
            return False
        c2s = [_c2(ring.t, blk) for blk in resp.pz]
        c3s = [_c3(ring.t, bz ^ bs) for bz, bs in zip(resp.pz, resp.ps)]
        if coms.c2 != _master(b"\x12", ring, threshold, c2s):
            return False
        if coms.c3 != _master(b"\x13", ring, threshold, c3s):
            return False
        weights = [bs.weight() for bs in resp.ps]
        if sum(weights) != threshold * ring.t:
            return False
        return all(w in (0, ring.t) for w in weights)
    return False


@dataclass(frozen=True)
class AcgTranscript:
    round_index: int
    commitments: AcgCommitments
    challenge: int
    response: AcgResponse
    accepted: bool


def acg_round(
    ring: AcgRing,
    signer_secrets: dict[int, BitVector],
    threshold: int,
    rng: Rng,
    round_index: int = 0,
) -> tuple[AcgTranscript, bool]:
    state, coms = acg_commit(ring, signer_secrets, threshold, rng)
    b = rng.randrange(3)
    resp = acg_respond(state, b)
    ok = acg_check(ring, threshold, coms, b, resp)
    return AcgTranscript(round_index, coms, b, resp, ok), ok


# -- Fiat-Shamir mode ---------------------------------------------------------


@dataclass(frozen=True)
class AcgFsRound:
    commitments: AcgCommitments
    response: AcgResponse


@dataclass(frozen=True)
class AcgFsSignature:
    threshold: int
    rounds: tuple[AcgFsRound, ...]


def _acg_seed(ring: AcgRing, threshold: int, message: bytes, coms: list[AcgCommitments]) -> bytes:
    return digest(
        b"acgfs",
        message_digest(message),
        ring.size.to_bytes(4, "big"),
        threshold.to_bytes(2, "big"),
        *[c.concat() for c in coms],
    )


def acg_fs_sign(
    ring: AcgRing,
    signer_secrets: dict[int, BitVector],
    threshold: int,
    message: bytes,
    rounds: int,
    rng: Rng,
) -> AcgFsSignature:
    if rounds < 1:
        raise ParameterInvalid("rounds must be >= 1")
    states, coms = [], []
    for _ in range(rounds):
        st, cm = acg_commit(ring, signer_secrets, threshold, rng)
        states.append(st)
        coms.append(cm)
    challenges = trits(_acg_seed(ring, threshold, message, coms), rounds)
    return AcgFsSignature(
        threshold,
        tuple(
            AcgFsRound(cm, acg_respond(st, b))
            for st, cm, b in zip(states, coms, challenges)
        ),
    )


def acg_fs_verify(ring: AcgRing, message: bytes, sig: AcgFsSignature) -> bool:
    if not isinstance(sig, AcgFsSignature) or not sig.rounds:
        return False
    try:
        coms = [r.commitments for r in sig.rounds]
        challenges = trits(_acg_seed(ring, sig.threshold, message, coms), len(coms))
        return all(
            acg_check(ring, sig.threshold, r.commitments, b, r.response)
            for r, b in zip(sig.rounds, challenges)
        )
    except Exception:
        return False


def acg_signature_bit_length(sig: AcgFsSignature, ring: AcgRing) -> int:
    """Exact packed size of the response payloads plus commitments."""
    total = 0
    for rnd in sig.rounds:
        total += 3 * 256
        resp = rnd.response
        if isinstance(resp, (AcgRevealClear, AcgRevealMasked)):
            vecs = resp.zs if isinstance(resp, AcgRevealClear) else resp.xs
            total += sum(v.n for v in vecs)
            total += 16 * ring.size  # block permutation entries
            total += sum(16 * sg.size for sg in resp.sigmas)
        else:
            total += sum(v.n for v in resp.pz) + sum(v.n for v in resp.ps)
    return total


class AcgCheater:
    """Ring-level two-of-three impersonator; sees only the public ring.

    Strategies mirror Stern's: all-zero secrets pass b in {0,1}; secrets of
    the right block weights but nonzero syndrome pass {0,2} or, with a
    shifted c1 commitment, {1,2}.
    """

    def __init__(self, ring: AcgRing, threshold: int, rng: Rng):
        self.ring = ring
        self.threshold = threshold
        self.rng = rng

    def _fake_secrets(self) -> list[BitVector]:
        ring, rng = self.ring, self.rng
        picks = set(rng.sample(range(ring.size), self.threshold))
        return [
            random_weight_vector(ring.n, ring.t, rng)
            if i in picks
            else BitVector(ring.n, 0)
            for i in range(ring.size)
        ]

    def round(self, strategy: int | None = None) -> bool:
        ring, rng = self.ring, self.rng
        if strategy is None:
            strategy = rng.randrange(3)
        zero = BitVector(ring.n, 0)
        if strategy == 0:
            secrets = [zero] * ring.size  # weight check will fail on b=2
        else:
            secrets = self._fake_secrets()  # syndrome checks fail on one arm
        zs = [random_bitvector(ring.n, rng) for _ in range(ring.size)]
        sigmas = [random_permutation(ring.n, rng) for _ in range(ring.size)]
        pi = random_permutation(ring.size, rng)
        shift = strategy == 2  # commit c1 against H(z + fake) to survive b=1
        null_syn = BitVector(ring.n - ring.k, 0)
        c1s = [
            _c1(
                ring.t,
                sg,
                ring.members[i].mul_vec(z ^ secrets[i] if shift else z),
                null_syn,
            )
            for i, (z, sg) in enumerate(zip(zs, sigmas))
        ]
        c2s = [_c2(ring.t, z.permute(sg)) for z, sg in zip(zs, sigmas)]
        c3s = [
            _c3(ring.t, (z ^ s).permute(sg))
            for z, s, sg in zip(zs, secrets, sigmas)
        ]
        coms = AcgCommitments(
            _master(b"\x11", ring, self.threshold, pi.apply_seq(c1s)),
            _master(b"\x12", ring, self.threshold, pi.apply_seq(c2s)),
            _master(b"\x13", ring, self.threshold, pi.apply_seq(c3s)),
        )
        state = AcgLeaderState(
            ring, self.threshold, tuple(zs), tuple(sigmas), tuple(secrets), pi
        )
        b = rng.randrange(3)
        return acg_check(ring, self.threshold, coms, b, acg_respond(state, b))


# =========================================================================
# DV threshold ring signature
# =========================================================================


def feistel_permute(key: bytes, index: int, value: int, nbits: int, inverse: bool = False) -> int:
    """Keyed permutation of nbits-bit integers (4 alternating Feistel steps).

    Each step XORs one half with a hash of the other, so the map is a
    bijection for any bit split; running the steps backwards inverts it.
    """
    if nbits < 2:
        raise ParameterInvalid("permutation domain needs >= 2 bits")
    lo_bits = nbits // 2
    hi_bits = nbits - lo_bits
    lo = value & ((1 << lo_bits) - 1)
    hi = value >> lo_bits
    steps = range(4) if not inverse else range(3, -1, -1)
    for j in steps:
        data = key + index.to_bytes(4, "big") + bytes([j])
        if j % 2 == 0:
            lo ^= hash_to_int(b"feistelL" + data + hi.to_bytes((hi_bits + 7) // 8, "big"), lo_bits)
        else:
            hi ^= hash_to_int(b"feistelH" + data + lo.to_bytes((lo_bits + 7) // 8, "big"), hi_bits)
    return (hi << lo_bits) | lo


@dataclass(frozen=True)
class DvSignature:
    """(N, x_1..x_N, r_1..r_N, f); deg(f) = N - l pins the threshold."""

    ring_size: int
    xs: tuple[BitVector, ...]
    rs: tuple[int, ...]
    poly: tuple[int, ...]  # coefficients in GF(2^mt), degree N - l
    attempts: int = field(compare=False, default=0)


def _ring_digest_point(pubs: list[NiederreiterPublicKey], nbits: int) -> int:
    return hash_to_int(digest(b"dvring", *[pk.to_bytes() for pk in pubs]), nbits)


def _nonce_hash(mdigest: bytes, r: int, nbits: int) -> BitVector:
    data = b"dvnonce" + mdigest + r.to_bytes((nbits + 7) // 8 + 8, "big")
    return hash_to_bits(data, nbits)


def dv_sign(
    pubs: list[NiederreiterPublicKey],
    signers: dict[int, NiederreiterKeyPair],
    message: bytes,
    rng: Rng,
    budget: int | None = None,
) -> DvSignature:
    """Interpolate the sharing polynomial, then trapdoor-close each signer slot.

    Slots are numbered 1..N as interpolation points; 0 is reserved for the
    ring digest.  Non-signers draw (x_i, r_i) at random; each signer retries
    fresh nonces until E^{-1}(f(i)) xor h(M|r_i) decodes.
    """
    n_members = len(pubs)
    if not signers:
        raise ParameterInvalid("need at least one signer")
    if not all(0 <= i < n_members for i in signers):
        raise ParameterInvalid("signer index outside the ring")
    m, t = pubs[0].m, pubs[0].t
    tm = t * m
    if n_members >= (1 << tm):
        raise ParameterInvalid("ring too large for the sharing field")
    fld = Gf2mField(tm)
    ring_poly = PolyRing(fld)
    threshold = len(signers)
    kbytes = message_digest(message)
    mdigest = kbytes
    v0 = _ring_digest_point(pubs, tm)
    others = [i for i in range(n_members) if i not in signers]
    cap = resolve_budget(budget, threshold * _factorial(t) * 20 + 100)
    spent = 0
    while True:
        xs: dict[int, BitVector] = {}
        rs: dict[int, int] = {}
        points = [(0, v0)]
        for i in others:
            xs[i] = random_weight_at_most(pubs[i].n, t, rng)
            rs[i] = 1 + rng.randrange(1 << tm)
            y = pubs[i].h.mul_vec(xs[i]) ^ _nonce_hash(mdigest, rs[i], tm)
            points.append((i + 1, feistel_permute(kbytes, i + 1, y.bits, tm)))
        f = ring_poly.interpolate(points)
        if degree(f) == n_members - threshold:
            break
        # leading coefficient vanished (odds ~2^-tm); resample the seeds
    for i in signers:
        kp = signers[i]
        fi = ring_poly.eval(f, i + 1)
        target_base = feistel_permute(kbytes, i + 1, fi, tm, inverse=True)
        found = None
        while spent < cap:
            spent += 1
            r_i = 1 + rng.randrange(1 << tm)
            syn = BitVector(tm, target_base) ^ _nonce_hash(mdigest, r_i, tm)
            x_i = trapdoor_solve(kp, syn)
            if x_i is not None:
                found = (x_i, r_i)
                break
        if found is None:
            raise AttemptBudgetExceeded(f"signer decoding exhausted {cap} attempts")
        xs[i], rs[i] = found
    return DvSignature(
        n_members,
        tuple(xs[i] for i in range(n_members)),
        tuple(rs[i] for i in range(n_members)),
        f,
        attempts=spent,
    )


def dv_verify(
    pubs: list[NiederreiterPublicKey], message: bytes, sig: DvSignature
) -> bool:
    """Recompute every slot's point and check it sits on the polynomial."""
    if not isinstance(sig, DvSignature):
        return False
    n_members = len(pubs)
    if sig.ring_size != n_members or len(sig.xs) != n_members or len(sig.rs) != n_members:
        return False
    m, t = pubs[0].m, pubs[0].t
    tm = t * m
    fld = Gf2mField(tm)
    ring_poly = PolyRing(fld)
    f = ring_poly.normalize(sig.poly)
    deg = degree(f)
    if deg < 0 or deg > n_members - 1 or f != tuple(sig.poly):
        return False
    if any(c >> tm for c in f):
        return False
    kbytes = message_digest(message)
    if ring_poly.eval(f, 0) != _ring_digest_point(pubs, tm):
        return False
    for i in range(n_members):
        x_i, r_i = sig.xs[i], sig.rs[i]
        if x_i.n != pubs[i].n or x_i.weight() > t:
            return False
        if not 1 <= r_i <= (1 << tm):
            return False
        y = pubs[i].h.mul_vec(x_i) ^ _nonce_hash(kbytes, r_i, tm)
        if feistel_permute(kbytes, i + 1, y.bits, tm) != ring_poly.eval(f, i + 1):
            return False
    return True


def _factorial(t: int) -> int:
    out = 1
    for i in range(2, t + 1):
        out *= i
    return out
