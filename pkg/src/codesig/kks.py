"""The KKS signature over arbitrary linear codes.

A signature is a codeword of a hidden weight-bounded code U scattered onto a
secret index set J inside a public code; verification only sees the public
parity check H, the composed map F = H(J) G^T and the weight window
[t1, t2].  No trapdoor decoding is involved, which is the scheme's selling
point and also its weakness: every signature has support inside J, so a few
dozen signatures disclose J (the support-leakage fact is covered by tests
as a statistic, not exploited).

Published hardened parameters (n=2000, k=160, n'=1000, r=1100, t1=90,
t2=110, rated for about 40 signatures) pass validate_params; actually
generating such a code needs the original special constructions, so
rejection-sampling keygen at those sizes raises KeygenExhausted by design.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BitMatrix, BitVector
from .errors import KeygenExhausted, ParameterInvalid, ZeroMessage, resolve_budget
from .rng import Rng

DEFAULT_KEYGEN_TRIES = 2000
EXHAUSTIVE_K_CAP = 16  # full 2^k - 1 codeword sweep is feasible below this
SAMPLED_CHECKS = 200


@dataclass(frozen=True)
class KksPublicKey:
    f: BitMatrix  # r x k
    h: BitMatrix  # r x n
    t1: int
    t2: int

    @property
    def n(self) -> int:
        return self.h.cols

    @property
    def k(self) -> int:
        return self.f.cols


@dataclass(frozen=True)
class KksKeyPair:
    public: KksPublicKey
    j_set: tuple[int, ...]  # sorted secret support, |J| = n'
    g: BitMatrix  # k x n' generator of the hidden code U


@dataclass(frozen=True)
class KksSignature:
    sigma: BitVector  # length n, supported on J


def validate_params(n: int, r: int, n_prime: int, k: int, t1: int, t2: int) -> None:
    """Structural parameter check (does not promise keygen can succeed)."""
    if not (0 < n_prime < n):
        raise ParameterInvalid(f"need 0 < n' < n, got n'={n_prime}, n={n}")
    if not (0 < k <= n_prime):
        raise ParameterInvalid(f"need 0 < k <= n', got k={k}, n'={n_prime}")
    if not (0 < t1 <= t2 <= n_prime):
        raise ParameterInvalid(f"need 0 < t1 <= t2 <= n', got {(t1, t2, n_prime)}")
    if r < 1 or r >= n:
        raise ParameterInvalid(f"need 0 < r < n, got r={r}")


def _codeword_weights_ok(g: BitMatrix, t1: int, t2: int, rng: Rng) -> bool:
    k = g.rows
    if k <= EXHAUSTIVE_K_CAP:
        msgs = range(1, 1 << k)
    else:
        msgs = (1 + rng.randrange((1 << k) - 1) for _ in range(SAMPLED_CHECKS))
    for mb in msgs:
        w = g.left_mul(BitVector(k, mb)).weight()
        if not t1 <= w <= t2:
            return False
    return True


def kks_keygen(
    n: int,
    r: int,
    n_prime: int,
    k: int,
    t1: int,
    t2: int,
    rng: Rng,
    max_tries: int | None = None,
) -> KksKeyPair:
    """Rejection-sample G until every nonzero codeword weight lands in [t1, t2].

    The check is exhaustive over all 2^k - 1 codewords for k <= 16 and
    sampled above that.
    """
    validate_params(n, r, n_prime, k, t1, t2)
    cap = resolve_budget(max_tries, DEFAULT_KEYGEN_TRIES)
    h = BitMatrix.random(r, n, rng)
    for _ in range(cap):
        g = BitMatrix.random(k, n_prime, rng)
        if g.rank() < k:
            continue
        if not _codeword_weights_ok(g, t1, t2, rng):
            continue
        j_set = tuple(sorted(rng.sample(range(n), n_prime)))
        f = h.submatrix_cols(j_set).matmul(g.transpose())
        return KksKeyPair(KksPublicKey(f, h, t1, t2), j_set, g)
    raise KeygenExhausted(
        f"no generator with codeword weights in [{t1}, {t2}] after {cap} tries"
    )


def _scatter(sigma_star: BitVector, j_set: tuple[int, ...], n: int) -> BitVector:
    bits = 0
    for pos, j in enumerate(j_set):
        bits |= ((sigma_star.bits >> pos) & 1) << j
    return BitVector(n, bits)


def kks_sign(kp: KksKeyPair, message: BitVector) -> KksSignature:
    """sigma = m G placed on the J coordinates, zero elsewhere."""
    if message.n != kp.g.rows:
        raise ParameterInvalid(f"message length {message.n} != k = {kp.g.rows}")
    if message.is_zero():
        raise ZeroMessage("zero message maps to the zero word, below t1")
    return KksSignature(_scatter(kp.g.left_mul(message), kp.j_set, kp.public.n))


def kks_verify(pk: KksPublicKey, message: BitVector, sig: KksSignature) -> bool:
    """Accept iff t1 <= weight(sigma) <= t2 and F m^T = H sigma^T."""
    if not isinstance(sig, KksSignature) or sig.sigma.n != pk.n:
        return False
    if message.n != pk.k:
        return False
    if not pk.t1 <= sig.sigma.weight() <= pk.t2:
        return False
    return pk.f.mul_vec(message) == pk.h.mul_vec(sig.sigma)
