"""Binary Goppa codes, Patterson decoding, and the Niederreiter cryptosystem.

A binary Goppa code is fixed by a monic irreducible polynomial g of degree t
over GF(2^m) and a support of distinct field elements where g does not
vanish.  With irreducible g the code corrects any t errors.  The canonical
parity-check matrix used here maps an error pattern e directly to the
coefficient vector of its syndrome polynomial

    S(z) = sum_{i in supp(e)} 1/(z - L_i)  mod g(z),

each GF(2^m) coefficient expanded into m bits, so decoding can read S(z)
straight out of the packed syndrome.

Patterson's algorithm recovers e from S(z): invert S modulo g, take the
square root of S^(-1) + z, split it with a partial extended Euclid run, and
read the error positions off the roots of the resulting locator polynomial.
Syndromes outside the weight-t ball decode to None; the CFS signature loop
relies on that being a cheap, reliable verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import (
    BitMatrix,
    BitVector,
    Gf2mField,
    Permutation,
    Poly,
    PolyRing,
    X,
    degree,
    random_invertible,
    random_permutation,
)
from .algebra.polyring import ZERO
from .errors import ParameterInvalid, WeightInvalid
from .rng import Rng

KEYGEN_MAX_DEGREE = 16  # desk bound on m for key generation


@dataclass(frozen=True)
class GoppaCode:
    """Goppa polynomial, support, parity-check matrix and decoder state.

    n = len(support) (all of GF(2^m) for t >= 2; degree-1 polynomials lose
    the one support element at their root), k = n - mt.  The support order
    is part of the secret and fixed at generation time.
    """

    field: Gf2mField
    g: Poly
    support: tuple[int, ...]
    h_bin: BitMatrix
    _ring: PolyRing = dc_field(repr=False, compare=False, default=None)
    _sqrt_z: Poly = dc_field(repr=False, compare=False, default=None)

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def t(self) -> int:
        return degree(self.g)

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def k(self) -> int:
        return self.n - self.m * self.t

    def syndrome(self, e: BitVector) -> BitVector:
        return self.h_bin.mul_vec(e)


def _parity_check(field: Gf2mField, g: Poly, support) -> BitMatrix:
    """mt x n binary matrix whose column j encodes 1/(z - L_j) mod g.

    1/(z - L_j) = q_j(z) / g(L_j) with q_j(z) = (g(z) - g(L_j)) / (z - L_j);
    the q_j coefficients come out of the same Horner pass that evaluates g.
    """
    t = degree(g)
    m = field.m
    n = len(support)
    rows = [0] * (m * t)
    for j, loc in enumerate(support):
        coeffs = [0] * t
        acc = g[t]
        for i in range(t - 1, -1, -1):
            coeffs[i] = acc
            acc = field.mul(acc, loc) ^ g[i]
        inv_g = field.inv(acc)  # acc = g(L_j) != 0 on the support
        for i in range(t):
            entry = field.mul(coeffs[i], inv_g)
            for b in range(m):
                if (entry >> b) & 1:
                    rows[i * m + b] |= 1 << j
    return BitMatrix(m * t, n, rows)


def make_goppa_code(field: Gf2mField, g: Poly, support) -> GoppaCode:
    ring = PolyRing(field)
    code = GoppaCode(field, tuple(g), tuple(support), _parity_check(field, g, support))
    object.__setattr__(code, "_ring", ring)
    object.__setattr__(code, "_sqrt_z", ring.sqrt_z_mod(code.g))
    return code


def goppa_keygen(m: int, t: int, rng: Rng) -> GoppaCode:
    """Random t-error-correcting Goppa code of length 2^m (2^m - 1 at t=1).

    Rejection-samples g until the binary parity-check matrix has full rank
    mt, so every emitted code has dimension exactly n - mt.
    """
    if not 2 <= m <= KEYGEN_MAX_DEGREE:
        raise ParameterInvalid(f"m={m} outside [2, {KEYGEN_MAX_DEGREE}]")
    if t < 1 or m * t >= (1 << m):
        raise ParameterInvalid(f"need 1 <= t and mt < 2^m, got m={m}, t={t}")
    field = Gf2mField(m)
    ring = PolyRing(field)
    while True:
        g = ring.random_monic_irreducible(t, rng)
        support = [x for x in field.elements() if ring.eval(g, x) != 0]
        rng.shuffle(support)
        if len(support) <= m * t:
            continue  # only possible at t=1 with pathological m; resample
        code = make_goppa_code(field, g, support)
        if code.h_bin.rank() == m * t:
            return code


def decode(code: GoppaCode, s: BitVector) -> BitVector | None:
    """Patterson bounded-distance decoding.

    Returns the unique e with weight(e) <= t and H~ e^T = s, or None when no
    such e exists.  None is an expected outcome (roughly (t!-1)/t! of all
    syndromes), not an error.
    """
    m, t, n = code.m, code.t, code.n
    if s.n != m * t:
        raise ParameterInvalid(f"syndrome length {s.n} != mt = {m * t}")
    if s.is_zero():
        return BitVector(n, 0)
    ring = code._ring
    mask = (1 << m) - 1
    syn = ring.normalize((s.bits >> (i * m)) & mask for i in range(t))
    t_inv = ring.inv_mod(syn, code.g)
    r = ring.sqrt_mod(ring.add(t_inv, X), code.g, code._sqrt_z)
    a, b = _eea_split(ring, code.g, r, t)
    # locator sigma = a^2 + z b^2 vanishes exactly on the error locations
    sigma = ring.add(ring.mul(a, a), ring.mul(X, ring.mul(b, b)))
    if not sigma:
        return None
    bits = 0
    for j, loc in enumerate(code.support):
        if ring.eval(sigma, loc) == 0:
            bits |= 1 << j
    e = BitVector(n, bits)
    if 0 < e.weight() <= t and code.syndrome(e) == s:
        return e
    return None


def _eea_split(ring: PolyRing, g: Poly, r: Poly, t: int) -> tuple[Poly, Poly]:
    """Partial extended Euclid: a = b*r mod g with deg a <= t/2, deg b <= (t-1)/2."""
    a_prev, a_cur = g, ring.mod(r, g)
    b_prev, b_cur = ZERO, (1,)
    bound = t // 2
    while degree(a_cur) > bound:
        q, rem = ring.divmod(a_prev, a_cur)
        a_prev, a_cur = a_cur, rem
        b_prev, b_cur = b_cur, ring.add(b_prev, ring.mul(q, b_cur))
    return a_cur, b_cur


@dataclass(frozen=True)
class NiederreiterPublicKey:
    """Disguised parity-check matrix H = Q H~ P plus the weight bound t."""

    m: int
    t: int
    h: BitMatrix

    @property
    def n(self) -> int:
        return self.h.cols

    @property
    def syndrome_bits(self) -> int:
        return self.h.rows

    def to_bytes(self) -> bytes:
        """Canonical byte form; also the ring-ordering and digest input."""
        return (
            self.m.to_bytes(1, "big")
            + self.t.to_bytes(2, "big")
            + self.n.to_bytes(4, "big")
            + self.h.to_bytes()
        )

    @classmethod
    def from_bytes(cls, data: bytes) -> "NiederreiterPublicKey":
        m = data[0]
        t = int.from_bytes(data[1:3], "big")
        n = int.from_bytes(data[3:7], "big")
        return cls(m, t, BitMatrix.from_bytes(m * t, n, data[7:]))


@dataclass(frozen=True)
class NiederreiterKeyPair:
    public: NiederreiterPublicKey
    code: GoppaCode
    q: BitMatrix
    q_inv: BitMatrix
    p: Permutation


def nr_keygen(m: int, t: int, rng: Rng) -> NiederreiterKeyPair:
    code = goppa_keygen(m, t, rng)
    r = code.h_bin.rows
    q = random_invertible(r, rng)
    p = random_permutation(code.n, rng)
    h_pub = q.matmul(code.h_bin.permute_cols(p))
    return NiederreiterKeyPair(
        public=NiederreiterPublicKey(m, t, h_pub),
        code=code,
        q=q,
        q_inv=q.inverse(),
        p=p,
    )


def nr_encrypt(pk: NiederreiterPublicKey, x: BitVector) -> BitVector:
    """Ciphertext = syndrome H x^T of a weight-t plaintext."""
    if x.weight() != pk.t:
        raise WeightInvalid(f"plaintext weight {x.weight()} != t = {pk.t}")
    return pk.h.mul_vec(x)


def nr_decrypt(kp: NiederreiterKeyPair, y: BitVector) -> BitVector | None:
    """Invert the syndrome map: Q^{-1} y, decode, undo the permutation."""
    e = decode(kp.code, kp.q_inv.mul_vec(y))
    if e is None:
        return None
    return e.permute(kp.p)


def trapdoor_solve(kp: NiederreiterKeyPair, s: BitVector) -> BitVector | None:
    """Any-weight-<=t x with H_pub x^T = s, via the private decoder.

    Alias of nr_decrypt that reads as what the signing loops actually do.
    """
    return nr_decrypt(kp, s)
