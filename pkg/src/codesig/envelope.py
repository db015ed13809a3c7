"""Key, signature and credential files: the CBSG envelope.

Layout (all multi-byte integers big-endian unless stated):

    magic "CBSG" | version 1B | scheme 1B | header_len 2B | header (JSON)
    | payload_len 4B | payload | digest 32B

The digest is SHA-256 over everything before it, so any single-bit
corruption is caught at parse time.  The header is canonical JSON (sorted
keys) holding a "kind" tag plus the scheme parameters (m, t, n, k, N, l as
applicable); the payload packs the bulk data with the library-wide bit
order: row-major matrices, rows padded to byte boundaries, LSB-first within
bytes.  Low-weight words travel as (16-bit weight, combinatorial rank)
pairs.  Private keys are stored unencrypted: these are research artifacts,
so keep the files out of hostile filesystems.
"""

from __future__ import annotations

import json
from math import comb

from .algebra import (
    BitMatrix,
    BitVector,
    Gf2mField,
    Permutation,
    cw_rank,
    cw_unrank,
    rank_bits,
)
from .blind import BlindSignature, DigestBindingAttestation
from .cfs import CfsSignature
from .errors import EnvelopeError
from .goppa import (
    GoppaCode,
    NiederreiterKeyPair,
    NiederreiterPublicKey,
    make_goppa_code,
)
from .hashing import digest
from .ibs import IbsCredential
from .kks import KksKeyPair, KksPublicKey, KksSignature
from .ring_zlc import RingDescriptor, RingSignature
from .stern import (
    Commitments,
    FsRound,
    RevealClear,
    RevealMasked,
    RevealPermuted,
    SternFsSignature,
    SternKeyPair,
    SternPublicKey,
)
from .threshold import (
    AcgCommitments,
    AcgFsRound,
    AcgFsSignature,
    AcgRevealClear,
    AcgRevealMasked,
    AcgRevealPermuted,
    AcgRing,
    DvSignature,
)

MAGIC = b"CBSG"
VERSION = 1

SCHEME_NR = 1
SCHEME_CFS = 2
SCHEME_STERN = 3
SCHEME_KKS = 4
SCHEME_ZLC = 5
SCHEME_ACG = 6
SCHEME_DV = 7
SCHEME_BLIND = 8
SCHEME_IBS = 9

SCHEME_NAMES = {
    SCHEME_NR: "nr",
    SCHEME_CFS: "cfs",
    SCHEME_STERN: "stern",
    SCHEME_KKS: "kks",
    SCHEME_ZLC: "zlc",
    SCHEME_ACG: "acg",
    SCHEME_DV: "dv",
    SCHEME_BLIND: "blind",
    SCHEME_IBS: "ibs",
}


def pack(scheme: int, header: dict, payload: bytes) -> bytes:
    head = json.dumps(header, sort_keys=True, separators=(",", ":")).encode()
    if len(head) > 0xFFFF:
        raise EnvelopeError("header too large")
    body = (
        MAGIC
        + bytes([VERSION, scheme])
        + len(head).to_bytes(2, "big")
        + head
        + len(payload).to_bytes(4, "big")
        + payload
    )
    return body + digest(body)


def unpack(blob: bytes) -> tuple[int, dict, bytes]:
    if len(blob) < 44 or blob[:4] != MAGIC:
        raise EnvelopeError("not a CBSG envelope")
    if blob[4] != VERSION:
        raise EnvelopeError(f"unsupported version {blob[4]}")
    scheme = blob[5]
    hlen = int.from_bytes(blob[6:8], "big")
    if len(blob) < 8 + hlen + 4 + 32:
        raise EnvelopeError("truncated envelope")
    header_raw = blob[8 : 8 + hlen]
    off = 8 + hlen
    plen = int.from_bytes(blob[off : off + 4], "big")
    off += 4
    if len(blob) != off + plen + 32:
        raise EnvelopeError("length fields inconsistent")
    payload = blob[off : off + plen]
    if digest(blob[: off + plen]) != blob[off + plen :]:
        raise EnvelopeError("integrity digest mismatch")
    try:
        header = json.loads(header_raw)
    except json.JSONDecodeError as exc:
        raise EnvelopeError(f"bad header JSON: {exc}") from exc
    if scheme not in SCHEME_NAMES:
        raise EnvelopeError(f"unknown scheme id {scheme}")
    return scheme, header, payload


class BitWriter:
    """LSB-first bit packer (bit k of the stream is bit k%8 of byte k//8)."""

    def __init__(self):
        self.acc = 0
        self.nbits = 0

    def write(self, value: int, width: int) -> None:
        if value < 0 or (width < value.bit_length()):
            raise EnvelopeError(f"value {value} does not fit {width} bits")
        self.acc |= value << self.nbits
        self.nbits += width

    def write_vector(self, v: BitVector) -> None:
        self.write(v.bits, v.n)

    def to_bytes(self) -> bytes:
        return self.acc.to_bytes((self.nbits + 7) // 8, "little")

    def bit_length(self) -> int:
        return self.nbits


class BitReader:
    def __init__(self, data: bytes):
        self.acc = int.from_bytes(data, "little")
        self.pos = 0
        self.limit = 8 * len(data)

    def read(self, width: int) -> int:
        if self.pos + width > self.limit:
            raise EnvelopeError("bitstream underrun")
        out = (self.acc >> self.pos) & ((1 << width) - 1)
        self.pos += width
        return out

    def read_vector(self, n: int) -> BitVector:
        return BitVector(n, self.read(n))


def _write_cw(w: BitWriter, n: int, v: BitVector) -> None:
    """16-bit weight, then the combinatorial rank in rank_bits(n, weight)."""
    wt = v.weight()
    w.write(wt, 16)
    w.write(cw_rank(v), rank_bits(n, wt))


def _read_cw(r: BitReader, n: int, max_weight: int) -> BitVector:
    wt = r.read(16)
    if wt > max_weight:
        raise EnvelopeError(f"encoded weight {wt} above bound {max_weight}")
    rank = r.read(rank_bits(n, wt))
    if rank >= comb(n, wt):
        raise EnvelopeError("combinatorial rank out of range")
    return cw_unrank(n, wt, rank)


def _perm_bytes(p: Permutation) -> bytes:
    return p.to_bytes()


def _perm_from(data: bytes) -> Permutation:
    return Permutation.from_bytes(data)


# -- Niederreiter / CFS --------------------------------------------------------


def serialize_nr_public(pk: NiederreiterPublicKey, scheme: int = SCHEME_NR) -> bytes:
    header = {"kind": "public", "m": pk.m, "t": pk.t, "n": pk.n}
    return pack(scheme, header, pk.h.to_bytes())


def parse_nr_public(blob: bytes, expect: int | None = None) -> NiederreiterPublicKey:
    scheme, header, payload = unpack(blob)
    if expect is not None and scheme != expect:
        raise EnvelopeError("scheme id mismatch")
    _expect_kind(header, "public")
    m, t, n = header["m"], header["t"], header["n"]
    return NiederreiterPublicKey(m, t, BitMatrix.from_bytes(m * t, n, payload))


def serialize_nr_private(kp: NiederreiterKeyPair, scheme: int = SCHEME_NR) -> bytes:
    code = kp.code
    m, t, n = code.m, code.t, code.n
    buf = bytearray()
    buf += code.field.modulus.to_bytes(4, "big")
    for c in code.g:
        buf += c.to_bytes(2, "big")
    for loc in code.support:
        buf += loc.to_bytes(2, "big")
    buf += kp.q.to_bytes()
    buf += _perm_bytes(kp.p)
    header = {"kind": "private", "m": m, "t": t, "n": n}
    return pack(scheme, header, bytes(buf))


def parse_nr_private(blob: bytes, expect: int | None = None) -> NiederreiterKeyPair:
    scheme, header, payload = unpack(blob)
    if expect is not None and scheme != expect:
        raise EnvelopeError("scheme id mismatch")
    _expect_kind(header, "private")
    m, t, n = header["m"], header["t"], header["n"]
    off = 0
    modulus = int.from_bytes(payload[off : off + 4], "big")
    off += 4
    g = tuple(
        int.from_bytes(payload[off + 2 * i : off + 2 * i + 2], "big")
        for i in range(t + 1)
    )
    off += 2 * (t + 1)
    support = tuple(
        int.from_bytes(payload[off + 2 * i : off + 2 * i + 2], "big") for i in range(n)
    )
    off += 2 * n
    mt = m * t
    qbytes = mt * ((mt + 7) // 8)
    q = BitMatrix.from_bytes(mt, mt, payload[off : off + qbytes])
    off += qbytes
    p = _perm_from(payload[off : off + 2 * n])
    field = Gf2mField(m, modulus)
    code = make_goppa_code(field, g, support)
    q_inv = q.inverse()
    if q_inv is None:
        raise EnvelopeError("stored Q is singular")
    h_pub = q.matmul(code.h_bin.permute_cols(p))
    return NiederreiterKeyPair(
        NiederreiterPublicKey(m, t, h_pub), code, q, q_inv, p
    )


def serialize_cfs_signature(sig: CfsSignature, n: int) -> bytes:
    w = BitWriter()
    _write_cw(w, n, sig.error)
    header = {"kind": "signature", "m": sig.m, "t": sig.t, "n": n,
              "counter": sig.counter}
    return pack(SCHEME_CFS, header, w.to_bytes())


def parse_cfs_signature(blob: bytes) -> CfsSignature:
    _, header, payload = unpack(blob)
    _expect_kind(header, "signature")
    n = header["n"]
    r = BitReader(payload)
    error = _read_cw(r, n, header["t"])
    return CfsSignature(header["counter"], error, header["m"], header["t"])


# -- Stern ----------------------------------------------------------------------


def serialize_stern_keypair(kp: SternKeyPair) -> bytes:
    pub = kp.public
    header = {
        "kind": "private",
        "n": pub.n,
        "r": pub.h.rows,
        "t": pub.weight,
    }
    payload = pub.h.to_bytes() + pub.y.to_bytes() + kp.s.to_bytes()
    return pack(SCHEME_STERN, header, payload)


def parse_stern_keypair(blob: bytes) -> SternKeyPair:
    _, header, payload = unpack(blob)
    _expect_kind(header, "private")
    n, r = header["n"], header["r"]
    hbytes = r * ((n + 7) // 8)
    ybytes = (r + 7) // 8
    h = BitMatrix.from_bytes(r, n, payload[:hbytes])
    y = BitVector.from_bytes(r, payload[hbytes : hbytes + ybytes])
    s = BitVector.from_bytes(n, payload[hbytes + ybytes :])
    return SternKeyPair(SternPublicKey(h, y, header["t"]), s)


def serialize_stern_public(pub: SternPublicKey) -> bytes:
    header = {"kind": "public", "n": pub.n, "r": pub.h.rows, "t": pub.weight}
    return pack(SCHEME_STERN, header, pub.h.to_bytes() + pub.y.to_bytes())


def parse_stern_public(blob: bytes) -> SternPublicKey:
    _, header, payload = unpack(blob)
    _expect_kind(header, "public")
    n, r = header["n"], header["r"]
    hbytes = r * ((n + 7) // 8)
    h = BitMatrix.from_bytes(r, n, payload[:hbytes])
    y = BitVector.from_bytes(r, payload[hbytes:])
    return SternPublicKey(h, y, header["t"])


def _write_stern_response(w: BitWriter, resp, n: int) -> None:
    if isinstance(resp, RevealClear):
        w.write(0, 2)
        w.write_vector(resp.u)
        for j in resp.sigma.image:
            w.write(j, 16)
    elif isinstance(resp, RevealMasked):
        w.write(1, 2)
        w.write_vector(resp.v)
        for j in resp.sigma.image:
            w.write(j, 16)
    elif isinstance(resp, RevealPermuted):
        w.write(2, 2)
        w.write_vector(resp.pu)
        w.write_vector(resp.ps)
    else:
        raise EnvelopeError("unknown response type")


def _read_stern_response(r: BitReader, n: int):
    arm = r.read(2)
    if arm == 0:
        u = r.read_vector(n)
        return RevealClear(u, Permutation(r.read(16) for _ in range(n)))
    if arm == 1:
        v = r.read_vector(n)
        return RevealMasked(v, Permutation(r.read(16) for _ in range(n)))
    if arm == 2:
        return RevealPermuted(r.read_vector(n), r.read_vector(n))
    raise EnvelopeError("bad response arm")


def serialize_stern_fs_signature(sig: SternFsSignature, n: int, r_rows: int, t: int) -> bytes:
    w = BitWriter()
    for rnd in sig.rounds:
        for c in (rnd.commitments.c1, rnd.commitments.c2, rnd.commitments.c3):
            w.write(int.from_bytes(c, "little"), 256)
        _write_stern_response(w, rnd.response, n)
    header = {"kind": "signature", "n": n, "r": r_rows, "t": t,
              "rounds": len(sig.rounds)}
    return pack(SCHEME_STERN, header, w.to_bytes())


def parse_stern_fs_signature(blob: bytes) -> SternFsSignature:
    _, header, payload = unpack(blob)
    _expect_kind(header, "signature")
    n, rounds = header["n"], header["rounds"]
    r = BitReader(payload)
    out = []
    for _ in range(rounds):
        cs = [r.read(256).to_bytes(32, "little") for _ in range(3)]
        resp = _read_stern_response(r, n)
        out.append(FsRound(Commitments(*cs), resp))
    return SternFsSignature(tuple(out))


# -- KKS -------------------------------------------------------------------------


def serialize_kks_keypair(kp: KksKeyPair) -> bytes:
    pub = kp.public
    header = {
        "kind": "private",
        "n": pub.n,
        "r": pub.h.rows,
        "k": pub.k,
        "np": len(kp.j_set),
        "t1": pub.t1,
        "t2": pub.t2,
    }
    payload = (
        pub.f.to_bytes()
        + pub.h.to_bytes()
        + b"".join(j.to_bytes(4, "big") for j in kp.j_set)
        + kp.g.to_bytes()
    )
    return pack(SCHEME_KKS, header, payload)


def parse_kks_keypair(blob: bytes) -> KksKeyPair:
    _, header, payload = unpack(blob)
    _expect_kind(header, "private")
    n, r, k, np = header["n"], header["r"], header["k"], header["np"]
    fb = r * ((k + 7) // 8)
    hb = r * ((n + 7) // 8)
    f = BitMatrix.from_bytes(r, k, payload[:fb])
    h = BitMatrix.from_bytes(r, n, payload[fb : fb + hb])
    off = fb + hb
    j_set = tuple(
        int.from_bytes(payload[off + 4 * i : off + 4 * i + 4], "big")
        for i in range(np)
    )
    off += 4 * np
    g = BitMatrix.from_bytes(k, np, payload[off:])
    return KksKeyPair(KksPublicKey(f, h, header["t1"], header["t2"]), j_set, g)


def serialize_kks_public(pub: KksPublicKey) -> bytes:
    header = {
        "kind": "public",
        "n": pub.n,
        "r": pub.h.rows,
        "k": pub.k,
        "t1": pub.t1,
        "t2": pub.t2,
    }
    return pack(SCHEME_KKS, header, pub.f.to_bytes() + pub.h.to_bytes())


def parse_kks_public(blob: bytes) -> KksPublicKey:
    _, header, payload = unpack(blob)
    _expect_kind(header, "public")
    n, r, k = header["n"], header["r"], header["k"]
    fb = r * ((k + 7) // 8)
    f = BitMatrix.from_bytes(r, k, payload[:fb])
    h = BitMatrix.from_bytes(r, n, payload[fb:])
    return KksPublicKey(f, h, header["t1"], header["t2"])


def serialize_kks_signature(sig: KksSignature) -> bytes:
    header = {"kind": "signature", "n": sig.sigma.n}
    return pack(SCHEME_KKS, header, sig.sigma.to_bytes())


def parse_kks_signature(blob: bytes) -> KksSignature:
    _, header, payload = unpack(blob)
    _expect_kind(header, "signature")
    return KksSignature(BitVector.from_bytes(header["n"], payload))


# -- ZLC ring ---------------------------------------------------------------------


def serialize_ring_descriptor(ring: RingDescriptor) -> bytes:
    first = ring.members[0]
    header = {
        "kind": "ring",
        "m": first.m,
        "t": first.t,
        "n": first.n,
        "N": ring.size,
        "digest": ring.digest().hex(),
    }
    payload = b"".join(pk.h.to_bytes() for pk in ring.members)
    return pack(SCHEME_ZLC, header, payload)


def parse_ring_descriptor(blob: bytes) -> RingDescriptor:
    _, header, payload = unpack(blob)
    _expect_kind(header, "ring")
    m, t, n, count = header["m"], header["t"], header["n"], header["N"]
    per = (m * t) * ((n + 7) // 8)
    if len(payload) != per * count:
        raise EnvelopeError("ring payload size mismatch")
    members = [
        NiederreiterPublicKey(
            m, t, BitMatrix.from_bytes(m * t, n, payload[i * per : (i + 1) * per])
        )
        for i in range(count)
    ]
    ring = RingDescriptor(members, canonicalize=False)
    if ring.digest().hex() != header["digest"]:
        raise EnvelopeError("ring digest mismatch")
    return ring


def serialize_ring_signature(sig: RingSignature, ring: RingDescriptor) -> bytes:
    w = BitWriter()
    w.write_vector(sig.glue)
    for z in sig.words:
        _write_cw(w, ring.n, z)
    header = {
        "kind": "signature",
        "n": ring.n,
        "t": ring.t,
        "nk": ring.glue_bits,
        "N": ring.size,
        "ring": ring.digest().hex(),
    }
    return pack(SCHEME_ZLC, header, w.to_bytes())


def parse_ring_signature(blob: bytes) -> tuple[RingSignature, str]:
    """Returns the signature and the hex digest of the ring it references."""
    _, header, payload = unpack(blob)
    _expect_kind(header, "signature")
    n, count = header["n"], header["N"]
    r = BitReader(payload)
    glue = r.read_vector(header["nk"])
    words = tuple(_read_cw(r, n, header["t"]) for _ in range(count))
    return RingSignature(glue, words), header["ring"]


# -- ACG ----------------------------------------------------------------------------


def serialize_acg_ring(ring: AcgRing) -> bytes:
    header = {"kind": "ring", "n": ring.n, "k": ring.k, "t": ring.t, "N": ring.size}
    return pack(SCHEME_ACG, header, b"".join(h.to_bytes() for h in ring.members))


def parse_acg_ring(blob: bytes) -> AcgRing:
    _, header, payload = unpack(blob)
    _expect_kind(header, "ring")
    n, k, t, count = header["n"], header["k"], header["t"], header["N"]
    per = (n - k) * ((n + 7) // 8)
    members = tuple(
        BitMatrix.from_bytes(n - k, n, payload[i * per : (i + 1) * per])
        for i in range(count)
    )
    return AcgRing(members, n, k, t)


def _write_acg_response(w: BitWriter, resp, n: int, count: int) -> None:
    if isinstance(resp, (AcgRevealClear, AcgRevealMasked)):
        w.write(0 if isinstance(resp, AcgRevealClear) else 1, 2)
        vecs = resp.zs if isinstance(resp, AcgRevealClear) else resp.xs
        for v in vecs:
            w.write_vector(v)
        for j in resp.pi.image:
            w.write(j, 16)
        for sg in resp.sigmas:
            for j in sg.image:
                w.write(j, 16)
    elif isinstance(resp, AcgRevealPermuted):
        w.write(2, 2)
        for v in resp.pz:
            w.write_vector(v)
        for v in resp.ps:
            w.write_vector(v)
    else:
        raise EnvelopeError("unknown ACG response type")


def _read_acg_response(r: BitReader, n: int, count: int):
    arm = r.read(2)
    if arm in (0, 1):
        vecs = tuple(r.read_vector(n) for _ in range(count))
        pi = Permutation(r.read(16) for _ in range(count))
        sigmas = tuple(
            Permutation(r.read(16) for _ in range(n)) for _ in range(count)
        )
        return AcgRevealClear(vecs, pi, sigmas) if arm == 0 else AcgRevealMasked(vecs, pi, sigmas)
    if arm == 2:
        pz = tuple(r.read_vector(n) for _ in range(count))
        ps = tuple(r.read_vector(n) for _ in range(count))
        return AcgRevealPermuted(pz, ps)
    raise EnvelopeError("bad ACG response arm")


def serialize_acg_fs_signature(sig: AcgFsSignature, ring: AcgRing) -> bytes:
    w = BitWriter()
    for rnd in sig.rounds:
        for c in (rnd.commitments.c1, rnd.commitments.c2, rnd.commitments.c3):
            w.write(int.from_bytes(c, "little"), 256)
        _write_acg_response(w, rnd.response, ring.n, ring.size)
    header = {
        "kind": "signature",
        "n": ring.n,
        "k": ring.k,
        "t": ring.t,
        "N": ring.size,
        "l": sig.threshold,
        "rounds": len(sig.rounds),
    }
    return pack(SCHEME_ACG, header, w.to_bytes())


def parse_acg_fs_signature(blob: bytes) -> AcgFsSignature:
    _, header, payload = unpack(blob)
    _expect_kind(header, "signature")
    n, count, rounds = header["n"], header["N"], header["rounds"]
    r = BitReader(payload)
    out = []
    for _ in range(rounds):
        cs = [r.read(256).to_bytes(32, "little") for _ in range(3)]
        out.append(AcgFsRound(AcgCommitments(*cs), _read_acg_response(r, n, count)))
    return AcgFsSignature(header["l"], tuple(out))


# -- DV ---------------------------------------------------------------------------


def serialize_dv_ring(pubs: list[NiederreiterPublicKey]) -> bytes:
    first = pubs[0]
    header = {"kind": "ring", "m": first.m, "t": first.t, "n": first.n,
              "N": len(pubs)}
    return pack(SCHEME_DV, header, b"".join(pk.h.to_bytes() for pk in pubs))


def parse_dv_ring(blob: bytes) -> list[NiederreiterPublicKey]:
    _, header, payload = unpack(blob)
    _expect_kind(header, "ring")
    m, t, n, count = header["m"], header["t"], header["n"], header["N"]
    per = (m * t) * ((n + 7) // 8)
    return [
        NiederreiterPublicKey(
            m, t, BitMatrix.from_bytes(m * t, n, payload[i * per : (i + 1) * per])
        )
        for i in range(count)
    ]


def serialize_dv_signature(sig: DvSignature, m: int, t: int, n: int) -> bytes:
    tm = t * m
    w = BitWriter()
    for x in sig.xs:
        _write_cw(w, n, x)
    for rv in sig.rs:
        w.write(rv - 1, tm)  # r in {1..2^tm} stored as r-1 in tm bits
    w.write(len(sig.poly), 16)
    for c in sig.poly:  # coefficients little-endian bit order, tm bits each
        w.write(c, tm)
    header = {"kind": "signature", "m": m, "t": t, "n": n, "N": sig.ring_size}
    return pack(SCHEME_DV, header, w.to_bytes())


def parse_dv_signature(blob: bytes) -> DvSignature:
    _, header, payload = unpack(blob)
    _expect_kind(header, "signature")
    m, t, n, count = header["m"], header["t"], header["n"], header["N"]
    tm = t * m
    r = BitReader(payload)
    xs = tuple(_read_cw(r, n, t) for _ in range(count))
    rs = tuple(r.read(tm) + 1 for _ in range(count))
    ncoef = r.read(16)
    poly = tuple(r.read(tm) for _ in range(ncoef))
    return DvSignature(count, xs, rs, poly)


# -- blind ------------------------------------------------------------------------


def serialize_blind_signature(
    sig: BlindSignature, pub: NiederreiterPublicKey, p: int, subcode_dim: int
) -> bytes:
    # envelope body: seed | H_b bit-packed | sigma cw | attestation (type-tagged)
    w = BitWriter()
    _write_cw(w, pub.n, sig.sigma_p)
    payload = (
        sig.seed
        + sig.h_b.to_bytes()
        + w.to_bytes()
        + sig.attestation.to_bytes()
    )
    header = {
        "kind": "signature",
        "m": pub.m,
        "t": pub.t,
        "n": pub.n,
        "p": p,
        "L": subcode_dim,
        "hb_rows": sig.h_b.rows,
    }
    return pack(SCHEME_BLIND, header, payload)


def parse_blind_signature(blob: bytes) -> tuple[BlindSignature, dict]:
    """Returns the signature plus the parameter header (p is needed to verify)."""
    _, header, payload = unpack(blob)
    _expect_kind(header, "signature")
    n, hb_rows = header["n"], header["hb_rows"]
    off = 16
    seed = payload[:off]
    hb_bytes = hb_rows * ((n + 7) // 8)
    h_b = BitMatrix.from_bytes(hb_rows, n, payload[off : off + hb_bytes])
    off += hb_bytes
    att_len = 34
    cw_bytes = payload[off : len(payload) - att_len]
    r = BitReader(cw_bytes)
    sigma_p = _read_cw(r, n, header["t"])
    attestation = DigestBindingAttestation.from_bytes(payload[len(payload) - att_len :])
    return BlindSignature(seed, h_b, sigma_p, attestation), header


def serialize_acg_secret(index: int, s: BitVector, ring: AcgRing) -> bytes:
    header = {
        "kind": "member-secret",
        "index": index,
        "n": ring.n,
        "k": ring.k,
        "t": ring.t,
        "N": ring.size,
    }
    return pack(SCHEME_ACG, header, s.to_bytes())


def parse_acg_secret(blob: bytes) -> tuple[int, BitVector]:
    _, header, payload = unpack(blob)
    _expect_kind(header, "member-secret")
    return header["index"], BitVector.from_bytes(header["n"], payload)


def serialize_blind_request(s: BitVector, pub: NiederreiterPublicKey) -> bytes:
    header = {"kind": "blind-request", "m": pub.m, "t": pub.t, "n": pub.n}
    return pack(SCHEME_BLIND, header, s.to_bytes())


def parse_blind_request(blob: bytes) -> BitVector:
    _, header, payload = unpack(blob)
    _expect_kind(header, "blind-request")
    return BitVector.from_bytes(header["m"] * header["t"], payload)


def serialize_blind_state(state, p: int, subcode_dim: int) -> bytes:
    """User-side blinding state (keep private; it links request and signature)."""
    pub = state.public
    payload = (
        state.seed
        + state.kmat.to_bytes()
        + _perm_bytes(state.perm)
        + state.h_b.to_bytes()
        + state.s.to_bytes()
        + state.message
    )
    header = {
        "kind": "blind-state",
        "m": pub.m,
        "t": pub.t,
        "n": pub.n,
        "p": p,
        "L": subcode_dim,
        "hb_rows": state.h_b.rows,
    }
    return pack(SCHEME_BLIND, header, payload)


def parse_blind_state(blob: bytes, pub: NiederreiterPublicKey):
    from .blind import BlindingState, expand_seed_matrix

    _, header, payload = unpack(blob)
    _expect_kind(header, "blind-state")
    n, p, sub, hb_rows = header["n"], header["p"], header["L"], header["hb_rows"]
    off = 16
    seed = payload[:off]
    kb = sub * ((p + 7) // 8)
    kmat = BitMatrix.from_bytes(sub, p, payload[off : off + kb])
    off += kb
    perm = _perm_from(payload[off : off + 2 * n])
    off += 2 * n
    hb_bytes = hb_rows * ((n + 7) // 8)
    h_b = BitMatrix.from_bytes(hb_rows, n, payload[off : off + hb_bytes])
    off += hb_bytes
    sb = (pub.syndrome_bits + 7) // 8
    s = BitVector.from_bytes(pub.syndrome_bits, payload[off : off + sb])
    off += sb
    message = payload[off:]
    r0 = expand_seed_matrix(seed, p, n)
    g_b = pub.h.null_space().stack(kmat.matmul(r0)).permute_cols(perm)
    return BlindingState(seed, r0, kmat, perm, g_b, h_b, s, message, pub)


# -- IBS --------------------------------------------------------------------------


def serialize_ibs_credential(cred: IbsCredential, n: int) -> bytes:
    w = BitWriter()
    _write_cw(w, n, cred.s)
    header = {
        "kind": "credential",
        "m": cred.m,
        "t": cred.t,
        "n": n,
        "counter": cred.counter,
        "identity": cred.identity.hex(),
    }
    return pack(SCHEME_IBS, header, w.to_bytes())


def parse_ibs_credential(blob: bytes) -> IbsCredential:
    _, header, payload = unpack(blob)
    _expect_kind(header, "credential")
    n = header["n"]
    r = BitReader(payload)
    s = _read_cw(r, n, header["t"])
    return IbsCredential(
        bytes.fromhex(header["identity"]), header["counter"], s,
        header["m"], header["t"],
    )


def _expect_kind(header: dict, kind: str) -> None:
    if header.get("kind") != kind:
        raise EnvelopeError(f"expected a {kind!r} envelope, got {header.get('kind')!r}")
