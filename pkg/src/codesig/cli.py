"""Command-line front end.

Exit codes: 0 success/accept, 1 reject/failure, 2 usage error, 3 retry
budget exhausted.  All randomness hangs off --seed; without it the seed
comes from OS entropy (and the run is not reproducible).  --json prints a
machine-readable record on stdout; human diagnostics go to stderr.  The
environment variable CBSG_ATTEMPT_BUDGET overrides every retry cap.
"""

from __future__ import annotations

import argparse
import json
import math
import secrets
import sys
import time
from pathlib import Path

from . import envelope as env
from .algebra import BitVector
from .blind import blind, blind_sign, blind_verify, unblind
from .cfs import cfs_sign, cfs_verify
from .costmodel import (
    TABLE1_PARAMS,
    format_bits,
    quantity_A,
    quantity_B,
    scheme_param_advisor,
    table1,
)
from .errors import AttemptBudgetExceeded, CodesigError, KeygenExhausted
from .goppa import nr_keygen
from .harness import AdversaryProfile, harness_run
from .hashing import hash_to_bits
from .ibs import credential_valid, ibs_identify, kgc_extract
from .kks import kks_keygen, kks_sign, kks_verify
from .ring_zlc import RingDescriptor, zlc_sign, zlc_verify
from .rng import Rng
from .stern import stern_fs_sign, stern_fs_verify, stern_identify, stern_keygen
from .threshold import acg_fs_sign, acg_fs_verify, acg_keygen, dv_sign, dv_verify

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _rng(args) -> Rng:
    seed = args.seed if args.seed is not None else secrets.randbits(128)
    return Rng(seed)


def _emit(args, record: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(record, sort_keys=True))
    else:
        for k, v in record.items():
            print(f"{k}: {v}")


def _read_message(args) -> bytes:
    if getattr(args, "message", None) is not None:
        return args.message.encode()
    if getattr(args, "message_file", None) is not None:
        return Path(args.message_file).read_bytes()
    raise SystemExit2("need --message or --message-file")


class SystemExit2(Exception):
    """Usage-level error mapped to exit code 2."""


def _write(path: str, blob: bytes) -> None:
    Path(path).write_bytes(blob)


# -- keygen -------------------------------------------------------------------


def cmd_keygen(args) -> int:
    rng = _rng(args)
    scheme = args.scheme
    if scheme in ("nr", "cfs"):
        kp = nr_keygen(args.m, args.t, rng)
        sid = env.SCHEME_NR if scheme == "nr" else env.SCHEME_CFS
        _write(args.out_private, env.serialize_nr_private(kp, sid))
        _write(args.out_public, env.serialize_nr_public(kp.public, sid))
        _emit(args, {"scheme": scheme, "n": kp.public.n, "k": kp.code.k,
                     "private": args.out_private, "public": args.out_public})
        sys.stderr.write("note: private key files are unencrypted; restrict "
                         "file modes accordingly\n")
    elif scheme == "stern":
        kp = stern_keygen(args.n, args.k, args.t, rng)
        _write(args.out_private, env.serialize_stern_keypair(kp))
        _write(args.out_public, env.serialize_stern_public(kp.public))
        _emit(args, {"scheme": scheme, "private": args.out_private,
                     "public": args.out_public})
    elif scheme == "kks":
        kp = kks_keygen(args.n, args.r, args.n_prime, args.k, args.t1, args.t2, rng)
        _write(args.out_private, env.serialize_kks_keypair(kp))
        _write(args.out_public, env.serialize_kks_public(kp.public))
        _emit(args, {"scheme": scheme, "private": args.out_private,
                     "public": args.out_public})
    elif scheme in ("zlc", "dv"):
        kps = [nr_keygen(args.m, args.t, rng) for _ in range(args.members)]
        outdir = Path(args.out_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        sid = env.SCHEME_CFS
        for i, kp in enumerate(kps):
            _write(str(outdir / f"member{i}.sk.cbsg"),
                   env.serialize_nr_private(kp, sid))
            _write(str(outdir / f"member{i}.pk.cbsg"),
                   env.serialize_nr_public(kp.public, sid))
        pubs = [kp.public for kp in kps]
        if scheme == "zlc":
            ring = RingDescriptor(pubs)
            _write(str(outdir / "ring.cbsg"), env.serialize_ring_descriptor(ring))
        else:
            _write(str(outdir / "ring.cbsg"), env.serialize_dv_ring(pubs))
        _emit(args, {"scheme": scheme, "members": args.members,
                     "dir": str(outdir)})
    elif scheme == "acg":
        ring, secs = acg_keygen(args.n, args.k, args.t, args.members, rng)
        outdir = Path(args.out_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        _write(str(outdir / "ring.cbsg"), env.serialize_acg_ring(ring))
        for i, s in enumerate(secs):
            _write(str(outdir / f"member{i}.sk.cbsg"),
                   env.serialize_acg_secret(i, s, ring))
        _emit(args, {"scheme": scheme, "members": args.members,
                     "dir": str(outdir)})
    else:
        raise SystemExit2(f"keygen does not handle scheme {scheme!r}")
    return EXIT_OK


# -- sign/verify ----------------------------------------------------------------


def cmd_sign(args) -> int:
    rng = _rng(args)
    if args.scheme == "cfs":
        message = _read_message(args)
        kp = env.parse_nr_private(Path(args.key).read_bytes())
        sig = cfs_sign(kp, message, mode=args.mode, rng=rng)
        _write(args.out, env.serialize_cfs_signature(sig, kp.public.n))
        _emit(args, {"scheme": "cfs", "attempts": sig.attempts,
                     "counter": sig.counter, "out": args.out})
    elif args.scheme == "stern":
        message = _read_message(args)
        kp = env.parse_stern_keypair(Path(args.key).read_bytes())
        sig = stern_fs_sign(kp, message, args.rounds, rng)
        _write(args.out, env.serialize_stern_fs_signature(
            sig, kp.public.n, kp.public.h.rows, kp.public.weight))
        _emit(args, {"scheme": "stern", "rounds": args.rounds, "out": args.out})
    elif args.scheme == "kks":
        kp = env.parse_kks_keypair(Path(args.key).read_bytes())
        message = _read_message(args) if not args.raw_bits else b""
        if args.raw_bits:
            m = BitVector(kp.public.k, int(args.raw_bits, 2))
        else:
            # convenience extension: hash a byte message onto GF(2)^k
            m = hash_to_bits(b"kksmsg" + message, kp.public.k)
        sig = kks_sign(kp, m)
        _write(args.out, env.serialize_kks_signature(sig))
        _emit(args, {"scheme": "kks", "out": args.out})
    elif args.scheme == "blind":
        if not args.request:
            raise SystemExit2("blind signing needs --request")
        kp = env.parse_nr_private(Path(args.key).read_bytes())
        s = env.parse_blind_request(Path(args.request).read_bytes())
        sigma = blind_sign(kp, s)
        if sigma is None:
            sys.stderr.write("syndrome not decodable; ask the user to re-blind\n")
            return EXIT_BUDGET
        header = {"kind": "sigma", "n": kp.public.n}
        _write(args.out, env.pack(env.SCHEME_BLIND, header, sigma.to_bytes()))
        _emit(args, {"scheme": "blind", "out": args.out})
    else:
        raise SystemExit2(f"sign does not handle scheme {args.scheme!r}")
    return EXIT_OK


def cmd_verify(args) -> int:
    message = _read_message(args)
    blob = Path(args.sig).read_bytes()
    if args.scheme == "cfs":
        pk = env.parse_nr_public(Path(args.key).read_bytes())
        ok = cfs_verify(pk, message, env.parse_cfs_signature(blob))
    elif args.scheme == "stern":
        pk = env.parse_stern_public(Path(args.key).read_bytes())
        ok = stern_fs_verify(pk, message, env.parse_stern_fs_signature(blob))
    elif args.scheme == "kks":
        pk = env.parse_kks_public(Path(args.key).read_bytes())
        if args.raw_bits:
            m = BitVector(pk.k, int(args.raw_bits, 2))
        else:
            m = hash_to_bits(b"kksmsg" + message, pk.k)
        ok = kks_verify(pk, m, env.parse_kks_signature(blob))
    else:
        raise SystemExit2(f"verify does not handle scheme {args.scheme!r}")
    _emit(args, {"scheme": args.scheme, "accept": bool(ok)})
    return EXIT_OK if ok else EXIT_REJECT


# -- interactive identification / harness ------------------------------------------


def cmd_identify(args) -> int:
    if args.adversary:
        profile = AdversaryProfile(args.adversary)
        stats = harness_run(args.protocol, profile, args.rounds, args.trials,
                            seed=args.seed)
        if args.transcript:
            with open(args.transcript, "w") as fh:
                harness_run(args.protocol, profile, args.rounds,
                            min(args.trials, 10), seed=args.seed, log=fh)
        _emit(args, stats)
        return EXIT_OK
    rng = _rng(args)
    if args.key:
        kp = env.parse_stern_keypair(Path(args.key).read_bytes())
        ok = stern_identify(kp, args.rounds, rng)
    else:
        kp = stern_keygen(32, 16, 4, rng)
        ok = stern_identify(kp, args.rounds, rng)
    _emit(args, {"protocol": "stern", "rounds": args.rounds, "accept": bool(ok)})
    return EXIT_OK if ok else EXIT_REJECT


# -- ring -------------------------------------------------------------------------


def cmd_ring_sign(args) -> int:
    rng = _rng(args)
    ring = env.parse_ring_descriptor(Path(args.ring).read_bytes())
    kp = env.parse_nr_private(Path(args.key).read_bytes())
    sig = zlc_sign(ring, kp, _read_message(args), rng)
    _write(args.out, env.serialize_ring_signature(sig, ring))
    _emit(args, {"scheme": "zlc", "attempts": sig.attempts, "out": args.out,
                 "bits": sig.bit_length(ring.n)})
    return EXIT_OK


def cmd_ring_verify(args) -> int:
    ring = env.parse_ring_descriptor(Path(args.ring).read_bytes())
    sig, ring_digest = env.parse_ring_signature(Path(args.sig).read_bytes())
    if ring_digest != ring.digest().hex():
        sys.stderr.write("signature references a different ring descriptor\n")
        return EXIT_REJECT
    ok = zlc_verify(ring, _read_message(args), sig)
    _emit(args, {"scheme": "zlc", "accept": bool(ok)})
    return EXIT_OK if ok else EXIT_REJECT


# -- threshold ----------------------------------------------------------------------


def cmd_threshold_sign(args) -> int:
    rng = _rng(args)
    message = _read_message(args)
    if args.scheme == "acg":
        ring = env.parse_acg_ring(Path(args.ring).read_bytes())
        secrets_map = {}
        for path in args.keys:
            idx, s = env.parse_acg_secret(Path(path).read_bytes())
            secrets_map[idx] = s
        sig = acg_fs_sign(ring, secrets_map, len(secrets_map), message,
                          args.rounds, rng)
        _write(args.out, env.serialize_acg_fs_signature(sig, ring))
        _emit(args, {"scheme": "acg", "threshold": len(secrets_map),
                     "out": args.out})
    elif args.scheme == "dv":
        pubs = env.parse_dv_ring(Path(args.ring).read_bytes())
        signers = {}
        for path in args.keys:
            kp = env.parse_nr_private(Path(path).read_bytes())
            signers[pubs.index(kp.public)] = kp
        sig = dv_sign(pubs, signers, message, rng)
        _write(args.out, env.serialize_dv_signature(
            sig, pubs[0].m, pubs[0].t, pubs[0].n))
        _emit(args, {"scheme": "dv", "threshold": len(signers),
                     "attempts": sig.attempts, "out": args.out})
    else:
        raise SystemExit2(f"threshold-sign does not handle {args.scheme!r}")
    return EXIT_OK


def cmd_threshold_verify(args) -> int:
    message = _read_message(args)
    blob = Path(args.sig).read_bytes()
    if args.scheme == "acg":
        ring = env.parse_acg_ring(Path(args.ring).read_bytes())
        ok = acg_fs_verify(ring, message, env.parse_acg_fs_signature(blob))
    elif args.scheme == "dv":
        pubs = env.parse_dv_ring(Path(args.ring).read_bytes())
        ok = dv_verify(pubs, message, env.parse_dv_signature(blob))
    else:
        raise SystemExit2(f"threshold-verify does not handle {args.scheme!r}")
    _emit(args, {"scheme": args.scheme, "accept": bool(ok)})
    return EXIT_OK if ok else EXIT_REJECT


# -- blind --------------------------------------------------------------------------


def cmd_blind(args) -> int:
    rng = _rng(args)
    pk = env.parse_nr_public(Path(args.key).read_bytes())
    s, state = blind(pk, _read_message(args), args.p, args.subcode_dim, rng)
    _write(args.out_request, env.serialize_blind_request(s, pk))
    _write(args.out_state, env.serialize_blind_state(state, args.p, args.subcode_dim))
    _emit(args, {"request": args.out_request, "state": args.out_state})
    return EXIT_OK


def cmd_unblind(args) -> int:
    pk = env.parse_nr_public(Path(args.key).read_bytes())
    state = env.parse_blind_state(Path(args.state).read_bytes(), pk)
    _, header, payload = env.unpack(Path(args.sigma).read_bytes())
    sigma = BitVector.from_bytes(header["n"], payload)
    sig = unblind(state, sigma)
    if sig is None:
        sys.stderr.write("weight/syndrome check failed; re-run blinding\n")
        return EXIT_REJECT
    _write(args.out, env.serialize_blind_signature(
        sig, pk, state.r0.rows, state.kmat.rows))
    _emit(args, {"out": args.out})
    return EXIT_OK


def cmd_blind_verify(args) -> int:
    pk = env.parse_nr_public(Path(args.key).read_bytes())
    sig, header = env.parse_blind_signature(Path(args.sig).read_bytes())
    ok = blind_verify(pk, _read_message(args), sig, header["p"])
    _emit(args, {"scheme": "blind", "accept": bool(ok)})
    return EXIT_OK if ok else EXIT_REJECT


# -- identity-based --------------------------------------------------------------------


def cmd_extract(args) -> int:
    rng = _rng(args)
    kgc = env.parse_nr_private(Path(args.key).read_bytes())
    cred = kgc_extract(kgc, args.identity.encode(), mode=args.mode, rng=rng)
    _write(args.out, env.serialize_ibs_credential(cred, kgc.public.n))
    _emit(args, {"identity": args.identity, "counter": cred.counter,
                 "weight": cred.weight, "out": args.out})
    return EXIT_OK


def cmd_ibs_identify(args) -> int:
    rng = _rng(args)
    pk = env.parse_nr_public(Path(args.key).read_bytes())
    cred = env.parse_ibs_credential(Path(args.credential).read_bytes())
    if not credential_valid(pk, cred):
        sys.stderr.write("credential does not match the KGC public key\n")
        return EXIT_REJECT
    ok = ibs_identify(cred, pk, args.rounds, rng)
    _emit(args, {"scheme": "ibs", "rounds": args.rounds, "accept": bool(ok)})
    return EXIT_OK if ok else EXIT_REJECT


# -- cost ---------------------------------------------------------------------------


def cmd_cost(args) -> int:
    if args.advise:
        advice = scheme_param_advisor(args.advise, args.target)
        _emit(args, advice)
        return EXIT_OK
    if args.quantity:
        m, t, nn, ll = args.m, args.t, args.members, args.threshold
        val = quantity_A(m, t, nn, ll) if args.quantity == "A" else quantity_B(m, t, nn, ll)
        _emit(args, {"quantity": args.quantity, "value": val,
                     "log2": round(math.log2(val), 3)})
        return EXIT_OK
    reports = table1(TABLE1_PARAMS)
    if args.json:
        out = []
        for r in reports:
            out.append({
                "scheme": r.scheme,
                "pk_bits": r.pk_bits,
                "sig_bits": r.sig_bits,
                "sign_cost_bops": r.sign_cost_bops,
                "checks": {
                    name: {
                        "published": c.published_value,
                        "unit": c.published_unit,
                        "derived": round(c.derived_value, 4),
                        "rel_error": round(c.rel_error, 4),
                        "flagged": c.flagged,
                    }
                    for name, c in (("pk", r.pk_check), ("sig", r.sig_check),
                                    ("cost", r.cost_check))
                },
            })
        print(json.dumps(out, sort_keys=True))
    else:
        for r in reports:
            print(f"{r.scheme}:")
            print(f"  pk   {format_bits(r.pk_bits)}")
            print(f"  sig  {format_bits(r.sig_bits)}")
            print(f"  cost 2^{math.log2(r.sign_cost_bops):.1f} bops")
            for name, c in (("pk", r.pk_check), ("sig", r.sig_check),
                            ("cost", r.cost_check)):
                mark = "FLAG" if c.flagged else "ok"
                print(f"    {name}: published {c.published_value} {c.published_unit},"
                      f" derived {c.derived_value:.4f} ({mark})")
    return EXIT_OK


# -- bench --------------------------------------------------------------------------


def cmd_bench(args) -> int:
    rng = _rng(args)
    t0 = time.perf_counter()
    kp = nr_keygen(args.m, args.t, rng)
    t_keygen = time.perf_counter() - t0
    t0 = time.perf_counter()
    sigs = [cfs_sign(kp, f"bench{i}".encode(), "sequential")
            for i in range(args.messages)]
    t_sign = (time.perf_counter() - t0) / args.messages
    t0 = time.perf_counter()
    for i, sig in enumerate(sigs):
        cfs_verify(kp.public, f"bench{i}".encode(), sig)
    t_verify = (time.perf_counter() - t0) / args.messages
    _emit(args, {
        "scheme": "cfs", "m": args.m, "t": args.t,
        "keygen_s": round(t_keygen, 4),
        "sign_s": round(t_sign, 5),
        "verify_s": round(t_verify, 6),
        "mean_attempts": sum(s.attempts for s in sigs) / len(sigs),
    })
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="codesig",
                                 description="code-based signature toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, msg=False):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--json", action="store_true")
        if msg:
            p.add_argument("--message", default=None)
            p.add_argument("--message-file", default=None)

    p = sub.add_parser("keygen")
    common(p)
    p.add_argument("--scheme", required=True,
                   choices=["nr", "cfs", "stern", "kks", "zlc", "acg", "dv"])
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--n", type=int, default=32)
    p.add_argument("--k", type=int, default=16)
    p.add_argument("--r", type=int, default=24)
    p.add_argument("--n-prime", type=int, default=24)
    p.add_argument("--t1", type=int, default=8)
    p.add_argument("--t2", type=int, default=16)
    p.add_argument("--members", type=int, default=3)
    p.add_argument("--out-private", default="key.sk.cbsg")
    p.add_argument("--out-public", default="key.pk.cbsg")
    p.add_argument("--out-dir", default="ring")
    p.set_defaults(fn=cmd_keygen)

    p = sub.add_parser("sign")
    common(p, msg=True)
    p.add_argument("--scheme", required=True,
                   choices=["cfs", "stern", "kks", "blind"])
    p.add_argument("--key", required=True)
    p.add_argument("--mode", default="sequential",
                   choices=["sequential", "random"])
    p.add_argument("--rounds", type=int, default=28)
    p.add_argument("--raw-bits", default=None)
    p.add_argument("--request", default=None)
    p.add_argument("--out", default="sig.cbsg")
    p.set_defaults(fn=cmd_sign)

    p = sub.add_parser("verify")
    common(p, msg=True)
    p.add_argument("--scheme", required=True, choices=["cfs", "stern", "kks"])
    p.add_argument("--key", required=True)
    p.add_argument("--sig", required=True)
    p.add_argument("--raw-bits", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("identify")
    common(p)
    p.add_argument("--protocol", default="stern",
                   choices=["stern", "acg", "ibs"])
    p.add_argument("--adversary", default=None,
                   choices=["honest", "optimal-cheater", "replay", "bit-flipper"])
    p.add_argument("--rounds", type=int, default=28)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--key", default=None)
    p.add_argument("--transcript", default=None,
                   help="write a JSON-lines transcript log here")
    p.set_defaults(fn=cmd_identify)

    p = sub.add_parser("ring-sign")
    common(p, msg=True)
    p.add_argument("--ring", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--out", default="ringsig.cbsg")
    p.set_defaults(fn=cmd_ring_sign)

    p = sub.add_parser("ring-verify")
    common(p, msg=True)
    p.add_argument("--ring", required=True)
    p.add_argument("--sig", required=True)
    p.set_defaults(fn=cmd_ring_verify)

    p = sub.add_parser("threshold-sign")
    common(p, msg=True)
    p.add_argument("--scheme", required=True, choices=["acg", "dv"])
    p.add_argument("--ring", required=True)
    p.add_argument("--keys", nargs="+", required=True)
    p.add_argument("--rounds", type=int, default=16)
    p.add_argument("--out", default="thresholdsig.cbsg")
    p.set_defaults(fn=cmd_threshold_sign)

    p = sub.add_parser("threshold-verify")
    common(p, msg=True)
    p.add_argument("--scheme", required=True, choices=["acg", "dv"])
    p.add_argument("--ring", required=True)
    p.add_argument("--sig", required=True)
    p.set_defaults(fn=cmd_threshold_verify)

    p = sub.add_parser("blind")
    common(p, msg=True)
    p.add_argument("--key", required=True)
    p.add_argument("--p", type=int, default=4)
    p.add_argument("--subcode-dim", "--L", type=int, default=2, dest="subcode_dim")
    p.add_argument("--out-request", default="blind.req.cbsg")
    p.add_argument("--out-state", default="blind.state.cbsg")
    p.set_defaults(fn=cmd_blind)

    p = sub.add_parser("unblind")
    common(p)
    p.add_argument("--key", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--sigma", required=True)
    p.add_argument("--out", default="blindsig.cbsg")
    p.set_defaults(fn=cmd_unblind)

    p = sub.add_parser("blind-verify")
    common(p, msg=True)
    p.add_argument("--key", required=True)
    p.add_argument("--sig", required=True)
    p.set_defaults(fn=cmd_blind_verify)

    p = sub.add_parser("extract")
    common(p)
    p.add_argument("--key", required=True, help="KGC private key")
    p.add_argument("--identity", required=True)
    p.add_argument("--mode", default="random", choices=["sequential", "random"])
    p.add_argument("--out", default="credential.cbsg")
    p.set_defaults(fn=cmd_extract)

    p = sub.add_parser("ibs-identify")
    common(p)
    p.add_argument("--key", required=True, help="KGC public key")
    p.add_argument("--credential", required=True)
    p.add_argument("--rounds", type=int, default=28)
    p.set_defaults(fn=cmd_ibs_identify)

    p = sub.add_parser("cost")
    common(p)
    p.add_argument("--preset", default="table1", choices=["table1"])
    p.add_argument("--quantity", default=None, choices=["A", "B"])
    p.add_argument("--m", type=int, default=TABLE1_PARAMS.m)
    p.add_argument("--t", type=int, default=TABLE1_PARAMS.t)
    p.add_argument("--members", type=int, default=TABLE1_PARAMS.n_members)
    p.add_argument("--threshold", type=int, default=TABLE1_PARAMS.threshold)
    p.add_argument("--advise", default=None,
                   help="scheme name for published parameter advice")
    p.add_argument("--target", default="80bit")
    p.set_defaults(fn=cmd_cost)

    p = sub.add_parser("bench")
    common(p)
    p.add_argument("--scheme", default="cfs", choices=["cfs"])
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--messages", type=int, default=20)
    p.set_defaults(fn=cmd_bench)

    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (AttemptBudgetExceeded, KeygenExhausted) as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except FileNotFoundError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except CodesigError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_REJECT


if __name__ == "__main__":
    sys.exit(main())
