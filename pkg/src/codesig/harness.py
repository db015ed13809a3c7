"""In-process prover/verifier driver with pluggable adversaries.

Measures empirical acceptance rates of the interactive protocols (Stern,
ACG threshold, identity-based) under four adversary profiles:

* honest         - the real prover; acceptance must be 1.0;
* optimal-cheater - best known impersonator, no private key material
                    (enforced by construction: it is built from the public
                    instance only); per-round acceptance 2/3;
* replay         - replays an eavesdropped transcript against fresh
                    challenges; succeeds only when the challenge repeats
                    (1/3 per round);
* bit-flipper    - honest prover whose response vector loses one bit;
                    acceptance 0.

Each trial forks its own random stream off the master seed, so trials are
order-independent and the whole run is reproducible byte for byte.  Results
carry Wilson confidence intervals; an optional JSON-lines log records one
record per protocol pass.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, TextIO

from .errors import ParameterInvalid
from .goppa import nr_keygen
from .ibs import kgc_extract, stern_instance
from .rng import Rng
from .stern import (
    OptimalCheater,
    RevealClear,
    RevealMasked,
    RevealPermuted,
    SternKeyPair,
    check,
    commit,
    respond,
    stern_keygen,
)
from .threshold import (
    AcgCheater,
    AcgRevealClear,
    AcgRevealMasked,
    AcgRevealPermuted,
    acg_check,
    acg_commit,
    acg_keygen,
    acg_respond,
)

PROFILES = ("honest", "optimal-cheater", "replay", "bit-flipper")
PROTOCOLS = ("stern", "acg", "ibs")

DESK_PARAMS = {
    "stern": {"n": 32, "k": 16, "t": 4},
    "acg": {"n": 24, "k": 12, "t": 3, "N": 3, "l": 2},
    "ibs": {"m": 6, "t": 2},
}


@dataclass(frozen=True)
class AdversaryProfile:
    kind: str
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in PROFILES:
            raise ParameterInvalid(f"adversary {self.kind!r} not in {PROFILES}")


def wilson_interval(successes: int, trials: int, z: float = 1.96) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials == 0:
        return 0.0, 1.0
    p = successes / trials
    denom = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def _flip_one_bit(resp, rng: Rng):
    """Corrupt one bit of the response's leading vector."""
    if isinstance(resp, RevealClear):
        return RevealClear(resp.u.flip(rng.randrange(resp.u.n)), resp.sigma)
    if isinstance(resp, RevealMasked):
        return RevealMasked(resp.v.flip(rng.randrange(resp.v.n)), resp.sigma)
    if isinstance(resp, RevealPermuted):
        return RevealPermuted(resp.pu.flip(rng.randrange(resp.pu.n)), resp.ps)
    if isinstance(resp, (AcgRevealClear, AcgRevealMasked)):
        vecs = list(resp.zs if isinstance(resp, AcgRevealClear) else resp.xs)
        i = rng.randrange(len(vecs))
        vecs[i] = vecs[i].flip(rng.randrange(vecs[i].n))
        cls = type(resp)
        if isinstance(resp, AcgRevealClear):
            return cls(tuple(vecs), resp.pi, resp.sigmas)
        return cls(tuple(vecs), resp.pi, resp.sigmas)
    if isinstance(resp, AcgRevealPermuted):
        pz = list(resp.pz)
        i = rng.randrange(len(pz))
        pz[i] = pz[i].flip(rng.randrange(pz[i].n))
        return AcgRevealPermuted(tuple(pz), resp.ps)
    raise ParameterInvalid("unknown response type")


def _stern_like_round(key: SternKeyPair, profile: AdversaryProfile, rng: Rng):
    """One round under a profile; returns (accepted, log_record_fields)."""
    pub = key.public
    if profile.kind == "honest":
        state, coms = commit(key, rng)
        b = rng.randrange(3)
        resp = respond(state, b)
        ok = check(pub, coms, b, resp)
    elif profile.kind == "optimal-cheater":
        cheater = OptimalCheater(pub, rng)
        state, coms = cheater.commit()
        b = rng.randrange(3)
        resp = cheater.respond(state, b)
        ok = check(pub, coms, b, resp)
    elif profile.kind == "replay":
        # eavesdrop one honest round, then replay against a fresh challenge
        state, coms = commit(key, rng)
        observed_b = rng.randrange(3)
        observed_resp = respond(state, observed_b)
        b = rng.randrange(3)
        ok = b == observed_b and check(pub, coms, b, observed_resp)
        resp = observed_resp
    elif profile.kind == "bit-flipper":
        state, coms = commit(key, rng)
        b = rng.randrange(3)
        resp = _flip_one_bit(respond(state, b), rng)
        ok = check(pub, coms, b, resp)
    else:  # pragma: no cover
        raise ParameterInvalid(profile.kind)
    return ok, coms, b


def _acg_round(ring, secrets, threshold, profile: AdversaryProfile, rng: Rng):
    if profile.kind == "honest":
        state, coms = acg_commit(ring, secrets, threshold, rng)
        b = rng.randrange(3)
        resp = acg_respond(state, b)
        ok = acg_check(ring, threshold, coms, b, resp)
    elif profile.kind == "optimal-cheater":
        cheater = AcgCheater(ring, threshold, rng)
        ok = cheater.round()
        coms, b = None, None
    elif profile.kind == "replay":
        state, coms = acg_commit(ring, secrets, threshold, rng)
        observed_b = rng.randrange(3)
        observed = acg_respond(state, observed_b)
        b = rng.randrange(3)
        ok = b == observed_b and acg_check(ring, threshold, coms, b, observed)
    elif profile.kind == "bit-flipper":
        state, coms = acg_commit(ring, secrets, threshold, rng)
        b = rng.randrange(3)
        resp = _flip_one_bit(acg_respond(state, b), rng)
        ok = acg_check(ring, threshold, coms, b, resp)
    else:  # pragma: no cover
        raise ParameterInvalid(profile.kind)
    return ok, coms, b


def build_instance(protocol: str, rng: Rng, params: dict | None = None):
    """Desk-scale instance for a protocol; returns an opaque context."""
    cfg = dict(DESK_PARAMS[protocol])
    if params:
        cfg.update(params)
    if protocol == "stern":
        return {"key": stern_keygen(cfg["n"], cfg["k"], cfg["t"], rng)}
    if protocol == "acg":
        ring, secrets = acg_keygen(cfg["n"], cfg["k"], cfg["t"], cfg["N"], rng)
        chosen = dict(list(enumerate(secrets))[: cfg["l"]])
        return {"ring": ring, "secrets": chosen, "l": cfg["l"]}
    if protocol == "ibs":
        kgc = nr_keygen(cfg["m"], cfg["t"], rng)
        cred = kgc_extract(kgc, b"harness@example", "random", rng)
        return {"key": stern_instance(kgc.public, cred)}
    raise ParameterInvalid(f"protocol {protocol!r} not in {PROTOCOLS}")


def harness_run(
    protocol: str,
    profile: AdversaryProfile,
    rounds: int,
    trials: int,
    seed: int | None = None,
    params: dict | None = None,
    log: TextIO | None = None,
) -> dict:
    """Acceptance statistics for `trials` protocols of `rounds` rounds each."""
    if protocol not in PROTOCOLS:
        raise ParameterInvalid(f"protocol {protocol!r} not in {PROTOCOLS}")
    if rounds < 1 or trials < 1:
        raise ParameterInvalid("rounds and trials must be positive")
    master = Rng(seed)
    instance = build_instance(protocol, master.fork(), params)
    round_ok = 0
    full_ok = 0
    for trial in range(trials):
        trial_rng = master.fork()
        all_ok = True
        for rnd in range(rounds):
            if protocol == "acg":
                ok, coms, b = _acg_round(
                    instance["ring"], instance["secrets"], instance["l"],
                    profile, trial_rng,
                )
            else:
                ok, coms, b = _stern_like_round(instance["key"], profile, trial_rng)
            round_ok += ok
            all_ok = all_ok and ok
            if log is not None:
                _log_round(log, trial, rnd, coms, b, ok)
        full_ok += all_ok
    per_round = round_ok / (trials * rounds)
    full = full_ok / trials
    return {
        "protocol": protocol,
        "adversary": profile.kind,
        "rounds": rounds,
        "trials": trials,
        "per_round_acceptance": per_round,
        "per_round_ci95": wilson_interval(round_ok, trials * rounds),
        "full_acceptance": full,
        "full_ci95": wilson_interval(full_ok, trials),
    }


def _log_round(log: TextIO, trial: int, rnd: int, coms, b, ok: bool) -> None:
    base = {"trial": trial, "round": rnd}
    if coms is not None:
        log.write(json.dumps({**base, "pass": "commit",
                              "c1": coms.c1.hex(), "c2": coms.c2.hex(),
                              "c3": coms.c3.hex()}) + "\n")
    if b is not None:
        log.write(json.dumps({**base, "pass": "challenge", "b": b}) + "\n")
    log.write(json.dumps({**base, "pass": "verdict", "accept": bool(ok)}) + "\n")
