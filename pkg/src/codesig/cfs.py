"""The CFS signature: hash-and-decode with a retry counter.

Sign by hashing the message together with a counter until the result is a
decodable syndrome of the hidden Goppa code; about one counter in t! works,
so signing costs an expected t! decoding attempts.  Two counter modes:

* "sequential": i = 1, 2, 3, ... (the original construction);
* "random": i drawn uniformly from {1, ..., 2^(n-k)} per attempt (the mCFS
  variant, which is the one with a random-oracle security proof).

Published 80-bit parameter sets, (m, t) in {(21, 10), (19, 11), (15, 12)},
are exposed through costmodel.scheme_param_advisor; note t! ~ 4.8e8 attempts
makes them far beyond desk-scale signing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import BitVector
from .errors import AttemptBudgetExceeded, ParameterInvalid, resolve_budget
from .goppa import NiederreiterKeyPair, NiederreiterPublicKey, trapdoor_solve
from .hashing import counter_hash
from .rng import Rng

DEFAULT_BUDGET = 10**6

MODES = ("sequential", "random")


@dataclass(frozen=True)
class CfsSignature:
    """(counter, error word); the error word has weight <= t."""

    counter: int
    error: BitVector
    m: int
    t: int
    attempts: int = field(compare=False, default=0)


def cfs_sign(
    kp: NiederreiterKeyPair,
    message: bytes,
    mode: str = "sequential",
    rng: Rng | None = None,
    budget: int | None = None,
) -> CfsSignature:
    """Loop counters until h(h(M)|i) decodes; expected ~t! attempts."""
    if mode not in MODES:
        raise ParameterInvalid(f"mode {mode!r} not in {MODES}")
    if mode == "random" and rng is None:
        raise ParameterInvalid("random counter mode needs an rng")
    cap = resolve_budget(budget, DEFAULT_BUDGET)
    nbits = kp.public.syndrome_bits
    counter_space = 1 << nbits
    for attempt in range(1, cap + 1):
        i = attempt if mode == "sequential" else 1 + rng.randrange(counter_space)
        z = trapdoor_solve(kp, counter_hash(message, i, nbits))
        if z is not None:
            return CfsSignature(i, z, kp.public.m, kp.public.t, attempts=attempt)
    raise AttemptBudgetExceeded(
        f"no decodable syndrome within {cap} attempts; parameters likely invalid"
    )


def cfs_verify(pk: NiederreiterPublicKey, message: bytes, sig: CfsSignature) -> bool:
    """Accept iff weight(z) <= t and H z^T = h(h(M)|i)."""
    if not isinstance(sig, CfsSignature):
        return False
    if sig.error.n != pk.n or sig.counter < 1:
        return False
    if sig.error.weight() > pk.t:
        return False
    expect = counter_hash(message, sig.counter, pk.syndrome_bits)
    return pk.h.mul_vec(sig.error) == expect
