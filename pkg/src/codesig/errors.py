"""Exception types shared across the toolkit.

Decoding failure is never an exception: decoders return None ("undecodable")
because the CFS-style signing loops branch on it.  Exceptions are reserved
for contract violations and exhausted retry budgets.
"""

from __future__ import annotations

import os


class CodesigError(Exception):
    """Base class for all toolkit errors."""


class ParameterInvalid(CodesigError, ValueError):
    """Scheme parameters violate a structural constraint (e.g. mt >= 2^m)."""


class DimensionMismatch(CodesigError, ValueError):
    """Vector/matrix shapes are incompatible."""


class WeightInvalid(CodesigError, ValueError):
    """A vector's Hamming weight violates an operation's precondition."""


class WeightMismatch(CodesigError, ValueError):
    """Constant-weight encoding applied to a vector of the wrong weight."""


class IndexOutOfRange(CodesigError, ValueError):
    """Combinatorial rank outside [0, C(n, t))."""


class OracleTooLarge(CodesigError, ValueError):
    """Brute-force search space exceeds the test-only enumeration cap."""


class ZeroMessage(CodesigError, ValueError):
    """KKS cannot sign the zero message (weight bound unsatisfiable)."""


class UnknownScheme(CodesigError, ValueError):
    """Scheme name not in the implemented set."""


class AttemptBudgetExceeded(CodesigError, RuntimeError):
    """A retry loop (CFS counters, ring glue, blinding) ran out of attempts.

    Signals mis-parameterization: at sane desk parameters the expected number
    of attempts is around t!.
    """


class KeygenExhausted(CodesigError, RuntimeError):
    """Rejection sampling in key generation hit its retry cap."""


class EnvelopeError(CodesigError, ValueError):
    """Serialized envelope is malformed or fails its integrity digest."""


#: Environment variable overriding every retry cap in the toolkit.
ATTEMPT_BUDGET_ENV = "CBSG_ATTEMPT_BUDGET"


def resolve_budget(explicit: int | None, default: int) -> int:
    """Retry-cap resolution order: explicit argument, environment, default."""
    if explicit is not None:
        return explicit
    env = os.environ.get(ATTEMPT_BUDGET_ENV)
    if env is not None:
        return int(env)
    return default
