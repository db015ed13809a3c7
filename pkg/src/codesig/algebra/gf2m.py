"""GF(2^m) arithmetic on integer-coded elements.

An element is an integer in [0, 2^m) whose bit i is the coefficient of x^i
in the polynomial basis.  Addition is XOR.  Multiplication reduces modulo a
fixed irreducible polynomial; by default the lexicographically smallest
irreducible of degree m, so independently built fields agree element-wise.

Construction verifies irreducibility of the modulus exhaustively (trial
division by every polynomial of degree <= m/2), and for table-backed fields
additionally that every nonzero element is a power of the chosen generator,
which re-proves invertibility of all nonzero elements.
"""

from __future__ import annotations

from ..errors import ParameterInvalid

MAX_DEGREE = 20
_TABLE_DEGREE_CAP = 16  # log/antilog tables above this cost more than they save


def _gf2_degree(p: int) -> int:
    return p.bit_length() - 1


def _gf2_mod(a: int, b: int) -> int:
    """Remainder of carry-less division in GF(2)[x]."""
    db = _gf2_degree(b)
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def gf2_poly_irreducible(p: int) -> bool:
    """Exhaustive irreducibility test for a binary polynomial (degree <= 20)."""
    d = _gf2_degree(p)
    if d <= 0:
        return False
    if d > MAX_DEGREE:
        raise ParameterInvalid(f"degree {d} above exhaustive-check cap {MAX_DEGREE}")
    if d == 1:
        return True
    if not (p & 1):  # divisible by x
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if _gf2_degree(q) >= 1 and _gf2_mod(p, q) == 0:
            return False
    return True


def lowest_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible binary polynomial of degree m."""
    for p in range((1 << m) + 1, 1 << (m + 1), 2):
        if gf2_poly_irreducible(p):
            return p
    raise ParameterInvalid(f"no irreducible of degree {m}")  # unreachable


class Gf2mField:
    """The finite field GF(2^m), 2 <= m <= 20.

    Fields with m <= 16 build log/antilog tables at construction; larger
    fields multiply by shift-and-reduce.  Instances are immutable and safe
    to share.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not 2 <= m <= MAX_DEGREE:
            raise ParameterInvalid(f"extension degree {m} outside [2, {MAX_DEGREE}]")
        if modulus is None:
            modulus = lowest_irreducible(m)
        if _gf2_degree(modulus) != m:
            raise ParameterInvalid(f"modulus degree is not {m}")
        if not gf2_poly_irreducible(modulus):
            raise ParameterInvalid(f"modulus 0b{modulus:b} is reducible")
        self.m = m
        self.order = 1 << m
        self.modulus = modulus
        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        if m <= _TABLE_DEGREE_CAP:
            self._build_tables()

    # -- raw shift-and-reduce product, table-independent ---------------------

    def _mul_raw(self, a: int, b: int) -> int:
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a & self.order:
                a ^= self.modulus
        return acc

    def _build_tables(self) -> None:
        size = self.order - 1
        for gen in range(2, self.order):
            exp = [0] * size
            cur, ok = 1, True
            for i in range(size):
                exp[i] = cur
                cur = self._mul_raw(cur, gen)
                if cur == 1 and i != size - 1:
                    ok = False  # generator candidate has small order
                    break
            if ok and cur == 1:
                log = [0] * self.order
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp, self._log = exp, log
                return
        raise ParameterInvalid("no multiplicative generator found")  # unreachable

    # -- public arithmetic ----------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^m)")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def sqrt(self, a: int) -> int:
        """Unique square root (squaring is a bijection in characteristic 2)."""
        if self._exp is not None and a:
            la = self._log[a]
            half = la // 2 if la % 2 == 0 else (la + self.order - 1) // 2
            return self._exp[half % (self.order - 1)]
        for _ in range(self.m - 1):
            a = self.mul(a, a)
        return a

    def elements(self):
        return range(self.order)

    def __eq__(self, other):
        return (
            isinstance(other, Gf2mField)
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return f"Gf2mField(m={self.m}, modulus=0b{self.modulus:b})"
