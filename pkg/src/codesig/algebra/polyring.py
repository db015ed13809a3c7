"""Univariate polynomials over GF(2^m).

A polynomial is a tuple of field elements, index = degree, normalized so the
last entry is nonzero; the zero polynomial is the empty tuple.  This is the
workhorse behind Goppa decoding (inverses, square roots and the partial
Euclidean split modulo the Goppa polynomial) and behind the threshold
scheme's Lagrange interpolation over GF(2^{mt}).
"""

from __future__ import annotations

from ..errors import ParameterInvalid
from ..rng import Rng
from .gf2m import Gf2mField

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def degree(p: Poly) -> int:
    """Degree, with deg(0) = -1."""
    return len(p) - 1


class PolyRing:
    """Arithmetic in GF(2^m)[z]."""

    def __init__(self, field: Gf2mField):
        self.field = field

    @staticmethod
    def normalize(coeffs) -> Poly:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def add(self, p: Poly, q: Poly) -> Poly:
        if len(p) < len(q):
            p, q = q, p
        out = list(p)
        for i, c in enumerate(q):
            out[i] ^= c
        return self.normalize(out)

    def scale(self, p: Poly, c: int) -> Poly:
        if c == 0:
            return ZERO
        mul = self.field.mul
        return self.normalize(mul(a, c) for a in p)

    def mul(self, p: Poly, q: Poly) -> Poly:
        if not p or not q:
            return ZERO
        out = [0] * (len(p) + len(q) - 1)
        fmul = self.field.mul
        for i, a in enumerate(p):
            if a == 0:
                continue
            for j, b in enumerate(q):
                if b:
                    out[i + j] ^= fmul(a, b)
        return self.normalize(out)

    def divmod(self, p: Poly, q: Poly) -> tuple[Poly, Poly]:
        if not q:
            raise ZeroDivisionError("polynomial division by zero")
        if degree(p) < degree(q):
            return ZERO, p
        field = self.field
        inv_lead = field.inv(q[-1])
        rem = list(p)
        quo = [0] * (len(p) - len(q) + 1)
        for shift in range(len(p) - len(q), -1, -1):
            lead = rem[shift + len(q) - 1]
            if lead == 0:
                continue
            factor = field.mul(lead, inv_lead)
            quo[shift] = factor
            for i, c in enumerate(q):
                if c:
                    rem[shift + i] ^= field.mul(factor, c)
        return self.normalize(quo), self.normalize(rem)

    def mod(self, p: Poly, q: Poly) -> Poly:
        return self.divmod(p, q)[1]

    def mulmod(self, p: Poly, q: Poly, g: Poly) -> Poly:
        return self.mod(self.mul(p, q), g)

    def monic(self, p: Poly) -> Poly:
        if not p:
            return ZERO
        return self.scale(p, self.field.inv(p[-1]))

    def gcd(self, p: Poly, q: Poly) -> Poly:
        while q:
            p, q = q, self.mod(p, q)
        return self.monic(p)

    def inv_mod(self, p: Poly, g: Poly) -> Poly:
        """Inverse of p modulo g; requires gcd(p, g) constant."""
        p = self.mod(p, g)
        if not p:
            raise ZeroDivisionError("not invertible: zero polynomial")
        r0, r1 = g, p
        s0, s1 = ZERO, ONE
        while degree(r1) > 0:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.add(s0, self.mul(q, s1))
        if not r1:
            raise ZeroDivisionError("not invertible modulo g")
        return self.mod(self.scale(s1, self.field.inv(r1[0])), g)

    def eval(self, p: Poly, x: int) -> int:
        acc = 0
        mul = self.field.mul
        for c in reversed(p):
            acc = mul(acc, x) ^ c
        return acc

    def square_mod(self, p: Poly, g: Poly) -> Poly:
        """p^2 mod g; squaring is coefficient-wise squaring with spread."""
        if not p:
            return ZERO
        out = [0] * (2 * len(p) - 1)
        fmul = self.field.mul
        for i, c in enumerate(p):
            if c:
                out[2 * i] = fmul(c, c)
        return self.mod(self.normalize(out), g)

    def sqrt_z_mod(self, g: Poly) -> Poly:
        """sqrt(z) modulo g for irreducible g: z^(2^(m*deg(g)-1)) mod g."""
        total_sq = self.field.m * degree(g) - 1
        p = self.mod(X, g)
        for _ in range(total_sq):
            p = self.square_mod(p, g)
        return p

    def sqrt_mod(self, p: Poly, g: Poly, sqrt_z: Poly) -> Poly:
        """Square root modulo irreducible g via the even/odd split.

        p(z) = A(z^2) + z B(z^2)  =>  sqrt(p) = A_s(z) + sqrt(z) B_s(z),
        with A_s, B_s the coefficient-wise field square roots.
        """
        fsqrt = self.field.sqrt
        even = self.normalize(fsqrt(c) for c in p[0::2])
        odd = self.normalize(fsqrt(c) for c in p[1::2])
        return self.add(even, self.mulmod(odd, sqrt_z, g))

    def frobenius(self, p: Poly, g: Poly) -> Poly:
        """p^(2^m) mod g (m squarings)."""
        for _ in range(self.field.m):
            p = self.square_mod(p, g)
        return p

    def is_irreducible(self, p: Poly) -> bool:
        """Rabin's test over GF(q), q = 2^m."""
        d = degree(p)
        if d <= 0:
            return False
        if d == 1:
            return True
        # x^(q^d) == x mod p
        power = self.mod(X, p)
        powers = [power]
        for _ in range(d):
            power = self.frobenius(power, p)
            powers.append(power)
        if powers[d] != self.mod(X, p):
            return False
        # gcd(x^(q^(d/r)) - x, p) must be constant for every prime r | d
        for r in _prime_divisors(d):
            diff = self.add(powers[d // r], X)
            if degree(self.gcd(diff, p)) > 0:
                return False
        return True

    def random_monic_irreducible(self, t: int, rng: Rng, max_tries: int = 4000) -> Poly:
        """Random monic irreducible of degree t (rejection, density ~1/t)."""
        if t < 1:
            raise ParameterInvalid("degree must be >= 1")
        q = self.field.order
        for _ in range(max_tries):
            coeffs = [rng.randrange(q) for _ in range(t)] + [1]
            if coeffs[0] == 0:
                coeffs[0] = 1 + rng.randrange(q - 1)
            cand = tuple(coeffs)
            if self.is_irreducible(cand):
                return cand
        raise ParameterInvalid("no irreducible polynomial found within the retry cap")

    def interpolate(self, points: list[tuple[int, int]]) -> Poly:
        """Lagrange interpolation through distinct abscissas."""
        xs = [x for x, _ in points]
        if len(set(xs)) != len(xs):
            raise ParameterInvalid("interpolation abscissas must be distinct")
        field = self.field
        acc = ZERO
        for i, (xi, yi) in enumerate(points):
            if yi == 0:
                continue
            num = ONE
            denom = 1
            for j, (xj, _) in enumerate(points):
                if j == i:
                    continue
                num = self.mul(num, (xj, 1))  # (z - xj) == (z + xj)
                denom = field.mul(denom, xi ^ xj)
            acc = self.add(acc, self.scale(num, field.div(yi, denom)))
        return acc


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
