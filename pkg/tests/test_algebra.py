"""Field arithmetic, packed linear algebra, ranking, and the SD oracle."""

import math
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codesig.algebra import (
    BitMatrix,
    BitVector,
    Gf2mField,
    Permutation,
    cw_rank,
    cw_unrank,
    lowest_irreducible,
    random_bitvector,
    random_invertible,
    random_permutation,
    random_weight_vector,
    sd_bruteforce,
    solve_linear,
)
from codesig.errors import (
    IndexOutOfRange,
    OracleTooLarge,
    ParameterInvalid,
    WeightMismatch,
)
from codesig.rng import Rng

# -- GF(2^m) -------------------------------------------------------------------


def _shift_reduce_mul(a, b, modulus, m):
    """Independent row-by-row product used as the multiplication oracle."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a >> m:
            a ^= modulus
    return acc


def test_lowest_lex_moduli_match_exhaustive_search():
    # oracle: trial division over all smaller-degree binary polynomials
    def irreducible(p, d):
        for q in range(2, 1 << (d // 2 + 1)):
            if q.bit_length() >= 2:
                r = p
                while r.bit_length() - 1 >= q.bit_length() - 1 and r:
                    r ^= q << (r.bit_length() - q.bit_length())
                if r == 0:
                    return False
        return True

    for m in range(2, 11):
        expect = next(
            p for p in range((1 << m) + 1, 1 << (m + 1), 2) if irreducible(p, m)
        )
        assert lowest_irreducible(m) == expect
        assert Gf2mField(m).modulus == expect


def test_mul_identity_and_absorbing():
    f = Gf2mField(6)
    for a in (0, 1, 5, 63):
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0


def test_gf8_x_times_x_squared():
    # log table built by repeated shift-reduce gives x * x^2 = x + 1
    f = Gf2mField(3)
    oracle = _shift_reduce_mul(0b010, 0b100, f.modulus, 3)
    assert oracle == 0b011
    assert f.mul(0b010, 0b100) == oracle


@pytest.mark.parametrize("m", [2, 3, 4])
def test_field_axioms_exhaustive_small(m):
    f = Gf2mField(m)
    q = f.order
    for a in range(q):
        for b in range(q):
            assert f.mul(a, b) == f.mul(b, a)
            assert f.mul(a, b) == _shift_reduce_mul(a, b, f.modulus, m)
            for c in range(q):
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)


@pytest.mark.parametrize("m", [5, 6, 7, 8])
def test_field_inverse_and_commutativity_exhaustive(m):
    f = Gf2mField(m)
    for a in range(1, f.order):
        assert f.mul(a, f.inv(a)) == 1
    for a in range(0, f.order, 7):
        for b in range(0, f.order, 5):
            assert f.mul(a, b) == f.mul(b, a)


@given(st.integers(2, 8), st.data())
@settings(max_examples=60, deadline=None)
def test_field_axioms_sampled(m, data):
    f = Gf2mField(m)
    a = data.draw(st.integers(0, f.order - 1))
    b = data.draw(st.integers(0, f.order - 1))
    c = data.draw(st.integers(0, f.order - 1))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
    assert f.mul(f.sqrt(a), f.sqrt(a)) == a


def test_reducible_modulus_rejected():
    with pytest.raises(ParameterInvalid):
        Gf2mField(4, 0b10101)  # x^4 + x^2 + 1 = (x^2 + x + 1)^2


def test_untabled_field_matches_tabled():
    small = Gf2mField(8)
    big = Gf2mField(8)
    big._exp = big._log = None  # force the shift-reduce path on one instance
    rng = Rng(5)
    for _ in range(200):
        a, b = rng.randrange(256), rng.randrange(256)
        assert small.mul(a, b) == big.mul(a, b)
        if a:
            assert small.inv(a) == big.inv(a)


# -- solve_linear ----------------------------------------------------------------


def test_solve_zero_rhs_trivial(rng):
    h = BitMatrix.random(5, 9, rng)
    x = solve_linear(h, BitVector(5, 0))
    assert x is not None and h.mul_vec(x).is_zero()


def test_solve_identity_block():
    # identity padded with zero columns: solution is s on the identity block
    rows = [(1 << i) for i in range(4)]
    hpad = BitMatrix(4, 8, rows)
    s = BitVector(4, 0b1010)
    x = solve_linear(hpad, s)
    assert x == BitVector(8, 0b1010)


def test_solve_matches_exhaustive_search(rng):
    # oracle: try all 256 candidate vectors
    for trial in range(20):
        h = BitMatrix.random(4, 8, rng)
        s = random_bitvector(4, rng)
        expect_any = [x for x in range(256) if h.mul_vec(BitVector(8, x)) == s]
        got = solve_linear(h, s)
        if expect_any:
            assert got is not None and h.mul_vec(got) == s
        else:
            assert got is None


def test_solve_dimension_mismatch(rng):
    h = BitMatrix.random(4, 8, rng)
    with pytest.raises(Exception):
        solve_linear(h, BitVector(5, 0))


# -- sd_bruteforce ------------------------------------------------------------------


def test_oracle_zero_syndrome(rng):
    h = BitMatrix.random(6, 12, rng)
    assert sd_bruteforce(h, BitVector(6, 0), 3) == BitVector(12, 0)


def test_oracle_unit_column():
    # H = [I | A]: a syndrome equal to identity column j inverts to e_j
    rng = Rng(17)
    a = BitMatrix.random(6, 6, rng)
    rows = [(1 << i) | (a.row_ints()[i] << 6) for i in range(6)]
    h = BitMatrix(6, 12, rows)
    for j in range(6):
        got = sd_bruteforce(h, BitVector(6, 1 << j), 1)
        assert got == BitVector.from_indices(12, [j])


def test_oracle_finds_planted_weight2(rng):
    # full enumeration over C(12,<=2) = 79 candidates
    assert comb(12, 2) + 12 + 1 == 79
    for _ in range(25):
        h = BitMatrix.random(6, 12, rng)
        e = random_weight_vector(12, 2, rng)
        got = sd_bruteforce(h, h.mul_vec(e), 2)
        assert got is not None
        assert h.mul_vec(got) == h.mul_vec(e)
        assert got.weight() <= 2


def test_oracle_weight_minimality_and_lex_tie_break(rng):
    for _ in range(10):
        h = BitMatrix.random(5, 10, rng)
        x = random_weight_vector(10, 3, rng)
        s = h.mul_vec(x)
        got = sd_bruteforce(h, s, 3)
        assert got is not None and got.weight() <= x.weight()
        # no strictly lighter solution exists
        for w in range(got.weight()):
            for combo in combinations(range(10), w):
                assert h.mul_vec(BitVector.from_indices(10, combo)) != s
        # lexicographically smallest within the winning weight
        w = got.weight()
        for combo in combinations(range(10), w):
            v = BitVector.from_indices(10, [10 - 1 - j for j in combo])
            if v == got:
                break
            assert h.mul_vec(v) != s


def test_oracle_candidate_cap():
    h = BitMatrix.zeros(4, 40)
    with pytest.raises(OracleTooLarge):
        sd_bruteforce(h, BitVector(4, 1), 20, max_candidates=1000)


# -- constant weight ranking -----------------------------------------------------------


def test_cw_rank_extremes():
    first = BitVector.from_indices(8, [5, 6, 7])  # smallest as a 0/1 string
    last = BitVector.from_indices(8, [0, 1, 2])
    assert cw_rank(first) == 0
    assert cw_rank(last) == comb(8, 3) - 1
    assert cw_unrank(8, 3, 0) == first
    assert cw_unrank(8, 3, comb(8, 3) - 1) == last


def test_cw_roundtrip_full_stratum():
    seen = set()
    for idx in range(comb(8, 3)):
        v = cw_unrank(8, 3, idx)
        assert v.weight() == 3
        assert cw_rank(v) == idx
        seen.add(v.bits)
    assert len(seen) == 56


@given(st.integers(1, 16), st.data())
@settings(max_examples=80, deadline=None)
def test_cw_roundtrip_property(n, data):
    t = data.draw(st.integers(0, n))
    idx = data.draw(st.integers(0, comb(n, t) - 1))
    v = cw_unrank(n, t, idx)
    assert v.weight() == t
    assert cw_rank(v) == idx


def test_cw_errors():
    with pytest.raises(IndexOutOfRange):
        cw_unrank(8, 3, comb(8, 3))
    with pytest.raises(WeightMismatch):
        cw_unrank(8, 9, 0)


# -- random matrices and permutations -----------------------------------------------


def test_random_invertible_one_by_one(rng):
    assert random_invertible(1, rng) == BitMatrix(1, 1, [1])


def test_random_invertible_inverse_property():
    rng = Rng(42)
    q = random_invertible(8, rng)
    assert q.matmul(q.inverse()) == BitMatrix.identity(8)


def test_invertible_fraction_matches_product_formula():
    # closed form: prod_{i=1..8} (1 - 2^-i) ~ 0.2899
    expect = math.prod(1 - 2.0 ** -i for i in range(1, 9))
    rng = Rng(7)
    hits = sum(
        BitMatrix.random(8, 8, rng).inverse() is not None for _ in range(10_000)
    )
    frac = hits / 10_000
    sigma = math.sqrt(expect * (1 - expect) / 10_000)
    assert abs(frac - expect) < 3 * sigma + 1e-9


@given(st.integers(1, 40), st.data())
@settings(max_examples=60, deadline=None)
def test_weight_properties(n, data):
    bits_a = data.draw(st.integers(0, (1 << n) - 1))
    bits_b = data.draw(st.integers(0, (1 << n) - 1))
    a, b = BitVector(n, bits_a), BitVector(n, bits_b)
    assert (a ^ b).weight() <= a.weight() + b.weight()
    img = data.draw(st.permutations(range(n)))
    sigma = Permutation(img)
    assert a.permute(sigma).weight() == a.weight()
    assert a.permute(sigma).permute(sigma.inverse()) == a


def test_permutation_compose_inverse(rng):
    p = random_permutation(12, rng)
    q = random_permutation(12, rng)
    v = random_bitvector(12, rng)
    assert v.permute(p).permute(q) == v.permute(p.compose(q))
    assert p.compose(p.inverse()) == Permutation.identity(12)


def test_matrix_algebra_consistency(rng):
    a = BitMatrix.random(5, 7, rng)
    b = BitMatrix.random(7, 6, rng)
    v = random_bitvector(6, rng)
    # (A B) v = A (B v)
    assert a.matmul(b).mul_vec(v) == a.mul_vec(b.mul_vec(v))
    # transpose circulates left/right products
    w = random_bitvector(5, rng)
    assert a.transpose().mul_vec(w) == a.left_mul(w)


def test_permute_cols_commutes_with_vector_permute(rng):
    m = BitMatrix.random(4, 10, rng)
    p = random_permutation(10, rng)
    v = random_bitvector(10, rng)
    assert m.permute_cols(p).mul_vec(v.permute(p)) == m.mul_vec(v)


def test_null_space_annihilates(rng):
    m = BitMatrix.random(6, 14, rng)
    ns = m.null_space()
    assert ns.rows == 14 - m.rank()
    for i in range(ns.rows):
        assert m.mul_vec(ns.row(i)).is_zero()
    assert ns.rank() == ns.rows
