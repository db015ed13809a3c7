"""Finite fields, packed binary linear algebra and the decoding oracle."""

from .bits import (
    BitMatrix,
    BitVector,
    Permutation,
    block_diagonal,
    random_bitvector,
    random_invertible,
    random_permutation,
    random_weight_vector,
    solve_linear,
)
from .cw import (
    count_weight_at_most,
    cw_rank,
    cw_unrank,
    random_weight_at_most,
    rank_bits,
)
from .gf2m import Gf2mField, gf2_poly_irreducible, lowest_irreducible
from .oracle import sd_bruteforce
from .polyring import ONE, X, ZERO, Poly, PolyRing, degree

__all__ = [
    "BitMatrix",
    "BitVector",
    "Gf2mField",
    "ONE",
    "Permutation",
    "Poly",
    "PolyRing",
    "X",
    "ZERO",
    "block_diagonal",
    "count_weight_at_most",
    "cw_rank",
    "cw_unrank",
    "degree",
    "gf2_poly_irreducible",
    "lowest_irreducible",
    "random_bitvector",
    "random_invertible",
    "random_permutation",
    "random_weight_at_most",
    "random_weight_vector",
    "sd_bruteforce",
    "solve_linear",
]
