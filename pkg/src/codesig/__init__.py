"""Code-based signature toolkit.

Signature schemes built on syndrome decoding and binary Goppa codes:

* Niederreiter encryption and the CFS / mCFS signature (goppa, cfs)
* Stern zero-knowledge identification + Fiat-Shamir signatures (stern)
* KKS signatures over weight-bounded subcodes (kks)
* ZLC ring signatures (ring_zlc)
* ACG and DV threshold ring signatures (threshold)
* Overbeck-style blind signatures (blind)
* identity-based identification from CFS extraction (ibs)
* published size/cost formulas and parameter advice (costmodel)

Everything desk-scale runs in pure Python on packed integers; all
randomness flows through an explicit seedable Rng.
"""

from .algebra import (
    BitMatrix,
    BitVector,
    Gf2mField,
    Permutation,
    cw_rank,
    cw_unrank,
    random_invertible,
    random_permutation,
    sd_bruteforce,
    solve_linear,
)
from .blind import blind, blind_sign, blind_sign_flow, blind_verify, unblind
from .cfs import CfsSignature, cfs_sign, cfs_verify
from .costmodel import ParamTuple, quantity_A, quantity_B, scheme_param_advisor, table1
from .goppa import (
    GoppaCode,
    NiederreiterKeyPair,
    NiederreiterPublicKey,
    decode,
    goppa_keygen,
    nr_decrypt,
    nr_encrypt,
    nr_keygen,
)
from .ibs import IbsCredential, ibs_identify, kgc_extract
from .kks import KksKeyPair, kks_keygen, kks_sign, kks_verify
from .ring_zlc import RingDescriptor, RingSignature, zlc_sign, zlc_verify
from .rng import Rng
from .stern import (
    SternKeyPair,
    stern_fs_sign,
    stern_fs_verify,
    stern_identify,
    stern_keygen,
    stern_round,
)
from .threshold import (
    AcgRing,
    DvSignature,
    acg_fs_sign,
    acg_fs_verify,
    acg_keygen,
    acg_round,
    dv_sign,
    dv_verify,
)

__version__ = "0.1.0"
