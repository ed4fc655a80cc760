"""phi-cyclic codes over finite fields, ideal matrices over Z, and NTRU over Z[x]/<phi>."""

from .errors import *  # noqa: F401,F403
from .field import FieldElement, FieldSpec, ext_field_make, field_from_order, field_make
from .idealmat import (
    ideal_matrix,
    idealmat_det,
    idealmat_inverse_mod,
    int_phi_context,
    invertible_mod,
    star,
)
from .ntru import (
    NtruKeyPair,
    NtruParams,
    decrypt,
    encrypt,
    keygen,
    keypair_from_private,
    params_validate,
    roundtrip_check,
    sample_plain,
)
from .phicode import (
    code_from_generator,
    enumerate_codes,
    idempotent,
    maximal_membership,
    min_distance,
    phi_context_make,
    tau_apply,
    vandermonde_parity,
)
from .polyring import ZZ, IntegersMod, Polynomial, count_irreducible, poly, poly_resultant, poly_xgcd
from .qlattice import build_lattice, hnf_basis, lat_member, public_lattice, sigma_apply, verify_basis
from .rng import SeededStream

__version__ = "0.1.0"
