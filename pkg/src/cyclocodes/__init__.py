"""Cyclic codes of length n1*n2 from generalized cyclotomies of order two.

Finite-field arithmetic, the three order-two cyclotomies of Z_n^*,
factorization of x^n - 1, the eight-code families with their census and
BCH bounds, and an exact minimum-weight engine.
"""

from .codes import (
    BCHBound,
    CensusObstruction,
    CodeLabel,
    CyclicCode,
    InadmissibleCode,
    bch_bound,
    census_count,
    census_half_dim,
    construct_code,
    cyclic_code,
    family_code,
    family_codes,
    find_splitters,
    map_code,
    splitting_check,
)
from .cyclotomy import (
    CyclotomySystem,
    build_system,
    decompose,
    direct_membership,
    is_difference_set,
    proposition_scan,
)
from .gf import FieldCtx, FieldElem, arith, field_create
from .polyring import (
    Poly,
    class_polynomials,
    cyclotomic_cosets,
    factor_xn_minus_1,
    splitting_field,
)
from .weight import (
    WeightReport,
    min_weight,
    min_weight_bz,
    min_weight_exhaustive,
    verify_odd_like_inequality,
    verify_square_root_bounds,
    weight_distribution,
)

__version__ = "0.1.0"
