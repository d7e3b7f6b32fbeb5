"""constakit: constacyclic codes of length 2 l^m p^n over GF(q), p odd.

Closed-form irreducible factorizations of X^N - lambda for every
equivalence class of the constant, dual-code generators, and complete
LCD / self-dual enumerations, each cross-checked by independent generic
oracles (brute-force factorization, rank computations, exhaustive
codeword scans).
"""

from .backend import BACKEND
from .codes import (
    ConstacyclicCode,
    LinearSubspace,
    dual,
    enumerate_lcd_cyclic,
    enumerate_lcd_negacyclic,
    enumerate_self_dual_negacyclic,
    encode,
    intersection_dim,
    is_lcd,
    make_code,
    min_distance_exhaustive,
    weight_enumerator,
)
from .cosets import coset_table, mult_order, negation_coset_map, order_profile, unit_group_generator
from .equivalence import apply_phi, are_equivalent, class_of, transversal, witness_scalar
from .factorizer import (
    Factorization,
    factor_constacyclic,
    factor_coprime_case,
    factor_cyclic,
    factor_divides_case,
    factorization_of,
    minimal_polys,
    minimal_polys_q2,
    oracle_factor,
    oracle_is_irreducible,
)
from .gf import (
    FieldElement,
    FieldSpec,
    TowerMap,
    build_tower,
    element_order,
    embed,
    make_field,
    primitive_root_of_unity,
    sqrt_of,
)
from .polyring import Poly, is_self_reciprocal, monic_hat, reciprocal, scale_sub

__version__ = "0.1.0"
