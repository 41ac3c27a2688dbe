"""Primitive BCH codes with the second and third largest coset leaders as design distance.

Finite fields, cyclotomic cosets, code construction, exhaustive weight
enumeration, trace-form character sums and a table-verification harness.
"""

from .bch import C, C_TILDE, BchCode, bose_distance, build_code, dimension_formula
from .cyclotomic import closed_form_leader, coset_of, coset_table, kth_largest_leader_exhaustive
from .errors import BCHError, BudgetExceeded
from .gf import GF, extension_field, make_field
from .polyring import Poly, minimal_polynomial
from .weights import (
    WeightDistribution,
    dual_min_distance,
    macwilliams,
    min_distance,
    weight_distribution,
)

__all__ = [
    "C", "C_TILDE", "BchCode", "bose_distance", "build_code", "dimension_formula",
    "closed_form_leader", "coset_of", "coset_table", "kth_largest_leader_exhaustive",
    "BCHError", "BudgetExceeded", "GF", "extension_field", "make_field",
    "Poly", "minimal_polynomial", "WeightDistribution", "dual_min_distance",
    "macwilliams", "min_distance", "weight_distribution",
]
