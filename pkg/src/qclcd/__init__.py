"""qclcd: quasi-cyclic LCD codes over small finite fields.

Construction of cyclic and quasi-cyclic codes from polynomial data, LCD
verdicts under the Euclidean, Hermitian and symplectic inner products (both
by polynomial gcd conditions and by an independent hull oracle), exact
minimum-distance computation, and a seeded search for good LCD codes.
"""

__version__ = "0.1.0"

from .code import (LinearCode, QcDescriptor, QcGenerator, assemble_qc,
                   circulant, cyclic_code, dual_code, make_descriptor)
from .gf import FieldCtx, field
from .lcd import LcdVerdict, check_1gen, check_hgen, check_pairwise, hull_dimension
from .linalg import Matrix, gram_matrix, inner_product, rowspace_intersection_dim
from .metrics import (WeightDistribution, distribution_prefix,
                      min_distance_bz, min_distance_exhaustive, weight,
                      weight_distribution)
from .polyring import (Poly, RingCtx, cyclic_dual_generator, factor_xn_minus_1,
                       poly_bar, poly_conj, poly_gcd, poly_mul_mod, poly_tilde,
                       self_reciprocal_divisors)
from .search import SearchConfig, SearchRecord, enumerate_g, run_search

__all__ = [
    "FieldCtx", "field", "Poly", "RingCtx", "Matrix", "LinearCode",
    "QcDescriptor", "QcGenerator", "LcdVerdict", "WeightDistribution",
    "SearchConfig", "SearchRecord",
    "assemble_qc", "circulant", "cyclic_code", "dual_code", "make_descriptor",
    "check_1gen", "check_hgen", "check_pairwise", "hull_dimension",
    "gram_matrix", "inner_product", "rowspace_intersection_dim",
    "distribution_prefix", "min_distance_bz", "min_distance_exhaustive",
    "weight", "weight_distribution",
    "cyclic_dual_generator", "factor_xn_minus_1", "poly_bar", "poly_conj",
    "poly_gcd", "poly_mul_mod", "poly_tilde", "self_reciprocal_divisors",
    "enumerate_g", "run_search",
]
