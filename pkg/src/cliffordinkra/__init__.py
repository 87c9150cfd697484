"""Cliffordinkras: graphs of signed-permutation Clifford algebra representations."""

from .f2code import (BitWord, LinearCode, direct_sum, enumerate_doubly_even, is_doubly_even,
                     is_even, max_doubly_even_dimension, permutation_equivalent, span,
                     standard_code, weight)
from .graph import (Cliffordinkra, SignedPermMatrix, ValidationReport, from_matrices,
                    is_isomorphic, to_dot, to_matrices, validate, verify_clifford,
                    vertex_switch)
from .monomial import SignedMonomial, left_gamma, multiply, projector_product, square_sign
from .construct import (QuotientSpec, clpq_matrices, clpq_validate, cube,
                        minimal_representation, quotient, recover_code)

__version__ = "0.1.0"
