"""
Noncommutative continuants, their opposites and transfer matrices.
"""

from .quad import ContinuantQuad, build_quad, continuant_p, continuant_q
from .identities import IdentityReport, check_identities
from .transfer import (Mat2, det_equality, factorized_transfer, invert_transfer,
                       op_transfer_invertibility, opposite_transfer_relation, shifted_p_identity,
                       solve_prefix_equations, transfer_matrix, zero_transfer, gl_prime_remark)
from .words import check_word_model, fibonacci, free_quad, splitting_identity, word_model

__all__ = [
    "ContinuantQuad", "build_quad", "continuant_p", "continuant_q", "IdentityReport",
    "check_identities", "Mat2", "det_equality", "factorized_transfer", "invert_transfer",
    "op_transfer_invertibility", "opposite_transfer_relation", "shifted_p_identity",
    "solve_prefix_equations", "transfer_matrix", "zero_transfer", "gl_prime_remark",
    "check_word_model", "fibonacci", "free_quad", "splitting_identity", "word_model",
]
