"""
The projective elementary group PE(2,R): words, normal forms, lengths and
subgroup structure over finite rings.
"""

from .generators import (Generator, GeneratorKind, GroupWord, PE2Element, as_matrix, invert_word,
                         parse_word, random_word, word_matrix)
from .normal_form import is_normal, normalize
from .ordering import OrdTable, OrdValue, build_ord_table, ord_of, ord_of_word
from .multipliers import (complete_to_multiplier, diagonal_word, multiplier_word,
                          stable_range_reduction)
from .conjugation import conjugate_to_shorter
from .stable_range import is_unimodular, qsr_condition, stable_range_report
from .groups import subgroup_lattice_checks
from .commutators import commutator_identities_check, solve_translation

__all__ = [
    "Generator", "GeneratorKind", "GroupWord", "PE2Element", "as_matrix", "invert_word",
    "parse_word", "random_word", "word_matrix", "is_normal", "normalize", "OrdTable", "OrdValue",
    "build_ord_table", "ord_of", "ord_of_word", "complete_to_multiplier", "diagonal_word",
    "multiplier_word", "stable_range_reduction", "conjugate_to_shorter", "is_unimodular",
    "qsr_condition", "stable_range_report", "subgroup_lattice_checks",
    "commutator_identities_check", "solve_translation",
]
