"""
Unit-translate properties: for every k-1 elements s_i of a finite ring, is
there a unit u with every u + s_i a unit? Searches, certificates, explicit
witness constructions and failure families.
"""

from .certificates import (Verdict, WitnessCertificate, certificate_from_dict, certificate_to_dict,
                           reverify, validate_certificate)
from .search import (WitnessOrder, check_gui, check_instance, is_two_good, merge_shards,
                     normalize_tuple, unit_difference_set)
from .families import (failure_family_Antn, failure_family_Atwh, triangular_witness_Atwn,
                       two_good_witness)
from .bounds import density_bounds, f_n, gl_density, measure_intersection, subfield_kernel_bound
from .corners import additivity_witness, corner_composition, lemma_Btwo_lift
from .matrix_f2 import FIXTURES, observation_Bthr, verify_fixtures, verify_prop_Bone
from .classifier import artinian_classifier, conjecture_Affn_probe, product_law, quotient_law

__all__ = [
    "Verdict", "WitnessCertificate", "certificate_from_dict", "certificate_to_dict", "reverify",
    "validate_certificate", "WitnessOrder", "check_gui", "check_instance", "is_two_good",
    "merge_shards", "normalize_tuple", "unit_difference_set", "failure_family_Antn",
    "failure_family_Atwh", "triangular_witness_Atwn", "two_good_witness", "density_bounds", "f_n",
    "gl_density", "measure_intersection", "subfield_kernel_bound", "additivity_witness",
    "corner_composition", "lemma_Btwo_lift", "FIXTURES", "observation_Bthr", "verify_fixtures",
    "verify_prop_Bone", "artinian_classifier", "conjecture_Affn_probe", "product_law", "quotient_law",
]
