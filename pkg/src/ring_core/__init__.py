"""
Exact finite rings, matrix rings and the free ring.
"""

from .descriptors import RingDescriptor, RingKind, parse_ring
from .elements import RingElement
from .rings import (ExtensionField, MatrixRing, ModularIntegers, PrimeField, ProductRing, Ring,
                    build_ring, make_matrix_ring, ring_from_text)
from .gf2 import GF2MatrixRing
from .free_ring import FreeRing, free_words
from .units import central_units, iter_units, maximal_subfield, unit_count, units

__all__ = [
    "RingDescriptor", "RingKind", "parse_ring", "RingElement", "Ring", "PrimeField",
    "ExtensionField", "ModularIntegers", "ProductRing", "MatrixRing", "GF2MatrixRing",
    "FreeRing", "free_words", "build_ring", "make_matrix_ring", "ring_from_text", "units", "iter_units",
    "unit_count", "central_units", "maximal_subfield",
]
