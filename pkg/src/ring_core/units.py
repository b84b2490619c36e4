"""
Unit groups, central units and maximal subfields of matrix rings.
"""

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterator, List, Optional

import numpy as np
from loguru import logger

from ..config import cache_path, get_settings
from ..errors import InfiniteRingError
from . import polynomials as poly
from .canonical import companion
from .descriptors import RingDescriptor, factor_integer
from .elements import RingElement
from .gf2 import GF2MatrixRing, packed_to_uint64, uint64_to_packed
from .rings import MatrixRing, ModularIntegers, ProductRing, Ring, build_ring, make_matrix_ring

_unit_lists: Dict[RingDescriptor, List] = {}

# below this many units the list is never written to disk
DISK_CACHE_MIN = 1000


def unit_count(ring: Ring) -> int:
    """|GL(1,R)| from closed forms, without enumeration"""
    if not ring.is_finite:
        raise InfiniteRingError(f"{ring} is infinite")
    if ring.is_field and not isinstance(ring, ModularIntegers):
        return ring.size - 1
    if isinstance(ring, ModularIntegers):
        return euler_phi(ring.m)
    if isinstance(ring, ProductRing):
        total = 1
        for f in ring.factors:
            total *= unit_count(f)
        return total
    if isinstance(ring, MatrixRing):
        return _matrix_unit_count(ring.n, ring.inner)
    return sum(1 for x in ring.elements() if ring.is_unit(x))


def euler_phi(m: int) -> int:
    result = m
    for p, _ in factor_integer(m):
        result = result // p * (p - 1)
    return result


def gl_order(n: int, q: int) -> int:
    """|GL(n, q)| = prod_{i<n} (q^n - q^i)"""
    total = 1
    for i in range(n):
        total *= q ** n - q ** i
    return total


def _matrix_unit_count(n: int, inner: Ring) -> int:
    if inner.is_field:
        return gl_order(n, inner.size)
    if isinstance(inner, ModularIntegers):
        total = 1
        for p, k in factor_integer(inner.m):
            total *= p ** ((k - 1) * n * n) * gl_order(n, p)
        return total
    if isinstance(inner, ProductRing):
        total = 1
        for f in inner.factors:
            total *= _matrix_unit_count(n, f)
        return total
    if isinstance(inner, MatrixRing):
        return _matrix_unit_count(n * inner.n, inner.inner)
    ring = make_matrix_ring(n, inner)
    return sum(1 for x in ring.elements() if ring.is_unit(x))


def _vectors(field_ring: Ring, n: int) -> Iterator[tuple]:
    return itertools.product(list(field_ring.elements()), repeat=n)


def _gf2_units(n: int) -> Iterator[tuple]:
    """Invertible packed matrices built row by row outside the span of earlier rows"""
    full = 1 << n

    def extend(rows, span):
        if len(rows) == n:
            yield tuple(rows)
            return
        for v in range(1, full):
            if v in span:
                continue
            yield from extend(rows + [v], span | {s ^ v for s in span})

    yield from extend([], frozenset({0}))


def _field_matrix_units(ring: MatrixRing) -> Iterator:
    F, n = ring.inner, ring.n
    vectors = list(_vectors(F, n))
    scalars = list(F.elements())

    def extend(rows, span):
        if len(rows) == n:
            yield ring.from_entries(rows)
            return
        for v in vectors:
            if v in span:
                continue
            new_span = {tuple(F.add(a, F.mul(c, b)) for a, b in zip(s, v)) for s in span for c in scalars}
            yield from extend(rows + [list(v)], new_span)

    yield from extend([], {tuple([F.zero] * n)})


def iter_units(ring: Ring) -> Iterator:
    """Stream the units of a finite ring as raw values, each exactly once"""
    ring.require_finite()
    if isinstance(ring, GF2MatrixRing):
        return _gf2_units(ring.n)
    if isinstance(ring, MatrixRing) and ring.inner.is_field:
        return _field_matrix_units(ring)
    if ring.is_field:
        return (x for x in ring.elements() if x != ring.zero)
    if isinstance(ring, ModularIntegers):
        return (x for x in range(ring.m) if gcd(x, ring.m) == 1)
    if isinstance(ring, ProductRing):
        return itertools.product(*(units(f) for f in ring.factors))
    return (x for x in ring.elements() if ring.is_unit(x))


def _disk_cache_file(ring: GF2MatrixRing):
    return cache_path(f"gl_{ring.n}_2.npy")


def units(ring: Ring, use_disk: bool = True) -> List:
    """
    All units of a finite ring as raw values.

    The list is kept in memory per ring; packed GF(2) unit groups with at least
    DISK_CACHE_MIN and at most ``search.unit_cache_limit`` elements are also
    stored as a numpy array so later runs skip the enumeration.
    """
    key = ring.descriptor
    if key in _unit_lists:
        return _unit_lists[key]
    ring.require_finite()

    expected = unit_count(ring)
    disk = (use_disk and isinstance(ring, GF2MatrixRing) and ring.n * ring.n <= 64
            and DISK_CACHE_MIN <= expected <= get_settings().search.unit_cache_limit)
    values = None
    if disk:
        path = _disk_cache_file(ring)
        if path.exists():
            array = np.load(path)
            if len(array) == expected:
                values = uint64_to_packed(array, ring.n)
                logger.debug(f"Loaded {len(values)} units of {ring} from {path}")
            else:
                logger.warning(f"Ignoring stale unit cache {path}")
    if values is None:
        logger.debug(f"Enumerating units of {ring} (expected {expected})")
        values = list(iter_units(ring))
        if disk:
            np.save(path, packed_to_uint64(values, ring.n))
            logger.info(f"Cached {len(values)} units of {ring} in {path}")
    _unit_lists[key] = values
    return values


def sample_units(ring: Ring, rng: np.random.Generator, count: int) -> Iterator:
    """Random units by rejection sampling"""
    produced = 0
    while produced < count:
        x = ring.random_value(rng)
        if ring.is_unit(x):
            produced += 1
            yield x


def central_units(ring: Ring) -> List:
    """Central units from the ring structure (scalars for matrix rings)"""
    if isinstance(ring, MatrixRing):
        return [ring.scalar(c) for c in central_units(ring.inner)]
    if isinstance(ring, ProductRing):
        return list(itertools.product(*(central_units(f) for f in ring.factors)))
    if ring.is_commutative and ring.is_finite:
        return list(iter_units(ring))
    if not ring.is_finite:
        return [ring.one, ring.neg(ring.one)] if ring.one != ring.neg(ring.one) else [ring.one]
    return [z for z in units(ring) if all(ring.mul(z, x) == ring.mul(x, z) for x in ring.elements())]


@dataclass
class MaximalSubfield:
    """The subring F_q[D] of M_n F_q, D the companion matrix of a degree-n irreducible"""
    ring: MatrixRing
    generator: object
    modulus: poly.Poly
    _elements: Optional[List] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.ring.n

    def elements(self) -> List:
        """All q^n elements sum c_i D^i, zero first"""
        if self._elements is None:
            ring, F = self.ring, self.ring.inner
            powers = [ring.one]
            for _ in range(1, self.n):
                powers.append(ring.mul(powers[-1], self.generator))
            scalars = list(F.elements())
            out = []
            for coeffs in itertools.product(scalars, repeat=self.n):
                acc = ring.zero
                for c, p in zip(coeffs, powers):
                    if c != F.zero:
                        acc = ring.add(acc, ring.mul(ring.scalar(c), p))
                out.append(acc)
            out.sort(key=lambda v: v != ring.zero)
            self._elements = out
        return self._elements

    def nonzero_elements(self) -> List:
        return [x for x in self.elements() if x != self.ring.zero]

    def as_elements(self) -> List[RingElement]:
        return [RingElement(self.ring, x) for x in self.elements()]


def maximal_subfield(n: int, q: int) -> MaximalSubfield:
    """
    Embed F_{q^n} in M_n F_q.

    Args:
        n: matrix size, at least 1
        q: prime power

    Returns:
        MaximalSubfield generated by the companion matrix of the smallest
        irreducible polynomial of degree n over F_q
    """
    F = build_ring(RingDescriptor.gf(q))
    ring = make_matrix_ring(n, F)
    modulus = poly.smallest_irreducible(F, n)
    D = companion(modulus[:-1], F).value
    return MaximalSubfield(ring=ring, generator=D, modulus=modulus)
