"""
Enumeration of PE(2,R), PE_1(2,R) = <e_a> and PE_2(2,R) = <e_a e_b> over
small finite rings, with derived subgroups, perfectness and simplicity.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional

from loguru import logger

from ..config import get_settings
from ..errors import GroupTooLargeError
from ..ring_core import Ring
from ..ring_core.units import units
from .generators import M2, e_matrix, m2_identity, m2_mul, m_matrix, projective_canon


@dataclass
class FiniteGroup:
    """A subgroup of PE(2,R) stored as canonical representatives"""
    ring: Ring
    generators: List[M2]
    elements: FrozenSet[M2]
    _inverses: Dict[M2, M2] = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> M2:
        return projective_canon(self.ring)(m2_identity(self.ring))

    def mul(self, x: M2, y: M2) -> M2:
        return projective_canon(self.ring)(m2_mul(self.ring, x, y))

    def inverse(self, x: M2) -> M2:
        if x not in self._inverses:
            prev, cur = self.identity, x
            while cur != self.identity:
                prev, cur = cur, self.mul(cur, x)
            self._inverses[x] = prev
        return self._inverses[x]

    def conjugate(self, x: M2, g: M2) -> M2:
        """g^{-1} x g"""
        return self.mul(self.mul(self.inverse(g), x), g)

    def commutator(self, x: M2, y: M2) -> M2:
        return self.mul(self.mul(self.inverse(x), self.inverse(y)), self.mul(x, y))

    def __contains__(self, x: M2) -> bool:
        return x in self.elements

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)


def mulclose(ring: Ring, generators: Iterable[M2], limit: Optional[int] = None) -> FiniteGroup:
    """
    Close a generating set under multiplication by breadth-first expansion.

    Raises:
        GroupTooLargeError: once more than ``limit`` elements are found
    """
    limit = get_settings().groups.simplicity_limit if limit is None else limit
    canon = projective_canon(ring)
    gens = list(dict.fromkeys(canon(g) for g in generators))
    identity = canon(m2_identity(ring))
    elements = set(gens) | {identity}
    boundary = list(elements)
    while boundary:
        nxt = []
        for a in gens:
            for b in boundary:
                c = canon(m2_mul(ring, a, b))
                if c not in elements:
                    elements.add(c)
                    nxt.append(c)
                    if len(elements) > limit:
                        raise GroupTooLargeError(f"subgroup of PE(2,{ring}) exceeds {limit} elements")
        boundary = nxt
    return FiniteGroup(ring, gens, frozenset(elements))


_groups: Dict = {}


def _cached(name: str, ring: Ring, build) -> FiniteGroup:
    key = (name, ring.descriptor)
    if key not in _groups:
        _groups[key] = build()
        logger.debug(f"{name}(2,{ring}) has order {_groups[key].order}")
    return _groups[key]


def pe_group(ring: Ring) -> FiniteGroup:
    """PE(2,R), generated by every e_a and every m_{r,s}"""
    ring.require_finite()

    def build():
        unit_values = units(ring)
        gens = [e_matrix(ring, a) for a in ring.elements()]
        gens += [m_matrix(ring, r, s) for r in unit_values for s in unit_values]
        return mulclose(ring, gens)
    return _cached("PE", ring, build)


def pe1_group(ring: Ring) -> FiniteGroup:
    ring.require_finite()
    return _cached("PE_1", ring, lambda: mulclose(ring, [e_matrix(ring, a) for a in ring.elements()]))


def pe2_group(ring: Ring) -> FiniteGroup:
    ring.require_finite()

    def build():
        es = [e_matrix(ring, a) for a in ring.elements()]
        return mulclose(ring, [m2_mul(ring, x, y) for x, y in itertools.product(es, repeat=2)])
    return _cached("PE_2", ring, build)


def normal_closure(group: FiniteGroup, subset: Iterable[M2]) -> FiniteGroup:
    """Smallest normal subgroup of ``group`` containing ``subset``"""
    gens = list(dict.fromkeys(subset)) or [group.identity]
    closure = mulclose(group.ring, gens)
    while True:
        new = [y for y in (group.conjugate(x, g) for g in group.generators for x in closure.generators)
               if y not in closure]
        if not new:
            return closure
        closure = mulclose(group.ring, closure.generators + list(dict.fromkeys(new)))


def derived_subgroup(group: FiniteGroup) -> FiniteGroup:
    """Normal closure of the commutators of the generators"""
    comms = {group.commutator(x, y) for x in group.generators for y in group.generators}
    return normal_closure(group, comms)


def is_perfect(group: FiniteGroup) -> bool:
    return derived_subgroup(group) == group


def is_simple(group: FiniteGroup) -> bool:
    """Every nontrivial element normally generates the whole group"""
    if group.order == 1:
        return False
    seen = {group.identity}
    for x in sorted(group.elements):
        if x in seen:
            continue
        seen.update(group.conjugate(x, g) for g in group.elements)
        if normal_closure(group, [x]).order != group.order:
            return False
    return True


def sixtwo_hypothesis(ring: Ring) -> bool:
    """Every a is rbr - b for some b and some unit r"""
    ring.require_finite()
    reached = {ring.sub(ring.mul(ring.mul(r, b), r), b) for r in units(ring) for b in ring.elements()}
    return all(a in reached for a in ring.elements())


@dataclass
class GroupReport:
    ring: str
    order: int
    pe1_order: int
    pe2_order: int
    pe1_index: int
    pe2_perfect: bool
    pe2_simple: bool
    pe2_equals_derived: bool
    sixtwo_hypothesis: bool
    max_ord: Optional[str] = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def subgroup_lattice_checks(ring: Ring, with_ord: bool = True) -> GroupReport:
    """
    Orders of PE, PE_1 and PE_2, the index [PE_1 : PE_2], whether PE_2 is the
    derived subgroup of PE, and perfectness and simplicity of PE_2.
    """
    pe, pe1, pe2 = pe_group(ring), pe1_group(ring), pe2_group(ring)
    report = GroupReport(
        ring=str(ring), order=pe.order, pe1_order=pe1.order, pe2_order=pe2.order,
        pe1_index=pe1.order // pe2.order, pe2_perfect=is_perfect(pe2), pe2_simple=is_simple(pe2),
        pe2_equals_derived=derived_subgroup(pe) == pe2, sixtwo_hypothesis=sixtwo_hypothesis(ring))
    if with_ord:
        from .ordering import build_ord_table
        try:
            report.max_ord = str(build_ord_table(ring).max_ord)
        except GroupTooLargeError as e:
            logger.warning(f"Skipping ord for {ring}: {e}")
    logger.info(f"groups over {ring}: |PE|={report.order}, [PE_1:PE_2]={report.pe1_index}, "
                f"perfect={report.pe2_perfect}, simple={report.pe2_simple}")
    return report
