"""
Word reduction to the normal form e_{a(k)} ... e_{a(1)} m_{r,s}.

Rewriting rules:
    t_a = e_0 e_a,  j = e_0,  e_a e_0 e_b = e_{a+b},  e_0 e_0 = 1,
    m_{r,s} m_{r',s'} = m_{rr',ss'},  m_{r,s} e_a = e_{s a r^{-1}} m_{s,r}

so a zero argument survives only in the first or last e.
"""

from typing import List

from loguru import logger

from ..errors import ArithmeticInconsistencyError, NotNormalFormError, PreconditionError
from ..ring_core import Ring
from .generators import Generator, GeneratorKind, GroupWord, as_matrix


def _push_e(ring: Ring, stack: List, b) -> None:
    zero = ring.zero
    while True:
        if stack and stack[-1] == zero and len(stack) >= 2:
            stack.pop()
            b = ring.add(stack.pop(), b)
            continue
        if stack and stack[-1] == zero and b == zero:
            stack.pop()
            return
        stack.append(b)
        return


def normalize(ring: Ring, word: GroupWord, check: bool = True) -> GroupWord:
    """
    Reduce a word to normal form.

    Args:
        ring: the coefficient ring
        word: any word in t, m, j, e
        check: compare projective classes before and after

    Returns:
        GroupWord: e's followed by at most one m, flagged normal

    Raises:
        ArithmeticInconsistencyError: if the projective class changed
    """
    stack: List = []
    r, s = ring.one, ring.one
    for g in word.gens:
        if g.kind == GeneratorKind.M:
            r2, s2 = g.args
            if not (ring.is_unit(r2) and ring.is_unit(s2)):
                raise PreconditionError("m(r,s) needs invertible r and s")
            r, s = ring.mul(r, r2), ring.mul(s, s2)
            continue
        if g.kind == GeneratorKind.J:
            incoming = [ring.zero]
        elif g.kind == GeneratorKind.T:
            incoming = [ring.zero, g.args[0]]
        else:
            incoming = [g.args[0]]
        for a in incoming:
            # m_{r,s} e_a = e_{s a r^{-1}} m_{s,r}
            _push_e(ring, stack, ring.mul(ring.mul(s, a), ring.try_invert(r)))
            r, s = s, r

    gens = [Generator.e(a) for a in stack]
    if not (r == ring.one and s == ring.one):
        gens.append(Generator.m(r, s))
    result = GroupWord(tuple(gens), normal=True)
    if check and as_matrix(ring, result) != as_matrix(ring, word):
        raise ArithmeticInconsistencyError(f"normalize changed the class of {word.format(ring)}")
    logger.trace(f"normalize: {len(word)} generators -> {len(result)}")
    return result


def is_normal(ring: Ring, word: GroupWord) -> bool:
    """e's only, at most one trailing m, zero arguments only at the two ends"""
    gens = list(word.gens)
    if gens and gens[-1].kind == GeneratorKind.M:
        gens = gens[:-1]
    if any(g.kind != GeneratorKind.E for g in gens):
        return False
    args = [g.args[0] for g in gens]
    return all(a != ring.zero for a in args[1:-1])


def require_normal(ring: Ring, word: GroupWord) -> None:
    if not is_normal(ring, word):
        raise NotNormalFormError(f"{word.format(ring)} is not in normal form")
