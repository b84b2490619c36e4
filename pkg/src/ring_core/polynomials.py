"""
Dense univariate polynomials over a finite field.

A polynomial is a tuple of raw field values, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""

from typing import Iterator, Sequence, Tuple

Poly = Tuple[int, ...]


def trim(coeffs: Sequence[int], field) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == field.zero:
        coeffs.pop()
    return tuple(coeffs)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly, field) -> Poly:
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else field.zero
        b = q[i] if i < len(q) else field.zero
        out.append(field.add(a, b))
    return trim(out, field)


def neg(p: Poly, field) -> Poly:
    return tuple(field.neg(c) for c in p)


def sub(p: Poly, q: Poly, field) -> Poly:
    return add(p, neg(q, field), field)


def mul(p: Poly, q: Poly, field) -> Poly:
    if not p or not q:
        return ()
    out = [field.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == field.zero:
            continue
        for j, b in enumerate(q):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return trim(out, field)


def scale(p: Poly, c, field) -> Poly:
    return trim([field.mul(c, a) for a in p], field)


def divmod_poly(p: Poly, q: Poly, field) -> Tuple[Poly, Poly]:
    """Euclidean division p = quot * q + rem with deg rem < deg q"""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = field.try_invert(q[-1])
    rem = list(p)
    quot = [field.zero] * max(len(p) - len(q) + 1, 0)
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        factor = field.mul(rem[-1], lead_inv)
        quot[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] = field.sub(rem[shift + i], field.mul(factor, c))
        rem = list(trim(rem, field))
    return trim(quot, field), tuple(rem)


def evaluate(p: Poly, x, field):
    acc = field.zero
    for c in reversed(p):
        acc = field.add(field.mul(acc, x), c)
    return acc


def monic_polynomials(field, deg: int) -> Iterator[Poly]:
    """
    All monic polynomials of the given degree in increasing integer encoding.

    The encoding reads the coefficients c_0..c_{deg-1} as base-q digits, so
    x^3+x+1 precedes x^3+x^2+1 over GF(2).
    """
    q = field.size
    for code in range(q ** deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(code % q)
            code //= q
        yield tuple(coeffs) + (field.one,)


def is_irreducible(p: Poly, field) -> bool:
    """Trial division by every monic polynomial of degree at most deg(p)/2"""
    d = degree(p)
    if d < 1:
        return False
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for f in monic_polynomials(field, k):
            if not divmod_poly(p, f, field)[1]:
                return False
    return True


def smallest_irreducible(field, deg: int) -> Poly:
    """Smallest monic irreducible polynomial of the given degree (see monic_polynomials)"""
    for p in monic_polynomials(field, deg):
        if is_irreducible(p, field):
            return p
    raise ValueError(f"no irreducible polynomial of degree {deg} over {field}")


def format_poly(p: Poly, var: str = "x") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}{mono}")
    return " + ".join(terms)
