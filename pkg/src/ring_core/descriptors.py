"""
Ring descriptors and their canonical text grammar.

    ring := gf(q) | zmod(m) | mat(n, ring) | prod(ring, ...) | free(name, ...)

The canonical string of a descriptor is what the CLI accepts and what
certificates record.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from ..errors import RingParseError


class RingKind(Enum):
    """Kinds of rings a descriptor can name"""
    PRIME_FIELD = "prime-field"
    EXTENSION_FIELD = "extension-field"
    MATRIX = "matrix-ring"
    MODULAR = "modular-integers"
    PRODUCT = "product"
    FREE = "free-ring"


def factor_prime_power(q: int) -> Optional[Tuple[int, int]]:
    """Return (p, k) with q = p**k for a prime p, or None"""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def factor_integer(m: int) -> List[Tuple[int, int]]:
    """Prime factorisation of m as (p, k) pairs in increasing p"""
    factors = []
    p = 2
    while p * p <= m:
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        if k:
            factors.append((p, k))
        p += 1
    if m > 1:
        factors.append((m, 1))
    return factors


@dataclass(frozen=True)
class RingDescriptor:
    """Runtime description of a ring"""
    kind: RingKind
    order: int = 0
    inner: Optional["RingDescriptor"] = None
    factors: Tuple["RingDescriptor", ...] = field(default_factory=tuple)
    variables: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind in (RingKind.PRIME_FIELD, RingKind.EXTENSION_FIELD):
            pk = factor_prime_power(self.order)
            if pk is None:
                raise RingParseError(f"gf({self.order}): order is not a prime power")
            expected = RingKind.PRIME_FIELD if pk[1] == 1 else RingKind.EXTENSION_FIELD
            if expected != self.kind:
                raise RingParseError(f"gf({self.order}) must be a {expected.value}")
        elif self.kind == RingKind.MATRIX:
            if self.order < 1 or self.inner is None:
                raise RingParseError("matrix ring needs size n >= 1 and an inner ring")
        elif self.kind == RingKind.MODULAR:
            if self.order < 2:
                raise RingParseError(f"zmod({self.order}): modulus must be at least 2")
        elif self.kind == RingKind.PRODUCT:
            if not self.factors:
                raise RingParseError("product needs at least one factor")
        elif self.kind == RingKind.FREE:
            if not self.variables or len(set(self.variables)) != len(self.variables):
                raise RingParseError("free ring needs distinct variable names")

    @classmethod
    def gf(cls, q: int) -> "RingDescriptor":
        pk = factor_prime_power(q)
        if pk is None:
            raise RingParseError(f"gf({q}): order is not a prime power")
        kind = RingKind.PRIME_FIELD if pk[1] == 1 else RingKind.EXTENSION_FIELD
        return cls(kind, order=q)

    @classmethod
    def zmod(cls, m: int) -> "RingDescriptor":
        return cls(RingKind.MODULAR, order=m)

    @classmethod
    def mat(cls, n: int, inner: "RingDescriptor") -> "RingDescriptor":
        return cls(RingKind.MATRIX, order=n, inner=inner)

    @classmethod
    def prod(cls, *factors: "RingDescriptor") -> "RingDescriptor":
        return cls(RingKind.PRODUCT, factors=tuple(factors))

    @classmethod
    def free(cls, *variables: str) -> "RingDescriptor":
        return cls(RingKind.FREE, variables=tuple(variables))

    @property
    def is_field(self) -> bool:
        return self.kind in (RingKind.PRIME_FIELD, RingKind.EXTENSION_FIELD)

    @property
    def is_finite(self) -> bool:
        if self.kind == RingKind.FREE:
            return False
        if self.kind == RingKind.MATRIX:
            return self.inner.is_finite
        if self.kind == RingKind.PRODUCT:
            return all(f.is_finite for f in self.factors)
        return True

    @property
    def characteristic_prime(self) -> Optional[int]:
        """The prime p of gf(p^k), None for other kinds"""
        if self.is_field:
            return factor_prime_power(self.order)[0]
        return None

    def __str__(self) -> str:
        if self.is_field:
            return f"gf({self.order})"
        if self.kind == RingKind.MODULAR:
            return f"zmod({self.order})"
        if self.kind == RingKind.MATRIX:
            return f"mat({self.order},{self.inner})"
        if self.kind == RingKind.PRODUCT:
            return "prod(" + ",".join(str(f) for f in self.factors) + ")"
        return "free(" + ",".join(self.variables) + ")"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        for number, name, other in _TOKEN.findall(text):
            if number:
                self.tokens.append(("int", int(number)))
            elif name:
                self.tokens.append(("name", name))
            elif other.strip():
                self.tokens.append(("sym", other))
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def _take(self, kind: str, value=None):
        tok_kind, tok_value = self._peek()
        if tok_kind != kind or (value is not None and tok_value != value):
            raise RingParseError(f"Unexpected token {tok_value!r} in ring descriptor {self.text!r}")
        self.pos += 1
        return tok_value

    def parse(self) -> RingDescriptor:
        desc = self._ring()
        if self.pos != len(self.tokens):
            raise RingParseError(f"Trailing input in ring descriptor {self.text!r}")
        return desc

    def _ring(self) -> RingDescriptor:
        head = self._take("name")
        self._take("sym", "(")
        if head == "gf":
            desc = RingDescriptor.gf(self._take("int"))
        elif head == "zmod":
            desc = RingDescriptor.zmod(self._take("int"))
        elif head == "mat":
            n = self._take("int")
            self._take("sym", ",")
            desc = RingDescriptor.mat(n, self._ring())
        elif head == "prod":
            factors = [self._ring()]
            while self._peek() == ("sym", ","):
                self._take("sym", ",")
                factors.append(self._ring())
            desc = RingDescriptor.prod(*factors)
        elif head == "free":
            names = [self._take("name")]
            while self._peek() == ("sym", ","):
                self._take("sym", ",")
                names.append(self._take("name"))
            desc = RingDescriptor.free(*names)
        else:
            raise RingParseError(f"Unknown ring constructor {head!r}")
        self._take("sym", ")")
        return desc


def parse_ring(text: str) -> RingDescriptor:
    """Parse the canonical text form, e.g. ``prod(gf(2),mat(2,gf(3)))``"""
    return _Parser(text).parse()
