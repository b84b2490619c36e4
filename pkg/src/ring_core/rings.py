"""
Exact ring arithmetic.

Every ring works on raw, hashable, immutable values (ints and tuples) so
that search loops can call ``ring.add``/``ring.mul`` directly; the
``RingElement`` wrapper in ``elements.py`` adds operators on top.
"""

import itertools
from abc import ABC, abstractmethod
from functools import lru_cache
from math import gcd
from typing import Any, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import InfiniteRingError, RingParseError, UnsupportedOperationError
from . import polynomials as poly
from .descriptors import RingDescriptor, RingKind, factor_prime_power


class Ring(ABC):
    """Base class of all rings; values are plain Python objects"""

    descriptor: RingDescriptor
    zero: Any
    one: Any

    @abstractmethod
    def add(self, x, y): ...

    @abstractmethod
    def neg(self, x): ...

    @abstractmethod
    def mul(self, x, y): ...

    @abstractmethod
    def try_invert(self, x) -> Optional[Any]:
        """Two-sided inverse of x, or None"""

    @abstractmethod
    def elements(self) -> Iterator[Any]: ...

    @abstractmethod
    def random_value(self, rng: np.random.Generator): ...

    @abstractmethod
    def format_value(self, x) -> Any:
        """JSON-compatible form of x"""

    @abstractmethod
    def parse_value(self, obj) -> Any: ...

    @property
    def size(self) -> Optional[int]:
        """Number of elements, None when infinite"""
        return None

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    @property
    def is_field(self) -> bool:
        return False

    @property
    def is_commutative(self) -> bool:
        return False

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_unit(self, x) -> bool:
        return self.try_invert(x) is not None

    def is_zero(self, x) -> bool:
        return x == self.zero

    def from_int(self, n: int):
        """Image of the integer n under the unique ring map Z -> R"""
        result, base = self.zero, self.one
        if n < 0:
            n, base = -n, self.neg(base)
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def pow(self, x, e: int):
        if e < 0:
            inv = self.try_invert(x)
            if inv is None:
                raise ZeroDivisionError(f"{self.format_value(x)} is not invertible in {self}")
            x, e = inv, -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def require_finite(self):
        if not self.is_finite:
            raise InfiniteRingError(f"{self} is infinite")

    def element(self, value):
        from .elements import RingElement
        return RingElement(self, value)

    def parse(self, obj):
        return self.element(self.parse_value(obj))

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __str__(self) -> str:
        return str(self.descriptor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor})"


def _parse_int(obj) -> int:
    if isinstance(obj, bool):
        raise RingParseError(f"Expected an integer, got {obj!r}")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        try:
            return int(obj.strip())
        except ValueError:
            pass
    raise RingParseError(f"Expected an integer, got {obj!r}")


class PrimeField(Ring):
    """GF(p) on the residues 0..p-1"""

    def __init__(self, p: int):
        self.descriptor = RingDescriptor.gf(p)
        self.p = p
        self.zero, self.one = 0, 1

    def add(self, x, y):
        return (x + y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def try_invert(self, x):
        return pow(x, -1, self.p) if x % self.p else None

    def is_unit(self, x) -> bool:
        return x != 0

    def elements(self):
        return iter(range(self.p))

    def random_value(self, rng):
        return int(rng.integers(0, self.p))

    def format_value(self, x):
        return x

    def parse_value(self, obj):
        return _parse_int(obj) % self.p

    @property
    def size(self):
        return self.p

    @property
    def is_field(self):
        return True

    @property
    def is_commutative(self):
        return True


class ExtensionField(Ring):
    """
    GF(p^k) as GF(p)[x]/(f) with f the smallest monic irreducible of degree k.

    Value c_0 + c_1 p + ... + c_{k-1} p^{k-1} stands for c_0 + c_1 x + ...
    Multiplication goes through discrete log/exp tables.
    """

    def __init__(self, q: int):
        p, k = factor_prime_power(q)
        self.descriptor = RingDescriptor.gf(q)
        self.p, self.k, self.q = p, k, q
        self.base = PrimeField(p)
        self.modulus = poly.smallest_irreducible(self.base, k)
        self.zero, self.one = 0, 1
        self._build_tables()

    def _to_poly(self, x: int):
        coeffs = []
        for _ in range(self.k):
            coeffs.append(x % self.p)
            x //= self.p
        return poly.trim(coeffs, self.base)

    def _from_poly(self, f) -> int:
        value = 0
        for c in reversed(f):
            value = value * self.p + c
        return value

    def _slow_mul(self, x: int, y: int) -> int:
        product = poly.mul(self._to_poly(x), self._to_poly(y), self.base)
        return self._from_poly(poly.divmod_poly(product, self.modulus, self.base)[1])

    def _build_tables(self):
        order = self.q - 1
        for g in range(2 if self.q > 2 else 1, self.q):
            exp = [1]
            x = 1
            for _ in range(order - 1):
                x = self._slow_mul(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == order:
                break
        self.generator = g
        self._exp = exp + exp
        self._log = [0] * self.q
        for i, v in enumerate(exp):
            self._log[v] = i
        digits = [self._to_poly(x) for x in range(self.q)]
        self._add = [[self._from_poly(poly.add(a, b, self.base)) for b in digits] for a in digits]
        self._neg = [self._from_poly(poly.neg(a, self.base)) for a in digits]

    def add(self, x, y):
        return self._add[x][y]

    def neg(self, x):
        return self._neg[x]

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def try_invert(self, x):
        if x == 0:
            return None
        return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]

    def is_unit(self, x) -> bool:
        return x != 0

    def elements(self):
        return iter(range(self.q))

    def random_value(self, rng):
        return int(rng.integers(0, self.q))

    def format_value(self, x):
        return x

    def parse_value(self, obj):
        x = _parse_int(obj)
        if not 0 <= x < self.q:
            raise RingParseError(f"{x} is not an element code of {self}")
        return x

    @property
    def size(self):
        return self.q

    @property
    def is_field(self):
        return True

    @property
    def is_commutative(self):
        return True


class ModularIntegers(Ring):
    """Z/mZ"""

    def __init__(self, m: int):
        self.descriptor = RingDescriptor.zmod(m)
        self.m = m
        self.zero, self.one = 0, 1

    def add(self, x, y):
        return (x + y) % self.m

    def neg(self, x):
        return (-x) % self.m

    def sub(self, x, y):
        return (x - y) % self.m

    def mul(self, x, y):
        return (x * y) % self.m

    def try_invert(self, x):
        return pow(x, -1, self.m) if gcd(x, self.m) == 1 else None

    def is_unit(self, x) -> bool:
        return gcd(x, self.m) == 1

    def elements(self):
        return iter(range(self.m))

    def random_value(self, rng):
        return int(rng.integers(0, self.m))

    def format_value(self, x):
        return x

    def parse_value(self, obj):
        return _parse_int(obj) % self.m

    @property
    def size(self):
        return self.m

    @property
    def is_field(self):
        return factor_prime_power(self.m) == (self.m, 1)

    @property
    def is_commutative(self):
        return True


class ProductRing(Ring):
    """Direct product; values are tuples with one component per factor"""

    def __init__(self, factors: Sequence[Ring]):
        self.factors = tuple(factors)
        self.descriptor = RingDescriptor.prod(*(f.descriptor for f in self.factors))
        self.zero = tuple(f.zero for f in self.factors)
        self.one = tuple(f.one for f in self.factors)

    def add(self, x, y):
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def mul(self, x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def try_invert(self, x):
        inverses = []
        for f, a in zip(self.factors, x):
            inv = f.try_invert(a)
            if inv is None:
                return None
            inverses.append(inv)
        return tuple(inverses)

    def is_unit(self, x) -> bool:
        return all(f.is_unit(a) for f, a in zip(self.factors, x))

    def elements(self):
        self.require_finite()
        return itertools.product(*(list(f.elements()) for f in self.factors))

    def random_value(self, rng):
        return tuple(f.random_value(rng) for f in self.factors)

    def format_value(self, x):
        return [f.format_value(a) for f, a in zip(self.factors, x)]

    def parse_value(self, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != len(self.factors):
            raise RingParseError(f"Expected {len(self.factors)} components for {self}")
        return tuple(f.parse_value(a) for f, a in zip(self.factors, obj))

    @property
    def size(self):
        total = 1
        for f in self.factors:
            if f.size is None:
                return None
            total *= f.size
        return total

    @property
    def is_commutative(self):
        return all(f.is_commutative for f in self.factors)


def row_reduce(rows: List[List[Any]], field: Ring) -> Tuple[List[List[Any]], List[int]]:
    """
    Reduced row echelon form over a field.

    Returns:
        (reduced rows, pivot columns); the first len(pivots) rows are the basis
    """
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != field.zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.try_invert(rows[r][c])
        rows[r] = [field.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != field.zero:
                factor = rows[i][c]
                rows[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


class MatrixRing(Ring):
    """
    M_n(R) over any inner ring; values are n-tuples of n-tuples of inner values.
    """

    def __init__(self, n: int, inner: Ring):
        self.n = n
        self.inner = inner
        self.descriptor = RingDescriptor.mat(n, inner.descriptor)
        self.zero = self.from_entries([[inner.zero] * n for _ in range(n)])
        self.one = self.scalar(inner.one)

    # -- construction and access

    def entries(self, x) -> List[List[Any]]:
        return [list(row) for row in x]

    def from_entries(self, rows) -> Any:
        return tuple(tuple(row) for row in rows)

    def scalar(self, c):
        inner = self.inner
        return self.from_entries([[c if i == j else inner.zero for j in range(self.n)] for i in range(self.n)])

    def unit_matrix(self, i: int, j: int, c=None):
        """c times the matrix unit E_ij (0-based), c defaults to 1"""
        c = self.inner.one if c is None else c
        rows = [[self.inner.zero] * self.n for _ in range(self.n)]
        rows[i][j] = c
        return self.from_entries(rows)

    def transpose(self, x):
        rows = self.entries(x)
        return self.from_entries([[rows[j][i] for j in range(self.n)] for i in range(self.n)])

    # -- arithmetic

    def add(self, x, y):
        f = self.inner.add
        return tuple(tuple(f(a, b) for a, b in zip(r, s)) for r, s in zip(x, y))

    def neg(self, x):
        f = self.inner.neg
        return tuple(tuple(f(a) for a in r) for r in x)

    def mul(self, x, y):
        inner, n = self.inner, self.n
        cols = list(zip(*y))
        out = []
        for row in x:
            new_row = []
            for col in cols:
                acc = inner.zero
                for a, b in zip(row, col):
                    if a != inner.zero and b != inner.zero:
                        acc = inner.add(acc, inner.mul(a, b))
                new_row.append(acc)
            out.append(tuple(new_row))
        return tuple(out)

    def rank(self, x) -> int:
        if not self.inner.is_field:
            raise UnsupportedOperationError(f"rank needs a field as inner ring, got {self.inner}")
        return len(row_reduce(self.entries(x), self.inner)[1])

    def determinant(self, x):
        inner = self.inner
        if not inner.is_commutative:
            raise UnsupportedOperationError(f"determinant needs a commutative inner ring, got {inner}")
        rows = self.entries(x)
        if inner.is_field:
            return _field_determinant(rows, inner)
        return _cofactor_determinant(rows, inner)

    def try_invert(self, x):
        inner = self.inner
        if inner.is_field:
            return self._gauss_jordan_inverse(x)
        if isinstance(inner, MatrixRing):
            return self._block_inverse(x)
        if isinstance(inner, ProductRing):
            return self._componentwise_inverse(x)
        if inner.is_commutative:
            det_inv = inner.try_invert(self.determinant(x))
            if det_inv is None:
                return None
            adj = _adjugate(self.entries(x), inner)
            return self.from_entries([[inner.mul(det_inv, a) for a in row] for row in adj])
        raise UnsupportedOperationError(f"inversion is not implemented over {inner}")

    def _gauss_jordan_inverse(self, x):
        n, field = self.n, self.inner
        aug = [row + [field.one if i == j else field.zero for j in range(n)]
               for i, row in enumerate(self.entries(x))]
        reduced, pivots = row_reduce(aug, field)
        if pivots[:n] != list(range(n)):
            return None
        return self.from_entries([row[n:] for row in reduced[:n]])

    def _block_inverse(self, x):
        inner = self.inner
        m = inner.n
        flat_ring = make_matrix_ring(self.n * m, inner.inner)
        flat = [[None] * (self.n * m) for _ in range(self.n * m)]
        for bi, row in enumerate(x):
            for bj, block in enumerate(row):
                for i, brow in enumerate(inner.entries(block)):
                    for j, v in enumerate(brow):
                        flat[bi * m + i][bj * m + j] = v
        inv = flat_ring.try_invert(flat_ring.from_entries(flat))
        if inv is None:
            return None
        inv_rows = flat_ring.entries(inv)
        return self.from_entries([
            [inner.from_entries([inv_rows[bi * m + i][bj * m:(bj + 1) * m] for i in range(m)])
             for bj in range(self.n)]
            for bi in range(self.n)
        ])

    def _componentwise_inverse(self, x):
        components = []
        for idx, factor in enumerate(self.inner.factors):
            ring = make_matrix_ring(self.n, factor)
            part = ring.from_entries([[a[idx] for a in row] for row in x])
            inv = ring.try_invert(part)
            if inv is None:
                return None
            components.append(ring.entries(inv))
        return self.from_entries([
            [tuple(c[i][j] for c in components) for j in range(self.n)] for i in range(self.n)
        ])

    def is_unit(self, x) -> bool:
        if self.inner.is_field:
            return self.rank(x) == self.n
        return self.try_invert(x) is not None

    # -- enumeration and I/O

    def elements(self):
        self.require_finite()
        values = list(self.inner.elements())
        n = self.n
        for flat in itertools.product(values, repeat=n * n):
            yield tuple(flat[i * n:(i + 1) * n] for i in range(n))

    def random_value(self, rng):
        return self.from_entries([[self.inner.random_value(rng) for _ in range(self.n)] for _ in range(self.n)])

    def format_value(self, x):
        return [[self.inner.format_value(a) for a in row] for row in self.entries(x)]

    def parse_value(self, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != self.n:
            raise RingParseError(f"Expected {self.n} rows for {self}")
        rows = []
        for row in obj:
            if not isinstance(row, (list, tuple)) or len(row) != self.n:
                raise RingParseError(f"Expected {self.n} columns for {self}")
            rows.append([self.inner.parse_value(a) for a in row])
        return self.from_entries(rows)

    @property
    def size(self):
        inner = self.inner.size
        return None if inner is None else inner ** (self.n * self.n)

    @property
    def is_commutative(self):
        return self.n == 1 and self.inner.is_commutative


def _field_determinant(rows, field):
    rows = [list(r) for r in rows]
    n = len(rows)
    det = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != field.zero), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = field.neg(det)
        det = field.mul(det, rows[c][c])
        inv = field.try_invert(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != field.zero:
                factor = field.mul(rows[i][c], inv)
                rows[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[i], rows[c])]
    return det


def _cofactor_determinant(rows, ring):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n > 6:
        raise UnsupportedOperationError("cofactor expansion is limited to size 6")
    det = ring.zero
    for j in range(n):
        if rows[0][j] == ring.zero:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = ring.mul(rows[0][j], _cofactor_determinant(minor, ring))
        det = ring.add(det, term) if j % 2 == 0 else ring.sub(det, term)
    return det


def _adjugate(rows, ring):
    n = len(rows)
    if n == 1:
        return [[ring.one]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            cof = _cofactor_determinant(minor, ring)
            adj[j][i] = cof if (i + j) % 2 == 0 else ring.neg(cof)
    return adj


def make_matrix_ring(n: int, inner: Ring) -> MatrixRing:
    """M_n(inner), using the bit-packed implementation over GF(2)"""
    from .gf2 import GF2MatrixRing, MAX_PACKED_SIZE
    if isinstance(inner, PrimeField) and inner.p == 2 and n <= MAX_PACKED_SIZE:
        return GF2MatrixRing(n)
    return MatrixRing(n, inner)


@lru_cache(maxsize=None)
def build_ring(descriptor: RingDescriptor) -> Ring:
    """
    Construct the ring a descriptor names.

    Args:
        descriptor: parsed ring descriptor

    Returns:
        Ring: shared instance; rings are immutable so instances are cached
    """
    kind = descriptor.kind
    if kind == RingKind.PRIME_FIELD:
        return PrimeField(descriptor.order)
    if kind == RingKind.EXTENSION_FIELD:
        return ExtensionField(descriptor.order)
    if kind == RingKind.MODULAR:
        return ModularIntegers(descriptor.order)
    if kind == RingKind.PRODUCT:
        return ProductRing([build_ring(f) for f in descriptor.factors])
    if kind == RingKind.MATRIX:
        return make_matrix_ring(descriptor.order, build_ring(descriptor.inner))
    from .free_ring import FreeRing
    return FreeRing(descriptor.variables)


def ring_from_text(text: str) -> Ring:
    from .descriptors import parse_ring
    return build_ring(parse_ring(text))
