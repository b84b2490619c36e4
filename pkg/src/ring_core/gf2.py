"""
Bit-packed matrices over GF(2).

A matrix is a tuple of n row words; bit j of row i is the (i, j) entry.
Addition is XOR, and row i of a product is the XOR of the rows of the right
factor selected by the bits of row i of the left factor.
"""

import itertools
from typing import Iterable, List, Optional, Tuple

import numpy as np

from .rings import MatrixRing, PrimeField

MAX_PACKED_SIZE = 64

Packed = Tuple[int, ...]


def popcount(x: int) -> int:
    return bin(x).count("1")


def pack_rows(rows: Iterable[Iterable[int]]) -> Packed:
    packed = []
    for row in rows:
        word = 0
        for j, bit in enumerate(row):
            if bit & 1:
                word |= 1 << j
        packed.append(word)
    return tuple(packed)


def unpack_rows(x: Packed, n: int) -> List[List[int]]:
    return [[(word >> j) & 1 for j in range(n)] for word in x]


def gf2_mul(x: Packed, y: Packed) -> Packed:
    out = []
    for word in x:
        acc = 0
        j = 0
        while word:
            if word & 1:
                acc ^= y[j]
            word >>= 1
            j += 1
        out.append(acc)
    return tuple(out)


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a set of row words (XOR basis by leading bit)"""
    basis = {}
    for word in rows:
        while word:
            top = word.bit_length() - 1
            if top not in basis:
                basis[top] = word
                break
            word ^= basis[top]
    return len(basis)


def gf2_inverse(x: Packed) -> Optional[Packed]:
    n = len(x)
    left = list(x)
    right = [1 << i for i in range(n)]
    for c in range(n):
        bit = 1 << c
        pivot = next((i for i in range(c, n) if left[i] & bit), None)
        if pivot is None:
            return None
        left[c], left[pivot] = left[pivot], left[c]
        right[c], right[pivot] = right[pivot], right[c]
        for i in range(n):
            if i != c and left[i] & bit:
                left[i] ^= left[c]
                right[i] ^= right[c]
    return tuple(right)


def to_single_int(x: Packed, n: int) -> int:
    """Concatenate the rows into one integer, row i at bits [i*n, (i+1)*n)"""
    value = 0
    for i, word in enumerate(x):
        value |= word << (i * n)
    return value


def from_single_int(value: int, n: int) -> Packed:
    mask = (1 << n) - 1
    return tuple((value >> (i * n)) & mask for i in range(n))


def to_array(x: Packed, n: int) -> np.ndarray:
    return np.array(unpack_rows(x, n), dtype=np.uint8)


def from_array(a: np.ndarray) -> Packed:
    return pack_rows((int(v) for v in row) for row in a.tolist())


def reference_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Unpacked product used to cross-check the packed kernel"""
    return (x.astype(np.int64) @ y.astype(np.int64)) % 2


def reference_inverse(x: np.ndarray) -> Optional[np.ndarray]:
    """Unpacked Gauss-Jordan inverse over GF(2)"""
    n = x.shape[0]
    aug = np.concatenate([x.astype(np.uint8) % 2, np.eye(n, dtype=np.uint8)], axis=1)
    for c in range(n):
        nonzero = np.nonzero(aug[c:, c])[0]
        if nonzero.size == 0:
            return None
        p = c + int(nonzero[0])
        if p != c:
            aug[[c, p]] = aug[[p, c]]
        for i in range(n):
            if i != c and aug[i, c]:
                aug[i] ^= aug[c]
    return aug[:, n:]


def packed_to_uint64(values: List[Packed], n: int) -> np.ndarray:
    """Pack whole matrices (n*n <= 64 bits) into a uint64 array"""
    return np.array([to_single_int(v, n) for v in values], dtype=np.uint64)


def uint64_to_packed(array: np.ndarray, n: int) -> List[Packed]:
    return [from_single_int(int(v), n) for v in array.tolist()]


class GF2MatrixRing(MatrixRing):
    """M_n(GF(2)) with bit-packed rows"""

    def __init__(self, n: int):
        if n > MAX_PACKED_SIZE:
            raise ValueError(f"packed GF(2) matrices are limited to size {MAX_PACKED_SIZE}")
        self.mask = (1 << n) - 1
        super().__init__(n, PrimeField(2))

    def entries(self, x):
        return unpack_rows(x, self.n)

    def from_entries(self, rows):
        return pack_rows(rows)

    def add(self, x, y):
        return tuple(a ^ b for a, b in zip(x, y))

    def neg(self, x):
        return x

    def sub(self, x, y):
        return tuple(a ^ b for a, b in zip(x, y))

    def mul(self, x, y):
        return gf2_mul(x, y)

    def rank(self, x) -> int:
        return gf2_rank(x)

    def determinant(self, x):
        return 1 if gf2_rank(x) == self.n else 0

    def try_invert(self, x):
        return gf2_inverse(x)

    def is_unit(self, x) -> bool:
        return gf2_rank(x) == self.n

    def transpose(self, x):
        n = self.n
        return tuple(sum(((x[i] >> j) & 1) << i for i in range(n)) for j in range(n))

    def elements(self):
        return itertools.product(range(1 << self.n), repeat=self.n)

    def random_value(self, rng):
        return tuple(int.from_bytes(rng.bytes(8), "little") & self.mask for _ in range(self.n))

    def to_int(self, x) -> int:
        return to_single_int(x, self.n)

    def from_int_code(self, value: int) -> Packed:
        return from_single_int(value, self.n)
