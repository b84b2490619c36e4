"""
RingElement: an immutable (ring, value) pair with arithmetic operators.
"""

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional

from ..errors import RingMismatchError
from .rings import Ring


@dataclass(frozen=True)
class RingElement:
    """Element of a ring; integers on either side of an operator are coerced"""
    ring: Ring
    value: Any

    def _coerce(self, other) -> Any:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(f"Cannot combine elements of {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def _wrap(self, value) -> "RingElement":
        return RingElement(self.ring, value)

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.ring.add(self.value, v))

    def __radd__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.ring.add(v, self.value))

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.ring.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.ring.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.ring.mul(self.value, v))

    def __rmul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.ring.mul(v, self.value))

    def __neg__(self):
        return self._wrap(self.ring.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.ring.pow(self.value, e))

    def try_invert(self) -> Optional["RingElement"]:
        inv = self.ring.try_invert(self.value)
        return None if inv is None else self._wrap(inv)

    def inverse(self) -> "RingElement":
        inv = self.try_invert()
        if inv is None:
            raise ZeroDivisionError(f"{self} is not invertible in {self.ring}")
        return inv

    @property
    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == self.ring.zero

    def to_json(self) -> Any:
        return self.ring.format_value(self.value)

    def __str__(self) -> str:
        formatted = self.to_json()
        if isinstance(formatted, list):
            return str(formatted).replace(" ", "")
        return str(formatted)


def elements_of(ring: Ring, values: Iterable[Any]) -> List[RingElement]:
    return [RingElement(ring, v) for v in values]


def zero(ring: Ring) -> RingElement:
    return RingElement(ring, ring.zero)


def one(ring: Ring) -> RingElement:
    return RingElement(ring, ring.one)
