"""
field.py - contains the PrimeField and FieldElement dataclasses for the gf module.
"""

from dataclasses import dataclass, field, asdict
from functools import lru_cache
from numbers import Integral
from typing import *

import galois

from ..base.base_list import BaseList
from ..base.limits import LIMITS
from ..exceptions.Exceptions import (
    CompositeModulusError,
    FieldMismatchError,
    FieldSizeError,
    ZeroInverseError,
)


def is_prime(n: int) -> bool:
    """
    Trial-division primality test. Inputs are desk-scale (n < 2^16).

    Params:
        n (int): The number to test.

    Returns:
        bool: True if n is prime.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def galois_field(p: int) -> Type[galois.FieldArray]:
    """
    The galois FieldArray subclass for GF(p), built once per modulus.
    """
    return galois.GF(p)


@dataclass(frozen=True)
class PrimeField:
    """
    PrimeField - represents Z_p, the integers modulo a prime p.
    """

    p: int = field(metadata={"description": "The prime modulus."})

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError(f"PrimeField p must be an int, not {type(self.p)}")
        if not 2 <= self.p < LIMITS["max_modulus"]:
            raise FieldSizeError(
                f"Modulus must satisfy 2 <= p < {LIMITS['max_modulus']}, got {self.p}."
            )
        if not is_prime(self.p):
            raise CompositeModulusError(f"Modulus {self.p} is not prime.")

    def __str__(self) -> str:
        return f"Z_{self.p}"

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value=value, field=self)

    def __contains__(self, item) -> bool:
        return isinstance(item, FieldElement) and item.field == self

    @property
    def order(self) -> int:
        return self.p

    @property
    def array_class(self) -> Type[galois.FieldArray]:
        """
        The galois array type whose arithmetic matches this field.
        """
        return galois_field(self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self) -> BaseList:
        """
        All p elements in increasing order of representative.
        """
        return BaseList(FieldElement(v, self) for v in range(self.p))

    def nonzero_elements(self) -> BaseList:
        """
        The p-1 units in increasing order of representative.
        """
        return BaseList(FieldElement(v, self) for v in range(1, self.p))

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict):
        if "p" not in data:
            raise ValueError("Dictionary must contain the following keys: {'p'}")
        return cls(p=data["p"])


def as_field(value: Union[PrimeField, int]) -> PrimeField:
    """
    Accept either a PrimeField or a bare prime and return a PrimeField.
    """
    if isinstance(value, PrimeField):
        return value
    return PrimeField(int(value))


@dataclass(frozen=True, eq=False)
class FieldElement:
    """
    FieldElement - a canonical residue 0 <= value < p in a PrimeField.

    Plain ints are accepted as the other operand and lifted into the same field.
    Combining elements of different fields raises FieldMismatchError.
    """

    value: int = field(metadata={"description": "The canonical representative."})
    field: PrimeField = field(
        metadata={"description": "The field the element belongs to."}, repr=False
    )

    def __post_init__(self):
        if not isinstance(self.field, PrimeField):
            raise TypeError(
                f"FieldElement field must be a PrimeField, not {type(self.field)}"
            )
        try:
            value = int(self.value)
        except (TypeError, ValueError):
            raise TypeError(
                f"FieldElement value must be an integer, not {type(self.value)}"
            )
        object.__setattr__(self, "value", value % self.field.p)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"Cannot combine elements of {self.field} and {other.field}."
                )
            return other
        if isinstance(other, Integral):
            return FieldElement(other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value + other.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value - other.value, self.field)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(other.value - self.value, self.field)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value * other.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.field.p), self.field)

    def inv(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroInverseError(f"0 has no inverse in {self.field}.")
        return FieldElement(pow(self.value, -1, self.field.p), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        # ints compare against the canonical representative only
        if isinstance(other, Integral):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def to_dict(self) -> dict:
        return {"value": self.value, "p": self.field.p}

    def keys(self):
        return self.to_dict().keys()

    def values(self):
        return self.to_dict().values()

    def items(self):
        return self.to_dict().items()

    @classmethod
    def from_dict(cls, data: dict):
        """
        from_dict - create a FieldElement from {"value": ..., "p": ...}.
        """
        required_keys = {"value", "p"}
        if not required_keys.issubset(data.keys()):
            raise ValueError(
                f"Dictionary must contain the following keys: {required_keys}"
            )
        return cls(value=data["value"], field=PrimeField(data["p"]))


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    """
    Multiplicative inverse. Raises ZeroInverseError for 0.
    """
    return a.inv()
