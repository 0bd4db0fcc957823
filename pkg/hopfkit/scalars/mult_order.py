"""
Certified multiplicative orders. Every verdict is exact: a finite order is confirmed by
exponentiation, and an infinite one follows from a structural fact about the field
(e.g. the roots of unity in the n-th cyclotomic field all have order dividing
``lcm(2, n)``).
"""
import math
from typing import Any, Dict, Optional

import sympy

from hopfkit.scalars.field import FieldKind
from hopfkit.scalars.scalar import Scalar


class MultOrder:
    """
    ``Finite(m)``, ``InfiniteCertified`` or ``Zero``.
    """
    FINITE = "finite"
    INFINITE = "infinite"
    ZERO = "zero"

    __slots__ = ("kind", "value")

    def __init__(self, kind: str, value: Optional[int] = None) -> None:
        self.kind = kind
        self.value = value

    @classmethod
    def finite(cls, value: int) -> "MultOrder":
        return cls(cls.FINITE, value)

    @classmethod
    def infinite(cls) -> "MultOrder":
        return cls(cls.INFINITE)

    @classmethod
    def zero(cls) -> "MultOrder":
        return cls(cls.ZERO)

    @property
    def is_finite(self) -> bool:
        return self.kind == self.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == self.INFINITE

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind, "value": self.value}

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, MultOrder) and (self.kind, self.value) == (other.kind, other.value)

    def __hash__(self) -> int:
        return hash((self.kind, self.value))

    def __str__(self) -> str:
        if self.kind == self.FINITE:
            return "Finite({})".format(self.value)
        return "InfiniteCertified" if self.kind == self.INFINITE else "Zero"

    __repr__ = __str__


def _first_divisor_order(s: Scalar, exponent_bound: int) -> Optional[int]:
    for divisor in sympy.divisors(exponent_bound):
        if (s ** divisor).is_one():
            return int(divisor)
    return None


def mult_order(s: Scalar) -> MultOrder:
    if s.is_zero():
        return MultOrder.zero()
    field = s.field
    kind = field.kind
    if kind == FieldKind.RATIONALS:
        return _rational_order(s.constant_value())
    if kind == FieldKind.PRIME:
        return MultOrder.finite(_first_divisor_order(s, field.p - 1))
    if kind == FieldKind.CYCLOTOMIC:
        # Every root of unity in QQ(zeta_n) has order dividing lcm(2, n).
        order = _first_divisor_order(s, 2 * field.n // math.gcd(2, field.n))
        return MultOrder.finite(order) if order is not None else MultOrder.infinite()
    if s.is_constant():
        return _rational_order(s.constant_value())
    return MultOrder.infinite()


def _rational_order(value) -> MultOrder:
    if value == 1:
        return MultOrder.finite(1)
    if value == -1:
        return MultOrder.finite(2)
    return MultOrder.infinite()
