"""
Exact field elements. A :class:`Scalar` pairs a :class:`FieldDescriptor` with the
canonical form of a value, so equality of scalars is equality of canonical forms:

* rationals: a reduced ``Fraction``;
* prime fields: a residue in ``[0, p)``;
* cyclotomic fields: a ``sympy`` ring element of ``QQ[zeta]`` reduced modulo ``Phi_n``;
* rational functions: a ``sympy`` fraction-field element of ``QQ(q)``, which keeps its
  numerator and denominator cancelled.
"""
from fractions import Fraction
from typing import Any, Union

from sympy.polys.rings import PolyElement

from hopfkit.common.checks import DivisionByZero, FieldMismatch
from hopfkit.scalars.field import FieldDescriptor, FieldKind

Operand = Union["Scalar", int, Fraction]


class Scalar:
    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value: Any) -> None:
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other: Operand) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch("cannot combine {} with {}".format(self.field, other.field))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(Fraction(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.value

    def is_one(self) -> bool:
        return self == self.field.one()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: Operand) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.kind == FieldKind.PRIME:
            return Scalar(self.field, (self.value + other.value) % self.field.p)
        return Scalar(self.field, self.value + other.value)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        if self.field.kind == FieldKind.PRIME:
            return Scalar(self.field, (-self.value) % self.field.p)
        return Scalar(self.field, -self.value)

    def __sub__(self, other: Operand) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Operand) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Operand) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        kind, field = self.field.kind, self.field
        if kind == FieldKind.PRIME:
            return Scalar(field, (self.value * other.value) % field.p)
        if kind == FieldKind.CYCLOTOMIC:
            return Scalar(field, (self.value * other.value) % field.modulus)
        return Scalar(field, self.value * other.value)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("division by zero in {}".format(self.field))
        kind, field = self.field.kind, self.field
        if kind == FieldKind.RATIONALS:
            return Scalar(field, 1 / self.value)
        if kind == FieldKind.PRIME:
            return Scalar(field, pow(self.value, field.p - 2, field.p))
        if kind == FieldKind.CYCLOTOMIC:
            # s * value + t * Phi_n = 1, since Phi_n is irreducible and value is reduced
            s, _, common = self.value.gcdex(field.modulus)
            return Scalar(field, (s * common.LC ** -1) % field.modulus)
        return Scalar(field, self.value.field.one / self.value)

    def __truediv__(self, other: Operand) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Operand) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.field.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_fraction(Fraction(other))
        return isinstance(other, Scalar) and self.field == other.field and self.value == other.value

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def is_constant(self) -> bool:
        """
        Whether the element lies in the prime field (for rational functions: whether it is
        a constant function).
        """
        kind = self.field.kind
        if kind == FieldKind.CYCLOTOMIC:
            return self.value.is_ground
        if kind == FieldKind.RATIONAL_FUNCTIONS:
            return self.value.numer.is_ground and self.value.denom.is_ground
        return True

    def constant_value(self) -> Fraction:
        kind = self.field.kind
        if kind == FieldKind.CYCLOTOMIC:
            return _fraction(self.value.const())
        if kind == FieldKind.RATIONAL_FUNCTIONS:
            return _fraction(self.value.numer.const()) / _fraction(self.value.denom.const())
        return Fraction(self.value)

    def __str__(self) -> str:
        kind = self.field.kind
        if kind in (FieldKind.RATIONALS, FieldKind.PRIME):
            return str(self.value)
        if kind == FieldKind.CYCLOTOMIC:
            return _poly_text(self.value)
        numerator, denominator = self.value.numer, self.value.denom
        text = _poly_text(numerator)
        if denominator == 1:
            return text
        if len(numerator) > 1:
            text = "(" + text + ")"
        below = _poly_text(denominator)
        if len(denominator) > 1 or (not denominator.is_ground and denominator.LC != 1):
            below = "(" + below + ")"
        return "{}/{}".format(text, below)

    def __repr__(self) -> str:
        return "Scalar({}, {})".format(self.field, self)


def _fraction(coefficient: Any) -> Fraction:
    return Fraction(int(coefficient.numerator), int(coefficient.denominator))


def _poly_text(poly: PolyElement) -> str:
    return str(poly).replace("**", "^")


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """
    One exact field operation, ``op`` in ``{"add", "sub", "mul", "div"}``.
    """
    if a.field != b.field:
        raise FieldMismatch("cannot combine {} with {}".format(a.field, b.field))
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown field operation {!r}".format(op))
