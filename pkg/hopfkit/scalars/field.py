"""
Descriptors for the four coefficient fields: the rationals, prime fields, rational
functions in one variable over the rationals, and cyclotomic fields.
"""
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.fields import FracField, field
from sympy.polys.rings import PolyElement, PolyRing, ring

from hopfkit.common.checks import ConfigurationError


class FieldKind(Enum):
    RATIONALS = "rationals"
    PRIME = "prime"
    RATIONAL_FUNCTIONS = "rational_functions"
    CYCLOTOMIC = "cyclotomic"


@lru_cache(maxsize=None)
def cyclotomic_ring(n: int, variable: str) -> Tuple[PolyRing, PolyElement]:
    """
    The polynomial ring ``QQ[variable]`` together with the n-th cyclotomic polynomial in
    it. Cyclotomic field elements are ring elements reduced modulo that polynomial.
    """
    poly_ring, root = ring(variable, QQ)
    coefficients = sympy.cyclotomic_poly(n, polys=True).all_coeffs()
    modulus = poly_ring.zero
    for coefficient in coefficients:
        modulus = modulus * root + int(coefficient)
    return poly_ring, modulus


@lru_cache(maxsize=None)
def rational_function_field(variable: str) -> FracField:
    return field(variable, QQ)[0]


class FieldDescriptor:
    """
    Identifies a coefficient field. Descriptors are immutable and compare by value, so
    two independently built descriptors of ``GF(5)`` are interchangeable.

    Parameters
    ----------
    kind : ``FieldKind``
    p : ``int``, optional
        The characteristic of a prime field. Must be prime.
    n : ``int``, optional
        The order of the distinguished root of a cyclotomic field, ``n >= 1``.
    variable : ``str``, optional
        Name of the rational-function variable or of the primitive root of unity.
    """
    __slots__ = ("kind", "p", "n", "variable", "_key")

    def __init__(self,
                 kind: FieldKind,
                 p: Optional[int] = None,
                 n: Optional[int] = None,
                 variable: Optional[str] = None) -> None:
        if kind == FieldKind.PRIME:
            if p is None or p < 2 or not sympy.isprime(p):
                raise ConfigurationError("PrimeField needs a prime characteristic, got {}".format(p))
            n, variable = None, None
        elif kind == FieldKind.CYCLOTOMIC:
            if n is None or n < 1:
                raise ConfigurationError("Cyclotomic field needs n >= 1, got {}".format(n))
            p, variable = None, variable or "zeta"
        elif kind == FieldKind.RATIONAL_FUNCTIONS:
            p, n, variable = None, None, variable or "q"
        else:
            p, n, variable = None, None, None
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "_key", (kind.value, p, n, variable))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("FieldDescriptor is immutable")

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "FieldDescriptor":
        return cls(FieldKind.PRIME, p=p)

    @classmethod
    def rational_functions(cls, variable: str = "q") -> "FieldDescriptor":
        return cls(FieldKind.RATIONAL_FUNCTIONS, variable=variable)

    @classmethod
    def cyclotomic(cls, n: int, variable: str = "zeta") -> "FieldDescriptor":
        return cls(FieldKind.CYCLOTOMIC, n=n, variable=variable)

    def characteristic(self) -> int:
        return self.p if self.kind == FieldKind.PRIME else 0

    @property
    def modulus(self) -> PolyElement:
        if self.kind != FieldKind.CYCLOTOMIC:
            raise ConfigurationError("{} has no defining polynomial".format(self))
        return cyclotomic_ring(self.n, self.variable)[1]

    @property
    def degree(self) -> int:
        """
        Dimension over the prime field (for cyclotomic fields, Euler's totient of n).
        """
        if self.kind == FieldKind.CYCLOTOMIC:
            return int(sympy.totient(self.n))
        return 1

    # Element constructors live on the descriptor so callers never touch canonical forms.

    def from_fraction(self, value: Fraction) -> "Scalar":
        from hopfkit.scalars.scalar import Scalar
        value = Fraction(value)
        if self.kind == FieldKind.RATIONALS:
            return Scalar(self, value)
        if self.kind == FieldKind.PRIME:
            if value.denominator % self.p == 0:
                raise ConfigurationError("{} has no inverse in {}".format(value.denominator, self))
            return Scalar(self, value.numerator * pow(value.denominator, self.p - 2, self.p) % self.p)
        if self.kind == FieldKind.CYCLOTOMIC:
            return Scalar(self, cyclotomic_ring(self.n, self.variable)[0](_rational(value)))
        return Scalar(self, rational_function_field(self.variable)(_rational(value)))

    def from_int(self, value: int) -> "Scalar":
        return self.from_fraction(Fraction(value))

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def generator(self) -> "Scalar":
        """
        The field variable: the primitive root of a cyclotomic field or the indeterminate
        of a rational-function field.
        """
        from hopfkit.scalars.scalar import Scalar
        if self.kind == FieldKind.CYCLOTOMIC:
            poly_ring, modulus = cyclotomic_ring(self.n, self.variable)
            return Scalar(self, poly_ring.gens[0] % modulus)
        if self.kind == FieldKind.RATIONAL_FUNCTIONS:
            return Scalar(self, rational_function_field(self.variable).gens[0])
        raise ConfigurationError("{} has no distinguished generator".format(self))

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"kind": self.kind.value}
        if self.p is not None:
            document["p"] = self.p
        if self.n is not None:
            document["n"] = self.n
        if self.variable is not None:
            document["variable"] = self.variable
        return document

    @classmethod
    def from_json(cls, document: Dict[str, Any]) -> "FieldDescriptor":
        if not isinstance(document, dict) or "kind" not in document:
            raise ConfigurationError("field must be an object with a 'kind' entry")
        unknown = set(document) - {"kind", "p", "n", "variable"}
        if unknown:
            raise ConfigurationError("unknown field entries: {}".format(", ".join(sorted(unknown))))
        try:
            kind = FieldKind(document["kind"])
        except ValueError:
            raise ConfigurationError("unknown field kind {!r}; expected one of {}".format(
                    document["kind"], ", ".join(k.value for k in FieldKind)))
        return cls(kind, p=document.get("p"), n=document.get("n"), variable=document.get("variable"))

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, FieldDescriptor) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        if self.kind == FieldKind.RATIONALS:
            return "QQ"
        if self.kind == FieldKind.PRIME:
            return "GF({})".format(self.p)
        if self.kind == FieldKind.RATIONAL_FUNCTIONS:
            return "QQ({})".format(self.variable)
        return "QQ({}_{})".format(self.variable, self.n)

    def __repr__(self) -> str:
        return "FieldDescriptor({})".format(self)


def characteristic(field: FieldDescriptor) -> int:
    return field.characteristic()


def _rational(value: Fraction):
    return QQ(value.numerator, value.denominator)
