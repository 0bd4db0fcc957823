"""
The built-in families and their parameters, with the values the structure theory predicts
for each member.
"""
from enum import Enum
from typing import Any, Dict, NamedTuple, Optional

import sympy

from hopfkit.algebra.expressions import parse_scalar
from hopfkit.common.checks import ConfigurationError, SpecInvariantViolated
from hopfkit.common.verdicts import OrderResult
from hopfkit.scalars.field import FieldDescriptor, FieldKind
from hopfkit.scalars.mult_order import mult_order
from hopfkit.scalars.scalar import Scalar


class Family(Enum):
    UQ_BOREL = "uq-borel"
    TAFT_WILSON = "taft-wilson"
    GROUP_CYCLIC = "group-cyclic"
    GROUP_LAURENT = "group-laurent"


class ExampleSpec(NamedTuple):
    """
    One member of a built-in family.

    family : which algebra.
    field : the coefficient field. The Taft–Wilson algebra needs a prime field of odd
        characteristic.
    n : the order of the cyclic group for ``group-cyclic``.
    q : the deformation parameter of ``uq-borel`` as an expression over ``field``. Defaults
        to the distinguished generator of cyclotomic and rational-function fields.
    """
    family: Family
    field: FieldDescriptor
    n: Optional[int] = None
    q: Optional[str] = None

    @classmethod
    def uq_borel(cls, field: FieldDescriptor, q: Optional[str] = None) -> "ExampleSpec":
        return cls(Family.UQ_BOREL, field, q=q)

    @classmethod
    def uq_borel_cyclotomic(cls, n: int) -> "ExampleSpec":
        return cls(Family.UQ_BOREL, FieldDescriptor.cyclotomic(n, variable="q"))

    @classmethod
    def uq_borel_generic(cls) -> "ExampleSpec":
        return cls(Family.UQ_BOREL, FieldDescriptor.rational_functions("q"))

    @classmethod
    def taft_wilson(cls, p: int) -> "ExampleSpec":
        return cls(Family.TAFT_WILSON, FieldDescriptor.prime_field(p))

    @classmethod
    def group_cyclic(cls, n: int, field: Optional[FieldDescriptor] = None) -> "ExampleSpec":
        return cls(Family.GROUP_CYCLIC, field or FieldDescriptor.rationals(), n=n)

    @classmethod
    def group_laurent(cls, field: Optional[FieldDescriptor] = None) -> "ExampleSpec":
        return cls(Family.GROUP_LAURENT, field or FieldDescriptor.rationals())

    def q_value(self) -> Scalar:
        """
        The deformation parameter as a scalar of ``field``.
        """
        if self.q is not None:
            return parse_scalar(self.q, self.field)
        if self.field.kind in (FieldKind.CYCLOTOMIC, FieldKind.RATIONAL_FUNCTIONS):
            return self.field.generator()
        raise ConfigurationError("uq-borel over {} needs an explicit q".format(self.field))

    def validate(self) -> None:
        if self.family == Family.UQ_BOREL:
            q = self.q_value()
            if q.is_zero() or q.is_one():
                raise SpecInvariantViolated("uq-borel needs q different from 0 and 1, got q = {}".format(q))
        elif self.family == Family.TAFT_WILSON:
            if self.field.kind != FieldKind.PRIME or self.field.p < 3:
                raise SpecInvariantViolated("taft-wilson needs a prime field of characteristic p >= 3, got {}"
                                            .format(self.field))
        elif self.family == Family.GROUP_CYCLIC:
            if self.n is None or self.n < 1:
                raise SpecInvariantViolated("group-cyclic needs n >= 1, got {}".format(self.n))

    @property
    def label(self) -> str:
        """
        The sweep parameter: ``n`` for cyclic groups and cyclotomic ``uq-borel``, ``p`` for
        prime fields, otherwise the field.
        """
        if self.family == Family.GROUP_CYCLIC:
            return str(self.n)
        if self.field.kind == FieldKind.CYCLOTOMIC:
            return str(self.field.n)
        if self.field.kind == FieldKind.PRIME and self.family == Family.TAFT_WILSON:
            return str(self.field.p)
        if self.q is not None:
            return "{}, q = {}".format(self.field, self.q)
        return str(self.field)

    @property
    def name(self) -> str:
        field = self.field
        if self.family == Family.UQ_BOREL:
            if field.kind == FieldKind.CYCLOTOMIC:
                return "uq_borel_c{}".format(field.n)
            if field.kind == FieldKind.RATIONAL_FUNCTIONS:
                return "uq_borel_generic_q"
            return "uq_borel_{}".format("gf{}".format(field.p) if field.kind == FieldKind.PRIME else "qq")
        if self.family == Family.TAFT_WILSON:
            return "taft_wilson_r_p{}".format(field.p)
        suffix = "" if field.characteristic() == 0 else "_gf{}".format(field.p)
        if self.family == Family.GROUP_CYCLIC:
            return "group_cyclic_{}{}".format(self.n, suffix)
        return "group_laurent{}".format(suffix)


class ExpectedResults(NamedTuple):
    """
    Predicted ``m_H``, antipode order and characteristic-p bound ``2·m_H·p^l``. ``None`` in
    ``m_H`` or ``order`` means infinite; ``bound`` is ``None`` in characteristic zero.
    """
    m_H: Optional[int]  # pylint: disable=invalid-name
    order: Optional[int]
    bound: Optional[int] = None

    def matches_m_H(self, result: OrderResult) -> bool:  # pylint: disable=invalid-name
        return _matches(self.m_H, result)

    def matches_order(self, result: OrderResult) -> bool:
        return _matches(self.order, result)

    def to_json(self) -> Dict[str, Any]:
        return {"m_H": _display(self.m_H), "order": _display(self.order), "bound": self.bound}


def _matches(expected: Optional[int], result: OrderResult) -> bool:
    if expected is None:
        return result.is_infinite
    return result.is_finite and result.value == expected


def _display(value: Optional[int]) -> str:
    return "∞" if value is None else str(value)


def expected_results(spec: ExampleSpec) -> ExpectedResults:
    field = spec.field
    p = field.characteristic()
    if spec.family == Family.UQ_BOREL:
        m = _order_of_q(spec)
        if m is None:
            return ExpectedResults(None, None)
        # Generated in degree 1, so l = 0 and the bound is 2·m_H.
        return ExpectedResults(m, 2 * m, 2 * m if p else None)
    if spec.family == Family.TAFT_WILSON:
        return ExpectedResults(1, 2 * p, 2 * p)
    if spec.family == Family.GROUP_CYCLIC:
        return ExpectedResults(1, 1 if spec.n <= 2 else 2, 2 if p else None)
    return ExpectedResults(1, 2, 2 if p else None)


def _order_of_q(spec: ExampleSpec) -> Optional[int]:
    """
    The multiplicative order of ``q`` read off the family parameters: ``n`` for the
    distinguished root of ``QQ(zeta_n)``, the residue order modulo ``p`` over a prime field.
    """
    field = spec.field
    if field.kind == FieldKind.CYCLOTOMIC and spec.q is None:
        return field.n
    q = spec.q_value()
    if field.kind == FieldKind.PRIME:
        return int(sympy.n_order(int(q.constant_value()), field.p))
    if field.kind == FieldKind.RATIONALS:
        return 2 if q == -1 else None
    order = mult_order(q)
    return order.value if order.is_finite else None
