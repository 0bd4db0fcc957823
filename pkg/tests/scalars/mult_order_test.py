from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hopfkit.scalars import FieldDescriptor, MultOrder, mult_order


class TestMultOrder:
    @pytest.mark.parametrize("p, value, expected", [
            (7, 3, 6),
            (7, 2, 3),
            (7, 6, 2),
            (5, 1, 1),
            (11, 10, 2),
    ])
    def test_prime_fields(self, p, value, expected):
        assert mult_order(FieldDescriptor.prime_field(p).from_int(value)) == MultOrder.finite(expected)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 7, 12])
    def test_cyclotomic_root_has_order_n(self, n):
        assert mult_order(FieldDescriptor.cyclotomic(n).generator()) == MultOrder.finite(n)

    def test_negated_root_in_odd_cyclotomic_field(self):
        zeta = FieldDescriptor.cyclotomic(5).generator()
        assert mult_order(-zeta) == MultOrder.finite(10)

    def test_non_roots_of_unity_are_infinite(self):
        zeta = FieldDescriptor.cyclotomic(5).generator()
        assert mult_order(zeta + 1).is_infinite
        assert mult_order(FieldDescriptor.cyclotomic(5).from_int(2)).is_infinite

    def test_rationals(self):
        qq = FieldDescriptor.rationals()
        assert mult_order(qq.from_int(1)) == MultOrder.finite(1)
        assert mult_order(qq.from_int(-1)) == MultOrder.finite(2)
        assert mult_order(qq.from_fraction(Fraction(1, 2))).is_infinite

    def test_rational_functions(self):
        field = FieldDescriptor.rational_functions("q")
        assert mult_order(field.generator()).is_infinite
        assert mult_order(field.from_int(-1)) == MultOrder.finite(2)

    def test_zero(self):
        assert mult_order(FieldDescriptor.prime_field(3).zero()) == MultOrder.zero()
        assert str(MultOrder.zero()) == "Zero"
        assert str(MultOrder.finite(4)) == "Finite(4)"


def _assert_minimal(s, order):
    assert order.is_finite
    assert (s ** order.value).is_one()
    for divisor in sympy.divisors(order.value)[:-1]:
        assert not (s ** divisor).is_one()


class TestMinimality:
    @settings(max_examples=200, deadline=None)
    @given(st.sampled_from([3, 5, 7, 11, 13, 31]), st.integers(min_value=1, max_value=1000))
    def test_prime_field_orders_are_minimal(self, p, value):
        s = FieldDescriptor.prime_field(p).from_int(value)
        if s.is_zero():
            assert mult_order(s) == MultOrder.zero()
        else:
            _assert_minimal(s, mult_order(s))
            assert mult_order(s).value == sympy.n_order(value % p, p)

    @settings(max_examples=200, deadline=None)
    @given(st.sampled_from([1, 2, 3, 4, 5, 8, 9, 12]), st.integers(min_value=0, max_value=30), st.booleans())
    def test_cyclotomic_roots_of_unity_are_minimal(self, n, k, negate):
        zeta = FieldDescriptor.cyclotomic(n).generator()
        s = -(zeta ** k) if negate else zeta ** k
        _assert_minimal(s, mult_order(s))
