from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfkit.algebra import (Alphabet, Generator, NcPoly, TensorPoly, WeightScheme, parse_polynomial,
                             parse_tensor, parse_word, poly_arith, weighted_degree)
from hopfkit.common.checks import (AlphabetMismatch, ConfigurationError, ExpressionSyntaxError,
                                   UnknownSymbol)
from hopfkit.scalars import FieldDescriptor

QQ = FieldDescriptor.rationals()
ALPHABET = Alphabet([Generator("E", grade=1, filtration=1), Generator("K", inverse="Ki")])

words = st.lists(st.sampled_from(["E", "K", "Ki"]), max_size=3).map(tuple)
polys = st.lists(st.tuples(words, st.integers(min_value=-5, max_value=5)), max_size=4).map(
        lambda terms: NcPoly(ALPHABET, QQ, terms))


def poly(text: str) -> NcPoly:
    return parse_polynomial(text, ALPHABET, QQ)


class TestFreeAlgebra:
    @given(polys, polys, polys)
    def test_multiplication_is_associative_and_distributive(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    @given(polys, polys)
    def test_addition_is_commutative_with_inverse(self, a, b):
        assert a + b == b + a
        assert (a - a).is_zero()
        assert a - b == -(b - a)

    @given(polys)
    def test_unit(self, a):
        one = NcPoly.one(ALPHABET, QQ)
        assert a * one == a
        assert one * a == a

    def test_zero_coefficients_are_dropped(self):
        assert poly("E - E").is_zero()
        assert len(poly("E + K - E")) == 1
        assert NcPoly(ALPHABET, QQ, [(("E",), 0)]).is_zero()

    def test_multiplication_concatenates(self):
        product = poly("E") * poly("K")
        assert product.words() == [("E", "K")]
        assert (poly("K") * poly("K^-1")).words() == [("K", "Ki")]

    def test_terms_follow_the_monomial_order(self):
        value = poly("E*K + 3 + K + E")
        assert value.words() == [(), ("K",), ("E",), ("E", "K")]
        assert value.leading_word() == ("E", "K")

    def test_printing(self):
        assert str(poly("2*E*K + 1")) == "2*E*K + 1"
        assert str(poly("E - K^-2")) == "E - K^-2"
        assert str(poly("K*K")) == "K^2"
        assert str(poly("E/2")) == "1/2*E"
        assert str(NcPoly.zero(ALPHABET, QQ)) == "0"

    def test_scalar_comparison(self):
        assert poly("3") == 3
        assert poly("1/2") == Fraction(1, 2)
        assert poly("E") != 1

    def test_weights(self):
        value = poly("E*E*K + K")
        assert value.max_weight(WeightScheme.GRADE) == 2
        assert value.max_weight(WeightScheme.LENGTH) == 3
        assert weighted_degree(("E", "K", "E"), ALPHABET, "filtration") == 2
        assert NcPoly.zero(ALPHABET, QQ).max_weight(WeightScheme.GRADE) == -1

    def test_poly_arith(self):
        a, b = poly("E"), poly("K")
        assert poly_arith(a, b, "add") == poly("E + K")
        assert poly_arith(a, b, "sub") == poly("E - K")
        assert poly_arith(a, b, "concat_mul") == poly("E*K")
        assert poly_arith(a, poly("2"), "scalar_mul") == poly("2*E")
        with pytest.raises(ValueError):
            poly_arith(a, b, "scalar_mul")
        with pytest.raises(ValueError):
            poly_arith(a, b, "divide")

    def test_alphabets_must_agree(self):
        other = Alphabet([Generator("X", grade=1)])
        with pytest.raises(AlphabetMismatch):
            poly("E") + parse_polynomial("X", other, QQ)


class TestAlphabet:
    def test_inverse_symbols_follow_their_generator(self):
        assert ALPHABET.symbols == ("E", "K", "Ki")
        assert ALPHABET.inverse("K") == "Ki"
        assert ALPHABET.is_inverse_symbol("Ki")
        assert not ALPHABET.is_inverse_symbol("K")
        assert ALPHABET.invert_word(("K", "K", "Ki")) == ("K", "Ki", "Ki")
        assert ALPHABET.invert_word(("E",)) is None

    def test_display(self):
        assert ALPHABET.display_word(()) == "1"
        assert ALPHABET.display_word(("E", "E", "Ki", "K")) == "E^2*K^-1*K"

    def test_invalid_declarations(self):
        with pytest.raises(ConfigurationError):
            Alphabet([Generator("E"), Generator("E")])
        with pytest.raises(ConfigurationError):
            Alphabet([Generator("g", inverse="gi", grade=1)])
        with pytest.raises(ConfigurationError):
            Alphabet([Generator("2x")])


class TestExpressions:
    def test_tensors(self):
        tensor = parse_tensor("E@1 + K@E", ALPHABET, QQ)
        assert isinstance(tensor, TensorPoly)
        assert tensor.arity == 2
        assert str(tensor) == "E@1 + K@E"
        assert parse_tensor("E@K@1", ALPHABET, QQ, arity=3).arity == 3

    def test_tensor_binds_looser_than_product(self):
        tensor = parse_tensor("E*K@K", ALPHABET, QQ)
        assert list(tensor.keys()) == [(("E", "K"), ("K",))]

    def test_words(self):
        assert parse_word("K^-1", ALPHABET) == ("Ki",)
        assert parse_word("1", ALPHABET) == ()
        assert parse_word("E*K", ALPHABET) == ("E", "K")
        with pytest.raises(ConfigurationError):
            parse_word("2*E", ALPHABET)
        with pytest.raises(ConfigurationError):
            parse_word("E + K", ALPHABET)

    def test_field_variable(self):
        field = FieldDescriptor.cyclotomic(5, variable="q")
        value = parse_polynomial("q*E - E*q", ALPHABET, field)
        assert value.is_zero()

    @pytest.mark.parametrize("text", ["E +", "(E", "E ^", "E $ K", "E @ K + E", "E^-1", "(E + K)^-1"])
    def test_syntax_errors(self, text):
        with pytest.raises(ExpressionSyntaxError):
            parse_polynomial(text, ALPHABET, QQ)

    def test_unknown_symbols_are_positioned(self):
        with pytest.raises(UnknownSymbol) as info:
            parse_polynomial("E + F", ALPHABET, QQ)
        assert info.value.position == (1, 5)
        assert "E" in info.value.expected

    def test_division_by_zero_is_a_syntax_error(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_polynomial("E/0", ALPHABET, QQ)
