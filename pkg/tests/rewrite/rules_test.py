import pytest
from hypothesis import given, settings, strategies as st

from hopfkit.algebra import Alphabet, Generator, NcPoly, WeightScheme, parse_polynomial
from hopfkit.common.checks import ConfigurationError, TerminationOrderViolation
from hopfkit.examples import ExampleSpec
from hopfkit.rewrite import (MonomialOrder, RewriteRule, RuleSet, WindowSpec, confluence_report, normalize,
                             quotient_mul, word_basis)
from hopfkit.rewrite.rules import Redex
from hopfkit.scalars import FieldDescriptor

QQ = FieldDescriptor.rationals()
AB = Alphabet([Generator("a", grade=1), Generator("b", grade=1)])


def rule(lhs: str, rhs: str, alphabet: Alphabet = AB, field: FieldDescriptor = QQ) -> RewriteRule:
    left = parse_polynomial(lhs, alphabet, field)
    return RewriteRule(left.leading_word(), parse_polynomial(rhs, alphabet, field))


class TestRuleSet:
    def test_rules_must_decrease(self):
        with pytest.raises(TerminationOrderViolation) as info:
            RuleSet(AB, QQ, [rule("a*b", "b*a")])
        assert "b*a" in str(info.value)
        with pytest.raises(TerminationOrderViolation):
            RuleSet(AB, QQ, [rule("a", "a*a")])

    def test_commutation_sorts_words(self):
        rules = RuleSet(AB, QQ, [rule("b*a", "a*b")])
        assert rules.normal_form(("b", "a", "b", "a")) == parse_polynomial("a*a*b*b", AB, QQ)
        assert rules.is_normal(("a", "a", "b"))
        assert not rules.is_normal(("a", "b", "a"))

    def test_earliest_rule_at_leftmost_position(self):
        rules = RuleSet(AB, QQ, [rule("b*b", "a"), rule("b*a", "a*b")])
        redex = rules.find_redex(("b", "a", "b", "b"))
        assert (redex.rule_index, redex.position) == (0, 2)
        assert rules.find_redex(("a", "b", "a")).position == 1

    def test_normalize_and_quotient_mul(self, taft_wilson_p3):
        H = taft_wilson_p3
        x, y, z = (H.generator_poly(s) for s in "XYZ")
        assert quotient_mul(y, x, H.rules) == H.element("X*Y - X")
        assert quotient_mul(z, y, H.rules) == H.element("Y*Z + Z")
        assert normalize(parse_polynomial("Z*X", H.alphabet, H.field), H.rules) == H.element("X*Z - 1/2*X^2")
        assert H.rules.power(x, 3).is_zero()
        assert H.rules.power(y, 3) == y
        assert H.rules.power(z, 3).is_zero()

    def test_inverse_relations(self, uq_borel_c3):
        H = uq_borel_c3
        assert H.word(("K", "Ki")) == H.one()
        assert H.word(("Ki", "K")) == H.one()
        assert H.word(("K", "E")) == H.element("q*E*K")
        assert H.word(("Ki", "E")) == H.element("q^2*E*K^-1")

    def test_replace_keeps_order_checks(self):
        rules = RuleSet(AB, QQ, [rule("b*a", "a*b")])
        replaced = rules.replace(0, rule("b*a", "-a*b"))
        assert replaced.normal_form(("b", "a")) == parse_polynomial("-a*b", AB, QQ)
        assert rules.to_strings() == ["b*a = a*b"]


PRESENTATIONS = [ExampleSpec.taft_wilson(3), ExampleSpec.uq_borel_cyclotomic(3), ExampleSpec.group_cyclic(4),
                 ExampleSpec.group_laurent()]


def _words(H):
    return st.lists(st.sampled_from(H.alphabet.symbols), max_size=5).map(tuple)


def _polys(H):
    terms = st.lists(st.tuples(_words(H), st.integers(min_value=-3, max_value=3)), min_size=1, max_size=3)
    return terms.map(lambda pairs: NcPoly(H.alphabet, H.field, [(w, H.field.from_int(c)) for w, c in pairs]))


def _reduce_at_random(rules, word, data):
    """
    Rewrites at a randomly drawn redex until every word is normal.
    """
    poly = NcPoly.from_word(rules.alphabet, rules.field, word)
    while True:
        redexes = [(word, Redex(index, position))
                   for word in poly.words()
                   for index, rule in enumerate(rules)
                   for position in range(len(word) - len(rule.lhs) + 1)
                   if word[position:position + len(rule.lhs)] == rule.lhs]
        if not redexes:
            return poly
        word, redex = data.draw(st.sampled_from(redexes))
        coefficient = poly.coefficient(word)
        poly = poly - NcPoly.from_word(rules.alphabet, rules.field, word).scale(coefficient) \
            + rules.rewrite_once(word, redex).scale(coefficient)


@pytest.mark.parametrize("spec", PRESENTATIONS, ids=lambda spec: spec.name)
class TestNormalFormLaws:
    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_normalize_is_idempotent_and_linear(self, spec, data, build_cached):
        H = build_cached(spec)
        f, g = data.draw(_polys(H)), data.draw(_polys(H))
        factor = H.field.from_int(data.draw(st.integers(min_value=-5, max_value=5)))
        assert normalize(normalize(f, H.rules), H.rules) == normalize(f, H.rules)
        assert normalize(f.scale(factor) + g, H.rules) == normalize(f, H.rules).scale(factor) + normalize(g, H.rules)
        assert all(H.rules.is_normal(word) for word in normalize(f, H.rules).words())

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_quotient_mul_is_associative(self, spec, data, build_cached):
        H = build_cached(spec)
        f, g, h = (data.draw(_polys(H)) for _ in range(3))
        assert quotient_mul(quotient_mul(f, g, H.rules), h, H.rules) == \
            quotient_mul(f, quotient_mul(g, h, H.rules), H.rules)

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_normal_form_does_not_depend_on_the_strategy(self, spec, data, build_cached):
        H = build_cached(spec)
        word = data.draw(_words(H))
        assert _reduce_at_random(H.rules, word, data) == H.rules.normal_form(word)


class TestConfluence:
    def test_commutation_is_confluent(self):
        assert confluence_report(RuleSet(AB, QQ, [rule("b*a", "a*b")]), 6) == []

    def test_non_joinable_overlaps_are_reported(self):
        rules = RuleSet(AB, QQ, [rule("b*a", "a"), rule("a*b", "b")])
        problems = confluence_report(rules, 3)
        assert {AB.display_word(problem.word) for problem in problems} == {"b*a*b", "a*b*a"}
        assert all(problem.kind == "overlap" for problem in problems)
        assert problems[0].to_json()["rules"] == ["b*a = a", "a*b = b"]

    def test_depth_limits_the_search(self):
        rules = RuleSet(AB, QQ, [rule("b*a", "a"), rule("a*b", "b")])
        assert confluence_report(rules, 2) == []
        with pytest.raises(ValueError):
            confluence_report(rules, 0)

    def test_builtin_relations_are_confluent(self, taft_wilson_p3, uq_borel_c3, group_cyclic_4, group_laurent):
        for H in (taft_wilson_p3, uq_borel_c3, group_cyclic_4, group_laurent):
            assert confluence_report(H.rules, 6) == [], H.name


class TestWordBasis:
    def test_normal_words_of_the_restricted_algebra(self, taft_wilson_p3):
        words = word_basis(taft_wilson_p3.rules, 6, WeightScheme.LENGTH)
        assert len(words) == 27
        assert words[0] == ()
        assert words == MonomialOrder(taft_wilson_p3.alphabet).sort(words)

    def test_grade_window(self, taft_wilson_p3):
        words = word_basis(taft_wilson_p3.rules, 2, "grade")
        assert len(words) == 12
        assert ("Z",) in words
        assert ("X", "Z") not in words

    def test_length_cap(self, group_laurent):
        words = word_basis(group_laurent.rules, 0, "grade", length_cap=2)
        assert set(words) == {(), ("g",), ("gi",), ("g", "g"), ("gi", "gi")}

    def test_negative_bound(self, group_laurent):
        with pytest.raises(ConfigurationError):
            word_basis(group_laurent.rules, -1)


class TestWindowSpec:
    def test_caps(self):
        assert WindowSpec(WeightScheme.GRADE, 3).effective_cap() == 10
        assert WindowSpec(WeightScheme.LENGTH, 3).effective_cap() == 3
        assert WindowSpec(WeightScheme.GRADE, 3, 5).enlarged() == WindowSpec(WeightScheme.GRADE, 4, 7)

    def test_json(self):
        spec = WindowSpec.from_json({"weights": "filtration", "bound": 2, "length_cap": None})
        assert spec == WindowSpec(WeightScheme.FILTRATION, 2)
        assert spec.to_json() == {"weights": "filtration", "bound": 2, "length_cap": None}
        with pytest.raises(ConfigurationError):
            WindowSpec.from_json({"bound": 2, "depth": 1})
        with pytest.raises(ConfigurationError):
            WindowSpec.from_json({"weights": "size", "bound": 2})
