import pytest
from hypothesis import given, settings, strategies as st

from hopfkit.algebra import NcPoly, TensorPoly, parse_polynomial, parse_tensor, tensor_arith
from hopfkit.common.checks import UntrustedPresentation
from hopfkit.examples import ExampleSpec, build_document
from hopfkit.hopf import (antipode, counit, delta, presentation_from_document, verify, verify_antipode,
                          verify_bialgebra)
from hopfkit.order import antipode_power
from hopfkit.scalars import FieldDescriptor
from hopfkit.structure import BasisWindow

WINDOW_FAMILIES = [ExampleSpec.uq_borel_cyclotomic(3), ExampleSpec.uq_borel_generic(),
                   ExampleSpec.uq_borel(FieldDescriptor.prime_field(7), "3"), ExampleSpec.taft_wilson(3),
                   ExampleSpec.group_cyclic(4), ExampleSpec.group_laurent()]


def _coproduct_mutant(H, symbol, text):
    return H.with_coproduct(symbol, parse_tensor(text, H.alphabet, H.field))


def _antipode_mutant(H, symbol, text):
    return H.with_antipode(symbol, parse_polynomial(text, H.alphabet, H.field))


class TestStructureMaps:
    def test_coproduct_is_multiplicative(self, uq_borel_c3):
        H = uq_borel_c3
        assert str(delta(H.element("E*K"), H)) == "E*K@K + K^2@E*K"
        assert delta(H.element("K*K^-1"), H) == delta(H.one(), H)

    def test_counit(self, taft_wilson_p3, uq_borel_c3):
        assert counit(taft_wilson_p3.element("X*Y + 2"), taft_wilson_p3) == 2
        assert counit(uq_borel_c3.element("K^2 - E"), uq_borel_c3) == 1

    def test_antipode_is_anti_multiplicative(self, uq_borel_c3):
        H = uq_borel_c3
        e, k = H.generator_poly("E"), H.generator_poly("K")
        assert antipode(H.multiply(e, k), H) == H.multiply(antipode(k, H), antipode(e, H))
        assert antipode(e, H) == H.element("-K^-1*E")

    def test_taft_wilson_antipode(self, taft_wilson_p3):
        H = taft_wilson_p3
        assert H.antipode(H.generator_poly("Z")) == H.element("-Z + X*Y")
        assert H.antipode(H.element("X*Y")) == H.element("Y*X")

    def test_group_likes_and_inverses(self, uq_borel_c3, group_cyclic_4):
        assert uq_borel_c3.is_group_like_word(("K",))
        assert not uq_borel_c3.is_group_like_word(("E",))
        assert uq_borel_c3.inverse_of(("K",)) == uq_borel_c3.word(("Ki",))
        assert group_cyclic_4.inverse_of(("g",)) == group_cyclic_4.word(("g", "g", "g"))

    def test_commutativity_probe(self, uq_borel_c3, group_laurent):
        assert ("E", "K") in uq_borel_c3.commutativity_probe()
        assert group_laurent.is_commutative()


class TestVerification:
    @pytest.mark.parametrize("family", ["uq_borel_c3", "uq_borel_c5", "uq_borel_generic", "taft_wilson_p3",
                                        "taft_wilson_p5", "group_cyclic_4", "group_laurent"])
    def test_builtins_are_trusted(self, family, request):
        H = request.getfixturevalue(family)
        report = verify(H)
        assert report.passed, str(report)
        assert H.trusted
        assert report.details["trusted"] is True

    @pytest.mark.parametrize("mutate", [
            lambda H: _coproduct_mutant(H, "E", "E@1 + 1@E"),
            lambda H: _coproduct_mutant(H, "K", "K@1"),
            lambda H: _coproduct_mutant(H, "E", "E@E"),
            lambda H: _antipode_mutant(H, "E", "-E*K^-1"),
            lambda H: _antipode_mutant(H, "K", "K"),
    ])
    def test_single_field_mutations_of_uq_borel_fail(self, uq_borel_c3, mutate):
        mutant = mutate(uq_borel_c3)
        assert not mutant.trusted
        report = verify(mutant)
        assert not report.passed
        assert report.witnesses
        assert not mutant.trusted

    @pytest.mark.parametrize("mutate", [
            lambda H: _coproduct_mutant(H, "Z", "Z@1 + 1@Z"),
            lambda H: _antipode_mutant(H, "Z", "-Z"),
    ])
    def test_single_field_mutations_of_taft_wilson_fail(self, taft_wilson_p3, mutate):
        mutant = mutate(taft_wilson_p3)
        report = verify_antipode(mutant)
        assert not report.passed
        assert not mutant.trusted

    def test_counit_law_failure_names_the_generator(self, uq_borel_c3):
        report = verify_bialgebra(_coproduct_mutant(uq_borel_c3, "K", "K@1"))
        assert any("counit law fails on K" in witness.description for witness in report.witnesses)

    def test_untrusted_presentations_are_refused(self, uq_borel_c3):
        mutant = _antipode_mutant(uq_borel_c3, "K", "K")
        with pytest.raises(UntrustedPresentation):
            antipode_power(mutant, mutant.generator_poly("E"), 2)

    def test_report_json(self, group_laurent):
        document = verify(group_laurent).to_json()
        assert document["status"] == "PASS"
        assert document["details"]["bialgebra"] == "PASS"
        assert document["witnesses"] == []

    def test_group_likes_are_fixed_by_s_squared_after_verification(self, build_cached):
        for spec in WINDOW_FAMILIES:
            H = build_cached(spec)
            assert verify(H).passed
            for word in H.group_likes:
                element = H.word(word)
                assert antipode_power(H, element, 2) == element, H.display(word)
                assert H.multiply(H.antipode(element), element) == H.one()

    def test_a_false_group_like_is_caught(self):
        document = build_document(ExampleSpec.uq_borel_cyclotomic(3))
        document["group_likes"].append("E")
        report = verify(presentation_from_document(document))
        assert not report.passed
        assert any(witness.element.startswith("Δ(E) = ") for witness in report.witnesses)

    @pytest.mark.parametrize("mutate", [
            lambda H: _coproduct_mutant(H, "g", "g@1"),
            lambda H: _coproduct_mutant(H, "g", "g@1 + 1@g"),
            lambda H: _antipode_mutant(H, "g", "g"),
            lambda H: _antipode_mutant(H, "g", "g^2"),
    ])
    def test_single_field_mutations_of_cyclic_groups_fail(self, group_cyclic_4, mutate):
        mutant = mutate(group_cyclic_4)
        report = verify(mutant)
        assert not report.passed
        assert report.witnesses
        assert not mutant.trusted

    @pytest.mark.parametrize("mutate", [
            lambda H: _coproduct_mutant(H, "g", "g@g^-1"),
            lambda H: _coproduct_mutant(H, "gi", "g^-1@1"),
            lambda H: _antipode_mutant(H, "g", "g"),
            lambda H: _antipode_mutant(H, "gi", "g^-1*g^-1"),
    ])
    def test_single_field_mutations_of_the_laurent_group_fail(self, group_laurent, mutate):
        mutant = mutate(group_laurent)
        report = verify(mutant)
        assert not report.passed
        assert report.witnesses
        assert not mutant.trusted


class TestTensorArith:
    def test_componentwise_product(self, uq_borel_c3):
        H = uq_borel_c3
        product = tensor_arith(H.delta(H.generator_poly("E")), H.delta(H.generator_poly("K")), "componentwise_mul",
                               H.rules)
        assert product == parse_tensor("E*K@K + K^2@E*K", H.alphabet, H.field)
        assert product == H.delta(H.element("E*K"))

    def test_unit_and_linear_operations(self, uq_borel_c3):
        H = uq_borel_c3
        t = parse_tensor("E@1 + K@E", H.alphabet, H.field)
        unit = TensorPoly.unit(H.alphabet, H.field)
        assert tensor_arith(unit, t, "componentwise_mul", H.rules) == t
        assert tensor_arith(t, t, "sub").is_zero()
        assert tensor_arith(t, t, "add") == t.scale(2)
        with pytest.raises(ValueError):
            tensor_arith(t, t, "divide")

    def test_conjugating_a_skew_primitive(self, uq_borel_c3):
        H = uq_borel_c3
        x, x_inverse, h = H.element("K^-1"), H.element("K"), H.element("E*K^-1")

        def pure(left, right):
            return TensorPoly.from_pure([left, right])

        conjugated = tensor_arith(tensor_arith(pure(x, x), H.delta(h), "componentwise_mul", H.rules),
                                  pure(x_inverse, x_inverse), "componentwise_mul", H.rules)
        c = H.multiply(H.multiply(x, h), x_inverse)
        assert conjugated == pure(c, x) + pure(H.one(), c)


def _window_elements(H):
    words = BasisWindow.build(H).words
    terms = st.lists(st.tuples(st.sampled_from(words), st.integers(min_value=-3, max_value=3)), min_size=1,
                     max_size=3)
    return terms.map(lambda pairs: H.rules.normalize(NcPoly(H.alphabet, H.field, pairs)))


@pytest.mark.parametrize("spec", WINDOW_FAMILIES, ids=lambda spec: spec.name)
class TestStructureMapLaws:
    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_coproduct_and_counit_are_multiplicative(self, spec, data, build_cached):
        H = build_cached(spec)
        f, g = data.draw(_window_elements(H)), data.draw(_window_elements(H))
        product = H.multiply(f, g)
        assert H.delta(product) == tensor_arith(H.delta(f), H.delta(g), "componentwise_mul", H.rules)
        assert H.counit(product) == H.counit(f) * H.counit(g)

    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_antipode_is_anti_multiplicative(self, spec, data, build_cached):
        H = build_cached(spec)
        f, g = data.draw(_window_elements(H)), data.draw(_window_elements(H))
        assert H.antipode(H.multiply(f, g)) == H.multiply(H.antipode(g), H.antipode(f))

    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_antipode_axiom_on_window_elements(self, spec, data, build_cached):
        H = build_cached(spec)
        f = data.draw(_window_elements(H))
        unit = NcPoly.from_scalar(H.alphabet, H.field, H.counit(f))
        assert H.delta(f).map_slot(0, H.antipode_word).multiply_slots(H.rules) == unit
        assert H.delta(f).map_slot(1, H.antipode_word).multiply_slots(H.rules) == unit
