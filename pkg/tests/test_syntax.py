# pylint: disable=missing-docstring

import unittest

from hypothesis import given, settings, strategies as st

from giralebench.syntax import (
    Bang,
    Const,
    ConstantKind,
    Equation,
    Formula,
    Imp,
    Join,
    Meet,
    Mult,
    Neg,
    Par,
    Quasiequation,
    Quest,
    Var,
    connectives,
    evaluate,
    expand_defined,
    find_falsifying,
    missing_for_formula,
    parse_equation,
    parse_formula,
    parse_sentence,
    print_formula,
    rho,
    satisfies,
    semantic_consequence,
    tau,
    validates,
    variables,
)
from giralebench.profiles import Profile

import tests.common


def _parse(text: str) -> Formula:
    formula, error = parse_formula(text)
    assert error is None, error
    assert formula is not None
    return formula


P, Q, R = Var("p"), Var("q"), Var("r")

FORMULAS = st.recursive(
    st.sampled_from([P, Q, R] + [Const(kind) for kind in ConstantKind]),
    lambda children: st.one_of(
        st.builds(Neg, children),
        st.builds(Bang, children),
        st.builds(Quest, children),
        st.builds(Mult, children, children),
        st.builds(Par, children, children),
        st.builds(Imp, children, children),
        st.builds(Meet, children, children),
        st.builds(Join, children, children),
    ),
    max_leaves=8,
)


class TestParse(unittest.TestCase):
    def test_implication_is_right_associative(self) -> None:
        self.assertEqual(Imp(P, Imp(Q, R)), _parse("p -> q -> r"))
        self.assertEqual(Imp(Imp(P, Q), R), _parse("(p -> q) -> r"))

    def test_precedence(self) -> None:
        self.assertEqual(Join(P, Meet(Q, R)), _parse("p \\/ q /\\ r"))
        self.assertEqual(Meet(Par(P, Q), R), _parse("p + q /\\ r"))
        self.assertEqual(Mult(Neg(P), Q), _parse("~p * q"))
        self.assertEqual(Bang(Neg(Bang(P))), _parse("!~!p"))

    def test_constants(self) -> None:
        self.assertEqual(
            Imp(Const(ConstantKind.BOT), Const(ConstantKind.TOP)), _parse("F -> T")
        )
        self.assertEqual(
            Par(Const(ConstantKind.ONE), Const(ConstantKind.ZERO)), _parse("1 + 0")
        )

    def test_error_offset(self) -> None:
        formula, error = parse_formula("p -> )")
        self.assertIsNone(formula)
        assert error is not None
        self.assertEqual("SYNTAX-ERROR", error.code)
        self.assertEqual(5, error.offset)

    def test_unexpected_character(self) -> None:
        _, error = parse_formula("p % q")
        assert error is not None
        self.assertEqual(2, error.offset)

    def test_trailing_tokens(self) -> None:
        _, error = parse_formula("p q")
        assert error is not None
        self.assertEqual(2, error.offset)

    def test_sentences(self) -> None:
        sentence, error = parse_sentence("p /\\ 1 = 1")
        self.assertIsNone(error)
        self.assertIsInstance(sentence, Equation)

        sentence, error = parse_sentence("p = q & q = r => p = r")
        self.assertIsNone(error)
        assert isinstance(sentence, Quasiequation)
        self.assertEqual(2, len(sentence.premises))
        self.assertEqual("p = q & q = r => p = r", str(sentence))

    @given(FORMULAS)
    @settings(max_examples=200, deadline=None)
    def test_printing_is_parsed_back(self, formula: Formula) -> None:
        self.assertEqual(formula, _parse(print_formula(formula)))


class TestStructure(unittest.TestCase):
    def test_variables_are_sorted(self) -> None:
        self.assertEqual(["p", "q", "r"], variables(_parse("r * (q -> p)")))

    def test_expansion_of_defined_connectives(self) -> None:
        self.assertEqual(Imp(Neg(P), Q), expand_defined(_parse("p + q")))
        self.assertEqual(Neg(Bang(Neg(P))), expand_defined(_parse("?p")))

    def test_connectives(self) -> None:
        self.assertEqual(
            frozenset(["imp", "bang", "one"]), connectives(_parse("!p -> 1"))
        )

    def test_tau_and_rho(self) -> None:
        self.assertEqual("p /\\ 1 = 1", str(tau(P)))

        equation, _ = parse_equation("p * q = q")
        assert equation is not None
        there, back = rho(equation)
        self.assertEqual("p * q -> q", print_formula(there))
        self.assertEqual("q -> p * q", print_formula(back))


class TestSemantics(unittest.TestCase):
    def test_evaluation_in_g2(self) -> None:
        g2 = tests.common.g2()
        # zero · zero = ⊤ and ¬⊤ = ⊥
        self.assertEqual(0, evaluate(_parse("~(p * p)"), g2, {"p": 2}))
        self.assertEqual(1, evaluate(_parse("!T"), g2, {}))
        self.assertEqual(1, evaluate(_parse("p -> p"), g2, {"p": 1}))

    def test_falsifying_assignment_is_the_first(self) -> None:
        g2 = tests.common.g2()
        self.assertEqual({"p": 0}, find_falsifying(_parse("p"), g2))
        self.assertIsNone(find_falsifying(_parse("!p -> p"), g2))

    def test_excluded_middle_holds_in_g2(self) -> None:
        g2 = tests.common.g2()
        self.assertTrue(validates(g2, _parse("p \\/ ~p")))
        self.assertFalse(validates(g2, _parse("p \\/ ~p -> p")))

    def test_missing_bang(self) -> None:
        algebra = tests.common.g2().evolve(drop=["bang"])
        error = missing_for_formula(_parse("!p"), algebra)
        assert error is not None
        self.assertEqual("MISSING-TABLE", error.code)

    def test_unbound_variable(self) -> None:
        error = missing_for_formula(_parse("p -> q"), tests.common.g2(), {"p": 0})
        assert error is not None
        self.assertEqual("UNBOUND-VARIABLE", error.code)

    def test_quasiequation(self) -> None:
        holds, _ = parse_sentence("p * p = p => !p = p /\\ 1")
        assert isinstance(holds, Quasiequation)
        self.assertTrue(satisfies(tests.common.g2(), holds))

        # ⊤ is idempotent but ⊤ ∧ 1 is 1
        fails, _ = parse_sentence("p * p = p => p /\\ 1 = p")
        assert isinstance(fails, Quasiequation)
        self.assertFalse(satisfies(tests.common.g2(), fails))

    def test_rules_are_sound_in_the_corpus(self) -> None:
        modus_ponens = ([P, Imp(P, Q)], Q)
        adjunction = ([P, Q], Meet(P, Q))
        necessitation = ([P], Bang(P))

        girales = list(tests.common.corpus(Profile.BOUNDED_GIRALE))
        for algebra in girales + tests.common.fixed_algebras():
            for premises, conclusion in (modus_ponens, adjunction, necessitation):
                self.assertTrue(
                    semantic_consequence(premises, conclusion, algebra),
                    f"{print_formula(conclusion)} in {algebra.name}",
                )

    @given(FORMULAS)
    @settings(max_examples=50, deadline=None)
    def test_validity_is_the_equation_of_tau(self, formula: Formula) -> None:
        girales = list(tests.common.corpus(Profile.BOUNDED_GIRALE))
        for algebra in girales + tests.common.fixed_algebras():
            self.assertEqual(
                validates(algebra, formula), satisfies(algebra, tau(formula))
            )


if __name__ == "__main__":
    unittest.main()
