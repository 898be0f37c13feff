# pylint: disable=missing-docstring

import unittest
from typing import List

from hypothesis import given, settings, strategies as st

from giralebench.constructions import gen_gn
from giralebench.hilbert import (
    MATCHING_PROFILE,
    SCHEMATA,
    SYSTEMS,
    ByAxiom,
    ByHypothesis,
    ByModusPonens,
    ByNecessitation,
    Derivation,
    Step,
    check_derivation,
    dump_derivation,
    load_derivation,
    match_schema,
    parse_derivation,
    soundness_scan,
    unmatched_algebras,
)
from giralebench.profiles import Profile
from giralebench.syntax import (
    Formula,
    Var,
    metas_to_variables,
    parse_formula,
    rename_variables,
    validates,
)

import tests.common


def _parse(text: str) -> Formula:
    formula, error = parse_formula(text)
    assert error is None, error
    assert formula is not None
    return formula


def _load(name: str) -> Derivation:
    derivation, error = load_derivation(
        tests.common.TEST_DATA_DIR / "derivations" / f"{name}.proof"
    )
    assert error is None, error
    assert derivation is not None
    return derivation


class TestMatchSchema(unittest.TestCase):
    def test_identity(self) -> None:
        self.assertEqual(
            {"p": Var("x")}, match_schema(_parse("x -> x"), SCHEMATA["HL1"])
        )

    def test_compound_instance(self) -> None:
        self.assertEqual(
            {"p": _parse("a /\\ b")},
            match_schema(_parse("(a /\\ b) -> (a /\\ b)"), SCHEMATA["HL1"]),
        )

    def test_metavariable_binds_once(self) -> None:
        self.assertIsNone(match_schema(_parse("x -> y"), SCHEMATA["HL1"]))

    def test_constants_must_coincide(self) -> None:
        self.assertIsNone(match_schema(_parse("0"), SCHEMATA["HL8"]))
        self.assertEqual({}, match_schema(_parse("1"), SCHEMATA["HL8"]))

    @given(
        st.sampled_from(sorted(SCHEMATA)),
        st.permutations(["u", "v", "w"]),
    )
    @settings(max_examples=60, deadline=None)
    def test_matching_survives_renaming(self, axiom: str, names: List[str]) -> None:
        schema = SCHEMATA[axiom]
        instance = metas_to_variables(schema.pattern)
        renamed = rename_variables(instance, dict(zip(["p", "q", "r"], names)))

        self.assertIsNotNone(match_schema(instance, schema))
        self.assertIsNotNone(match_schema(renamed, schema))


class TestCheckDerivation(unittest.TestCase):
    def test_meet_unit_elimination(self) -> None:
        derivation = _load("meet_unit_elimination")
        self.assertEqual("p", str(derivation.conclusion()))
        self.assertTrue(check_derivation(derivation, SYSTEMS["MALL"]).passed)

    def test_meet_unit_introduction(self) -> None:
        derivation = _load("meet_unit_introduction")
        self.assertEqual(
            "(1 -> p /\\ 1) /\\ (p /\\ 1 -> 1)", str(derivation.conclusion())
        )
        self.assertTrue(check_derivation(derivation, SYSTEMS["MALL"]).passed)

    def test_accepted_in_mall_means_accepted_in_ll(self) -> None:
        for name in ("meet_unit_elimination", "meet_unit_introduction"):
            self.assertTrue(check_derivation(_load(name), SYSTEMS["LL"]).passed)

    def test_bad_modus_ponens(self) -> None:
        report = check_derivation(_load("bad_step"), SYSTEMS["MALL"])
        self.assertFalse(report.passed)
        self.assertEqual("BAD-STEP", report.violations[0].condition)
        self.assertEqual((2,), report.violations[0].witness)

    def test_hypothesis_without_hypotheses(self) -> None:
        derivation = Derivation("lonely", [], [Step(Var("q"), ByHypothesis(1))])
        report = check_derivation(derivation, SYSTEMS["MALL"])
        self.assertEqual((1,), report.violations[0].witness)

    def test_axiom_outside_of_the_system(self) -> None:
        derivation = Derivation(
            "exponential", [], [Step(_parse("!p -> p"), ByAxiom("HL23"))]
        )
        self.assertFalse(check_derivation(derivation, SYSTEMS["MALL"]).passed)
        self.assertTrue(check_derivation(derivation, SYSTEMS["LL"]).passed)

    def test_necessitation_needs_a_categorical_premise(self) -> None:
        categorical = Derivation(
            "categorical",
            [],
            [Step(_parse("1"), ByAxiom("HL8")), Step(_parse("!1"), ByNecessitation(1))],
        )
        self.assertTrue(check_derivation(categorical, SYSTEMS["LL"]).passed)

        hypothetical = Derivation(
            "hypothetical",
            [Var("p")],
            [Step(Var("p"), ByHypothesis(1)), Step(_parse("!p"), ByNecessitation(1))],
        )
        report = check_derivation(hypothetical, SYSTEMS["LL"])
        self.assertEqual((2,), report.violations[0].witness)

    def test_modus_ponens_refers_to_earlier_steps(self) -> None:
        derivation = Derivation("forward", [], [Step(Var("p"), ByModusPonens(1, 2))])
        self.assertFalse(check_derivation(derivation, SYSTEMS["MALL"]).passed)


class TestSoundness(unittest.TestCase):
    def test_fixture_derivations_are_sound(self) -> None:
        corpus = [tests.common.g1(), tests.common.g2()]
        for name in ("meet_unit_elimination", "meet_unit_introduction"):
            report = soundness_scan(_load(name), SYSTEMS["MALL"], corpus)
            self.assertTrue(report.passed)

    def test_single_axiom_is_sound(self) -> None:
        derivation = Derivation("one", [], [Step(_parse("1"), ByAxiom("HL8"))])
        report = soundness_scan(derivation, SYSTEMS["LL"], [tests.common.g2()])
        self.assertTrue(report.passed)

    def test_a_corrupted_derivation_is_caught(self) -> None:
        # A checker accepting this step would be unsound
        corrupted = Derivation(
            "corrupted", [Var("p")], [Step(Var("q"), ByModusPonens(1, 1))]
        )
        report = soundness_scan(
            corrupted, SYSTEMS["MALL"], [tests.common.g1(), tests.common.g2()]
        )
        self.assertEqual("UNSOUND", report.violations[0].condition)
        self.assertEqual((0,), report.violations[0].witness)

    def test_unmatched_algebras(self) -> None:
        corpus = [
            tests.common.g2(),
            gen_gn(3),
            tests.common.load_fixture_algebra("chain3_heyting"),
        ]
        # G_3 is not associative and the chain has no negation
        self.assertEqual([1, 2], unmatched_algebras(SYSTEMS["MALL"], corpus))
        self.assertEqual([], unmatched_algebras(SYSTEMS["ILL"], corpus))

    def test_girard_algebras_do_not_match_ll(self) -> None:
        g2 = tests.common.g2()
        self.assertEqual(
            [1], unmatched_algebras(SYSTEMS["LL"], [g2, g2.evolve(drop=["bang"])])
        )

    def test_axioms_are_valid_in_the_matching_profile(self) -> None:
        for system in ("MALL", "LL"):
            profile = MATCHING_PROFILE[system]
            algebras = list(tests.common.corpus(profile))
            if profile == Profile.BOUNDED_GIRALE:
                algebras.extend(tests.common.fixed_algebras())

            for axiom in SYSTEMS[system].axioms:
                instance = metas_to_variables(SCHEMATA[axiom].pattern)
                for algebra in algebras:
                    self.assertTrue(
                        validates(algebra, instance), f"{axiom} in {algebra.name}"
                    )

    def test_mingle_is_not_valid_in_g2(self) -> None:
        instance = metas_to_variables(SCHEMATA["MINGLE"].pattern)
        self.assertFalse(validates(tests.common.g2(), instance))


class TestText(unittest.TestCase):
    def test_dump_is_parsed_back(self) -> None:
        derivation = _load("meet_unit_introduction")
        parsed, error = parse_derivation(dump_derivation(derivation))
        self.assertIsNone(error)
        assert parsed is not None
        self.assertEqual(derivation.system, parsed.system)
        self.assertEqual(derivation.hypotheses, parsed.hypotheses)
        self.assertEqual(
            [str(step) for step in derivation.steps],
            [str(step) for step in parsed.steps],
        )

    def test_compressed_justification_is_rejected(self) -> None:
        _, error = parse_derivation(
            "derivation compressed\nstep 1: 1 -> 1 by (HL3) + (MP)\n"
        )
        assert error is not None
        self.assertEqual("SYNTAX-ERROR", error.code)
        self.assertIn("Line 2", error.message)

    def test_steps_are_numbered_consecutively(self) -> None:
        _, error = parse_derivation("derivation skip\nstep 2: 1 by axiom HL8\n")
        assert error is not None
        self.assertIn("Expected the step 1", error.message)

    def test_unknown_axiom(self) -> None:
        _, error = parse_derivation("derivation x\nstep 1: 1 by axiom HL99\n")
        assert error is not None
        self.assertIn("HL99", error.message)


if __name__ == "__main__":
    unittest.main()
