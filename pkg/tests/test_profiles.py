# pylint: disable=missing-docstring

import unittest

from giralebench.algebra import trivial_algebra
from giralebench.constructions import gen_gn
from giralebench.profiles import (
    Profile,
    TableView,
    Unassigned,
    check_crl_laws,
    check_girale_lemma,
    check_negation_laws,
    check_profile,
    check_residuation_lemma,
    missing_requirements,
    passes_profile,
)

import tests.common


class TestFixedAlgebras(unittest.TestCase):
    def test_hand_made_girales_pass(self) -> None:
        for algebra in tests.common.fixed_algebras():
            for profile in (
                Profile.CRL,
                Profile.GIRARD,
                Profile.BOUNDED_GIRARD,
                Profile.GIRALE,
                Profile.BOUNDED_GIRALE,
            ):
                report = check_profile(algebra, profile)
                self.assertTrue(
                    report.passed, f"{algebra.name} as {profile.value}: {report}"
                )

    def test_g2_is_a_model_of_relevance_logic(self) -> None:
        self.assertTrue(passes_profile(tests.common.g2(), Profile.LR))

    def test_trivial_algebra_passes_everything(self) -> None:
        trivial = trivial_algebra()
        for profile in Profile:
            self.assertTrue(passes_profile(trivial, profile), profile.value)

    def test_heyting_chain(self) -> None:
        chain = tests.common.load_fixture_algebra("chain3_heyting")
        self.assertTrue(passes_profile(chain, Profile.HEYTING))
        self.assertTrue(passes_profile(chain, Profile.GL))
        self.assertFalse(passes_profile(tests.common.g2(), Profile.HEYTING))

    def test_verdict_of_a_pass(self) -> None:
        report = check_profile(tests.common.g1(), Profile.BOUNDED_GIRALE)
        self.assertEqual("pass", report.verdict)
        self.assertIsNone(report.failed_layer)


class TestDiagnostics(unittest.TestCase):
    def test_g3_multiplication_is_not_associative(self) -> None:
        report = check_profile(gen_gn(3), Profile.CRL)
        self.assertFalse(report.passed)
        self.assertEqual("monoid", report.failed_layer)

        violation = report.violations[0]
        self.assertEqual("MULT-ASSOCIATIVE", violation.condition)
        # The scan reports the lexicographically first triple (zero, a3, a3),
        # where (0 · a3) · a3 = ⊤ and 0 · (a3 · a3) = ⊥. By commutativity this
        # is the same failure as the triple (a3, a3, zero), where
        # (a3 · a3) · 0 = ⊥ and a3 · (a3 · 0) = ⊤.
        self.assertEqual((2, 3, 3), violation.witness)

        g3 = gen_gn(3)
        assert g3.mult is not None
        mult = g3.mult
        self.assertEqual((0, 4), (mult[mult[3][3]][2], mult[3][mult[3][2]]))

    def test_verbatim_negation_is_not_involutive(self) -> None:
        report = check_negation_laws(gen_gn(2, amend_neg=False))
        self.assertFalse(report.passed)

        violation = report.violations[0]
        self.assertEqual("NEG-INVOLUTIVE", violation.condition)
        self.assertEqual((1,), violation.witness)

    def test_missing_table(self) -> None:
        chain = tests.common.load_fixture_algebra("chain3_heyting")
        error = missing_requirements(chain, Profile.GIRARD)
        assert error is not None
        self.assertEqual("MISSING-CONSTANT", error.code)

        error = missing_requirements(chain.evolve(drop=["join"]), Profile.CRL)
        assert error is not None
        self.assertEqual("MISSING-TABLE", error.code)

    def test_unassigned_cell(self) -> None:
        view = TableView(2, meet=[[0, -1], [0, 1]])
        self.assertEqual(0, view.meet(0, 0))
        with self.assertRaises(Unassigned):
            view.meet(0, 1)


class TestLemmaSuites(unittest.TestCase):
    def test_residuation_lemma_on_the_corpus(self) -> None:
        for algebra in tests.common.corpus(Profile.V_L7, 3):
            report = check_residuation_lemma(algebra)
            self.assertTrue(report.passed, f"{algebra.name}: {report}")

    def test_girale_lemma_on_the_corpus(self) -> None:
        girales = tests.common.corpus(Profile.BOUNDED_GIRALE)
        self.assertGreater(len(girales), 0)
        for algebra in list(girales) + tests.common.fixed_algebras():
            report = check_girale_lemma(algebra)
            self.assertTrue(report.passed, f"{algebra.name}: {report}")

    def test_negation_laws_on_the_corpus(self) -> None:
        for algebra in tests.common.corpus(Profile.BOUNDED_GIRARD):
            report = check_negation_laws(algebra)
            self.assertTrue(report.passed, f"{algebra.name}: {report}")

    def test_crl_laws_on_the_corpus(self) -> None:
        for algebra in tests.common.corpus(Profile.CRL):
            report = check_crl_laws(algebra)
            self.assertTrue(report.passed, f"{algebra.name}: {report}")


if __name__ == "__main__":
    unittest.main()
