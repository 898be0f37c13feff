# pylint: disable=missing-docstring

import unittest
from typing import List

import icontract
from hypothesis import given, settings, strategies as st

from giralebench.algebra import (
    bottom_of,
    canonical_form,
    canonical_key,
    down_set,
    is_isomorphic,
    order_from_meet,
    permute,
    product,
    reduct,
    residual_from_mult,
    semilattice_error,
    signature_mismatch,
    top_of,
    trivial_algebra,
    up_set,
    with_derived_tables,
)

import tests.common


class TestOrder(unittest.TestCase):
    def test_bounds_of_g2(self) -> None:
        g2 = tests.common.g2()
        self.assertEqual(0, bottom_of(g2))
        self.assertEqual(3, top_of(g2))

    def test_order_of_g2(self) -> None:
        g2 = tests.common.g2()
        order, error = order_from_meet(g2)
        self.assertIsNone(error)
        assert order is not None

        self.assertIn((1, 3), order)
        self.assertNotIn((1, 2), order)
        self.assertNotIn((2, 1), order)

    def test_up_and_down_sets(self) -> None:
        g2 = tests.common.g2()
        self.assertEqual(frozenset([1, 3]), up_set(g2, 1))
        self.assertEqual(frozenset([0, 2]), down_set(g2, 2))

    def test_meet_not_associative(self) -> None:
        # (0 ∧ 1) ∧ 1 is 1 while 0 ∧ (1 ∧ 1) is 2
        meet = ((0, 2, 0), (2, 1, 1), (0, 1, 2))
        error = semilattice_error(meet)
        assert error is not None
        self.assertEqual("NOT-A-SEMILATTICE", error.code)


class TestResidual(unittest.TestCase):
    def test_residual_reproduces_the_implication(self) -> None:
        for algebra in tests.common.fixed_algebras():
            imp, error = residual_from_mult(algebra.evolve(drop=["imp"]))
            self.assertIsNone(error)
            self.assertEqual(algebra.imp, imp, algebra.name)

    def test_no_residual_on_a_broken_diamond(self) -> None:
        algebra = tests.common.load_fixture_algebra("m2_no_residual")
        imp, error = residual_from_mult(algebra)
        self.assertIsNone(imp)
        assert error is not None
        self.assertEqual("NO-RESIDUAL", error.code)
        self.assertEqual((1, 0), error.witness)

    def test_derived_tables(self) -> None:
        g2 = tests.common.g2()
        derived = with_derived_tables(g2.evolve(drop=["join", "imp", "neg"]))
        self.assertEqual(g2.join, derived.join)
        self.assertEqual(g2.imp, derived.imp)
        self.assertEqual(g2.neg, derived.neg)

    def test_reduct_keeps_only_the_listed(self) -> None:
        g2 = tests.common.g2()
        self.assertEqual(
            ("meet", "imp", "one"), reduct(g2, ["meet", "imp", "one"]).signature()
        )


class TestIsomorphism(unittest.TestCase):
    def test_trivial(self) -> None:
        trivial = trivial_algebra()
        self.assertEqual((0,), is_isomorphic(trivial, trivial))

    def test_g2_has_only_the_identity_automorphism(self) -> None:
        g2 = tests.common.g2()
        sigma = (2, 0, 3, 1)
        self.assertEqual(sigma, is_isomorphic(g2, permute(g2, sigma)))

    def test_g1_and_g2_differ(self) -> None:
        self.assertIsNone(is_isomorphic(tests.common.g1(), tests.common.g2()))

    def test_signature_mismatch(self) -> None:
        g2 = tests.common.g2()
        girard = g2.evolve(drop=["bang"])

        self.assertIsNone(signature_mismatch(g2, permute(g2, (2, 0, 3, 1))))

        error = signature_mismatch(g2, girard)
        assert error is not None
        self.assertEqual("SIGNATURE-MISMATCH", error.code)
        self.assertIn("bang", error.message)

        with self.assertRaises(icontract.ViolationError):
            is_isomorphic(g2, girard)

    @given(st.permutations(list(range(5))))
    @settings(max_examples=30, deadline=None)
    def test_canonical_key_is_invariant(self, sigma: List[int]) -> None:
        sugihara = tests.common.sugihara()
        permuted = permute(sugihara, sigma)

        self.assertEqual(canonical_key(sugihara), canonical_key(permuted))
        self.assertIsNotNone(is_isomorphic(sugihara, permuted))
        self.assertEqual(
            canonical_form(sugihara).meet, canonical_form(permuted).meet
        )

    def test_canonical_keys_separate_g1_and_g2(self) -> None:
        self.assertNotEqual(
            canonical_key(tests.common.g1()), canonical_key(tests.common.g2())
        )


class TestProduct(unittest.TestCase):
    def test_square_of_g1(self) -> None:
        g1 = tests.common.g1()
        square = product(g1, g1)

        self.assertEqual(4, square.size)
        self.assertEqual(g1.signature(), square.signature())
        assert square.one is not None and square.zero is not None
        self.assertEqual("(top,top)", square.label(square.one))
        self.assertEqual("(bot,bot)", square.label(square.zero))


if __name__ == "__main__":
    unittest.main()
