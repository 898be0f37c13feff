# pylint: disable=missing-docstring

import itertools
import unittest
from typing import List

from giralebench.algebra import FiniteAlgebra, product, trivial_algebra, up_set
from giralebench.congruence import (
    Congruence,
    Filter,
    SubsetLattice,
    all_congruences,
    all_filters,
    check_con_fil_iso,
    edpc_check,
    filter_of,
    filter_violation,
    full_congruence,
    generate_filter,
    generate_filter_by_closure,
    identity_congruence,
    is_congruence,
    is_simple,
    is_subdirectly_irreducible,
    principal_congruence,
    principal_congruence_via_filter,
    principal_filter,
    theta_of,
)
from giralebench.profiles import Profile

import tests.common


def _girales() -> List[FiniteAlgebra]:
    girales = list(tests.common.corpus(Profile.BOUNDED_GIRALE))
    return girales + tests.common.fixed_algebras()


class TestFilters(unittest.TestCase):
    def test_filters_of_g2(self) -> None:
        g2 = tests.common.g2()
        filters, error = all_filters(g2)
        self.assertIsNone(error)
        assert filters is not None

        self.assertEqual(
            [(1, 3), (0, 1, 2, 3)],
            [filter_.sorted_members() for filter_ in filters.elements],
        )

    def test_filters_of_the_trivial_algebra(self) -> None:
        filters, _ = all_filters(trivial_algebra())
        assert filters is not None
        self.assertEqual(1, len(filters))

    def test_size_limit(self) -> None:
        filters, error = all_filters(tests.common.sugihara(), size_limit=4)
        self.assertIsNone(filters)
        assert error is not None
        self.assertEqual("SIZE-LIMIT", error.code)

    def test_principal_filter_of_the_top(self) -> None:
        g2 = tests.common.g2()
        self.assertEqual((1, 3), principal_filter(g2, 3).sorted_members())

    def test_violation_of_a_subset(self) -> None:
        g2 = tests.common.g2()
        self.assertIsNone(filter_violation(g2, [1, 3]))
        self.assertIsNotNone(filter_violation(g2, [3]))
        self.assertIsNotNone(filter_violation(g2, [1, 2, 3]))

    def test_generation_agrees_with_the_closure(self) -> None:
        for algebra in _girales():
            for a in range(algebra.size):
                self.assertEqual(
                    generate_filter_by_closure(algebra, [a]),
                    generate_filter(algebra, [a]),
                    f"{algebra.name} at {a}",
                )

    def test_principal_filters_are_up_sets(self) -> None:
        for algebra in _girales():
            assert algebra.bang is not None
            for a in range(algebra.size):
                self.assertEqual(
                    up_set(algebra, algebra.bang[a]),
                    generate_filter_by_closure(algebra, [a]).members,
                    f"{algebra.name} at {a}",
                )


class TestCongruences(unittest.TestCase):
    def test_identity_comes_first(self) -> None:
        congruences, _ = all_congruences(tests.common.g2())
        assert congruences is not None
        self.assertTrue(congruences.elements[0].is_identity())
        self.assertTrue(congruences.elements[-1].is_full())
        self.assertEqual(0, congruences.bottom())

    def test_principal_congruence_of_zero_and_bottom(self) -> None:
        g2 = tests.common.g2()
        self.assertTrue(principal_congruence(g2, 2, 0).is_full())
        self.assertTrue(principal_congruence(g2, 1, 1).is_identity())

    def test_theta_of_the_least_filter_is_the_identity(self) -> None:
        for algebra in _girales():
            assert algebra.one is not None
            theta = theta_of(principal_filter(algebra, algebra.one), algebra)
            self.assertTrue(theta.is_identity(), algebra.name)

    def test_block_of_one_in_the_full_congruence(self) -> None:
        g2 = tests.common.g2()
        self.assertEqual(
            frozenset(range(4)), filter_of(full_congruence(g2), g2).members
        )

    def test_round_trip_in_g2(self) -> None:
        g2 = tests.common.g2()
        filters, _ = all_filters(g2)
        assert filters is not None
        for filter_ in filters.elements:
            self.assertEqual(filter_, filter_of(theta_of(filter_, g2), g2))

    def test_not_a_congruence(self) -> None:
        g2 = tests.common.g2()
        # one and top in a block, but ¬one = zero and ¬top = bot apart
        self.assertFalse(is_congruence(g2, Congruence(g2, [0, 1, 2, 1])))
        self.assertTrue(is_congruence(g2, identity_congruence(g2)))

    def test_two_ways_to_the_principal_congruence(self) -> None:
        for algebra in _girales():
            for a, b in itertools.product(range(algebra.size), repeat=2):
                self.assertEqual(
                    principal_congruence(algebra, a, b),
                    principal_congruence_via_filter(algebra, a, b),
                    f"{algebra.name} at ({a}, {b})",
                )


class TestSubsetLattice(unittest.TestCase):
    def test_filters_of_the_square_of_g1_form_a_diamond(self) -> None:
        g1 = tests.common.g1()
        filters, _ = all_filters(product(g1, g1))
        assert filters is not None

        self.assertEqual(4, len(filters))
        self.assertEqual(0, filters.bottom())
        self.assertEqual(3, filters.top())
        self.assertEqual(0, filters.meet(1, 2))
        self.assertEqual(3, filters.join(1, 2))
        self.assertEqual(1, filters.meet(1, 3))
        self.assertTrue(filters.is_lattice())

    def test_meet_of_filters_is_the_intersection(self) -> None:
        for algebra in _girales():
            filters, _ = all_filters(algebra)
            assert filters is not None
            self.assertTrue(filters.is_lattice(), algebra.name)

            for i, j in itertools.combinations(range(len(filters)), 2):
                meet = filters.meet(i, j)
                assert meet is not None
                self.assertEqual(
                    filters.elements[i].members & filters.elements[j].members,
                    filters.elements[meet].members,
                )

    def test_congruences_form_a_lattice(self) -> None:
        for algebra in _girales():
            congruences, _ = all_congruences(algebra)
            assert congruences is not None
            self.assertTrue(congruences.is_lattice(), algebra.name)

    def test_two_incomparable_filters_are_not_a_lattice(self) -> None:
        g1 = tests.common.g1()
        square = product(g1, g1)
        antichain = SubsetLattice(
            [Filter(square, [1, 3]), Filter(square, [2, 3])],
            lambda first, second: first.members <= second.members,
        )
        self.assertIsNone(antichain.meet(0, 1))
        self.assertIsNone(antichain.join(0, 1))
        self.assertFalse(antichain.is_lattice())


class TestChecks(unittest.TestCase):
    def test_isomorphism_and_edpc_on_the_corpus(self) -> None:
        for algebra in _girales():
            report = check_con_fil_iso(algebra)
            self.assertTrue(report.passed, f"{algebra.name}: {report}")

            report = edpc_check(algebra)
            self.assertTrue(report.passed, f"{algebra.name}: {report}")

    def test_isomorphism_on_the_trivial_algebra(self) -> None:
        self.assertTrue(check_con_fil_iso(trivial_algebra()).passed)

    def test_g1_and_g2_are_simple(self) -> None:
        for algebra in (tests.common.g1(), tests.common.g2()):
            simple, error = is_simple(algebra)
            self.assertIsNone(error)
            self.assertTrue(simple, algebra.name)

            congruences, _ = all_congruences(algebra)
            filters, _ = all_filters(algebra)
            assert congruences is not None and filters is not None
            self.assertEqual(2, len(congruences))
            self.assertEqual(2, len(filters))

    def test_square_of_g1_is_not_simple(self) -> None:
        g1 = tests.common.g1()
        square = product(g1, g1)

        simple, _ = is_simple(square)
        self.assertFalse(simple)

        irreducible, _ = is_subdirectly_irreducible(square)
        self.assertFalse(irreducible)

    def test_sugihara_chain_is_subdirectly_irreducible(self) -> None:
        sugihara = tests.common.sugihara()
        simple, _ = is_simple(sugihara)
        self.assertFalse(simple)

        irreducible, _ = is_subdirectly_irreducible(sugihara)
        self.assertTrue(irreducible)


if __name__ == "__main__":
    unittest.main()
