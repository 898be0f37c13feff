# pylint: disable=missing-docstring

import collections
import unittest
from typing import List

from giralebench.algebra import FiniteAlgebra, canonical_key
from giralebench.profiles import Profile, passes_profile
from giralebench.search import (
    SearchResult,
    SearchSpec,
    enumerate_models,
    enumerate_models_naive,
    find_countermodel,
    involutions,
    orders,
    orders_naive,
    size_limit_of,
)
from giralebench.syntax import Sentence, find_falsifying, parse_sentence

import tests.common


def _enumerate(spec: SearchSpec) -> SearchResult:
    result, error = enumerate_models(spec)
    assert error is None, error
    assert result is not None
    return result


def _sentence(text: str) -> Sentence:
    sentence, error = parse_sentence(text)
    assert error is None, error
    assert sentence is not None
    return sentence


def _sizes(models: List[FiniteAlgebra], max_size: int) -> List[int]:
    counter = collections.Counter(model.size for model in models)
    return [counter[size] for size in range(1, max_size + 1)]


class TestOrders(unittest.TestCase):
    def test_number_of_lattices(self) -> None:
        self.assertEqual([1, 1, 1, 2, 5], [len(orders(n, True)) for n in range(1, 6)])

    def test_number_of_meet_semilattices(self) -> None:
        self.assertEqual(
            [1, 1, 2, 5], [len(orders(n, False)) for n in range(1, 5)]
        )

    def test_agrees_with_the_naive_enumeration(self) -> None:
        for size in range(1, 5):
            for with_join in (False, True):
                with self.subTest(size=size, with_join=with_join):
                    self.assertEqual(
                        [canonical_key(order) for order in orders(size, with_join)],
                        [
                            canonical_key(order)
                            for order in orders_naive(size, with_join)
                        ],
                    )

    def test_involutions_of_the_diamond(self) -> None:
        diamond = orders(4, True)
        # one chain and one diamond; only the diamond has two atoms
        found = [len(involutions(lattice)) for lattice in diamond]
        self.assertEqual([1, 2], sorted(found))


class TestEnumerate(unittest.TestCase):
    def test_size_limits(self) -> None:
        self.assertEqual(5, size_limit_of(Profile.GS))
        self.assertEqual(5, size_limit_of(Profile.V_L7))
        self.assertEqual(6, size_limit_of(Profile.CRL))

        result, error = enumerate_models(SearchSpec(Profile.GS, max_size=6))
        self.assertIsNone(result)
        assert error is not None
        self.assertEqual("SIZE-LIMIT", error.code)

    def test_trivial_crl(self) -> None:
        result = _enumerate(SearchSpec(Profile.CRL, max_size=1))
        self.assertEqual(1, result.count)
        self.assertTrue(result.exhausted)
        self.assertEqual("crl-1-0", result.models[0].name)

    def test_heyting_algebras_are_the_distributive_lattices(self) -> None:
        result = _enumerate(SearchSpec(Profile.HEYTING, max_size=5))
        self.assertEqual([1, 1, 1, 2, 3], _sizes(list(result.models), 5))

    def test_models_pass_their_profile(self) -> None:
        for profile in Profile:
            with self.subTest(profile=profile):
                for model in tests.common.corpus(profile, 3):
                    self.assertTrue(passes_profile(model, profile), model.name)

    def test_models_are_pairwise_non_isomorphic(self) -> None:
        models = tests.common.corpus(Profile.BOUNDED_GIRALE)
        keys = [canonical_key(model) for model in models]
        self.assertEqual(len(keys), len(set(keys)))

    def test_agrees_with_the_naive_enumeration(self) -> None:
        for profile in Profile:
            for size in range(1, 4):
                with self.subTest(profile=profile, size=size):
                    fast = _enumerate(
                        SearchSpec(profile, max_size=size, min_size=size)
                    )
                    naive = enumerate_models_naive(profile, size)

                    self.assertEqual(
                        [canonical_key(model) for model in naive],
                        [canonical_key(model) for model in fast.models],
                    )
                    self.assertEqual(
                        [model.name for model in naive],
                        [model.name for model in fast.models],
                    )

    def test_limit(self) -> None:
        everything = tests.common.corpus(Profile.CRL, 3)
        self.assertGreater(len(everything), 2)

        limited = _enumerate(SearchSpec(Profile.CRL, max_size=3, limit=2))
        self.assertEqual(2, limited.count)
        self.assertFalse(limited.exhausted)
        self.assertEqual(everything[:2], limited.models)

        exact = _enumerate(
            SearchSpec(Profile.CRL, max_size=3, limit=len(everything))
        )
        self.assertTrue(exact.exhausted)

    def test_frozen_multiplication(self) -> None:
        chains = [model for model in tests.common.corpus(Profile.CRL, 3) if model.size == 3]
        target = chains[-1]
        assert target.mult is not None

        result = _enumerate(
            SearchSpec(Profile.CRL, max_size=3, frozen={"mult": target.mult})
        )
        self.assertIn(target, result.models)
        for model in result.models:
            self.assertEqual(target.mult, model.mult)

    def test_free_cells(self) -> None:
        free = [[-1] * 3 for _ in range(3)]
        result = _enumerate(
            SearchSpec(Profile.CRL, max_size=3, frozen={"mult": free})
        )
        self.assertEqual(
            [model for model in tests.common.corpus(Profile.CRL, 3) if model.size == 3],
            list(result.models),
        )


class TestCountermodel(unittest.TestCase):
    def assert_first_countermodel(self, spec: SearchSpec) -> None:
        result, error = find_countermodel(spec)
        self.assertIsNone(error)
        assert result is not None and spec.goal is not None

        falsified = [
            model
            for model in result.models
            if find_falsifying(spec.goal, model) is not None
        ]
        if not falsified:
            self.assertIsNone(result.counterexample)
            return

        self.assertEqual(falsified[0], result.counterexample)
        self.assertEqual(
            find_falsifying(spec.goal, falsified[0]), result.assignment
        )

    def test_idempotence_fails_in_a_crl(self) -> None:
        spec = SearchSpec(Profile.CRL, max_size=3, goal=_sentence("p * p = p"))
        result, _ = find_countermodel(spec)
        assert result is not None
        counterexample = result.counterexample
        assert counterexample is not None and result.assignment is not None

        # the only two-element CRL is Boolean
        self.assertEqual(3, counterexample.size)
        self.assert_first_countermodel(spec)

    def test_unit_law_holds(self) -> None:
        result, _ = find_countermodel(
            SearchSpec(Profile.CRL, max_size=3, goal=_sentence("p * 1 = p"))
        )
        assert result is not None
        self.assertIsNone(result.counterexample)
        self.assertIsNone(result.assignment)
        self.assertTrue(result.exhausted)

    def test_first_countermodels_are_replayed(self) -> None:
        goals = [
            (Profile.GS, "p -> q -> p"),
            (Profile.GS, "p /\\ q = p => (q -> r) /\\ (p -> r) = q -> r"),
            (Profile.GL, "(p -> q) \\/ (q -> p)"),
            (Profile.BOUNDED_GIRALE, "!p * !p = !p"),
            (Profile.BOUNDED_GIRALE, "p -> p * p"),
        ]
        for profile, text in goals:
            with self.subTest(profile=profile, goal=text):
                self.assert_first_countermodel(
                    SearchSpec(profile, max_size=3, goal=_sentence(text))
                )

    def test_contraction_fails_in_a_girale(self) -> None:
        result, _ = find_countermodel(
            SearchSpec(
                Profile.BOUNDED_GIRALE, max_size=3, goal=_sentence("p -> p * p")
            )
        )
        assert result is not None
        self.assertIsNotNone(result.counterexample)

    def test_missing_table(self) -> None:
        result, error = find_countermodel(
            SearchSpec(Profile.CRL, max_size=2, goal=_sentence("!p = p"))
        )
        self.assertIsNone(result)
        assert error is not None
        self.assertEqual("MISSING-TABLE", error.code)


if __name__ == "__main__":
    unittest.main()
