"""Provide the fixtures shared among the tests."""

import functools
import os
import pathlib
from typing import List, Tuple

from giralebench import algebra_text
from giralebench.algebra import (
    FiniteAlgebra,
    join_from_order,
    meet_from_order,
    residual_from_mult,
)
from giralebench.constructions import gen_gn
from giralebench.profiles import Profile
from giralebench.search import SearchSpec, enumerate_models

TEST_DATA_DIR = pathlib.Path(os.path.realpath(__file__)).parent / "test_data"

#: Largest carrier of the enumerated corpus
CORPUS_MAX_SIZE = 4


def load_fixture_algebra(name: str) -> FiniteAlgebra:
    """Load the algebra ``name`` from the test data."""
    algebra, error = algebra_text.load_algebra(
        TEST_DATA_DIR / "algebras" / f"{name}.alg"
    )
    assert error is None, f"{name}: {error}"
    assert algebra is not None
    return algebra


def g1() -> FiniteAlgebra:
    """Return the two-element Boolean girale."""
    return gen_gn(1)


def g2() -> FiniteAlgebra:
    """Return G_2 with the amended negation."""
    return gen_gn(2)


def sugihara() -> FiniteAlgebra:
    """
    Build the five-element odd Sugihara chain ``-2 < -1 < 0 < 1 < 2`` as a girale.

    The product of two elements is the one with the greater absolute value, and
    their meet on a tie. Both 1 and 0 are the middle element, and the modality
    maps ``x`` to ``min(x, 0)``, so that its image is a non-Boolean chain.
    """
    values = [-2, -1, 0, 1, 2]
    size = len(values)
    leq = [[a <= b for b in range(size)] for a in range(size)]
    meet = meet_from_order(leq)
    join = join_from_order(leq)
    assert meet is not None and join is not None

    def product(a: int, b: int) -> int:
        x, y = values[a], values[b]
        if abs(x) == abs(y):
            return values.index(min(x, y))
        return values.index(x if abs(x) > abs(y) else y)

    mult = tuple(tuple(product(a, b) for b in range(size)) for a in range(size))
    middle = values.index(0)

    algebra = FiniteAlgebra(
        name="sugihara5",
        size=size,
        element_names=[str(value) for value in values],
        meet=meet,
        join=join,
        mult=mult,
        neg=tuple(values.index(-value) for value in values),
        bang=tuple(values.index(min(value, 0)) for value in values),
        one=middle,
        zero=middle,
        top=size - 1,
        bot=0,
    )
    imp, error = residual_from_mult(algebra)
    assert error is None and imp is not None
    return algebra.evolve(imp=imp)


def fixed_algebras() -> List[FiniteAlgebra]:
    """List the hand-made bounded girales."""
    return [g1(), g2(), sugihara()]


@functools.lru_cache(maxsize=None)
def corpus(
    profile: Profile, max_size: int = CORPUS_MAX_SIZE
) -> Tuple[FiniteAlgebra, ...]:
    """Enumerate the models of ``profile`` up to ``max_size`` once per test run."""
    result, error = enumerate_models(SearchSpec(profile, max_size=max_size))
    assert error is None, error
    assert result is not None
    assert result.exhausted
    return result.models
