"""Enumerate small models of a profile and search them for countermodels."""

import functools
import itertools
import time
from typing import (
    Callable,
    Dict,
    Final,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from icontract import require, ensure

from giralebench.algebra import (
    FiniteAlgebra,
    Table,
    Unary,
    bottom_of,
    canonical_form,
    canonical_key,
    join_from_order,
    meet_from_order,
    neg_from_zero,
    residual_from_mult,
    top_of,
)
from giralebench.common import Error
from giralebench.constructions import induce_modality, rc_heyting_subsets
from giralebench.profiles import (
    GS_CONDITIONS,
    JOIN_LAW,
    L7_CONDITIONS,
    LR_CONDITIONS,
    MONOID_CONDITIONS,
    Condition,
    Profile,
    TableView,
    passes_profile,
    refuted,
)
from giralebench.syntax import (
    Formula,
    Sentence,
    find_falsifying,
    missing_for_formula,
)

#: Largest carrier enumerated for the profiles over lattices
LATTICE_SIZE_LIMIT: Final = 6

#: Largest carrier enumerated for the profiles over meet-semilattices
SEMILATTICE_SIZE_LIMIT: Final = 5

_SEMILATTICE_PROFILES = (Profile.GS, Profile.V_L7)

_IMPLICATION_PROFILES = (Profile.GS, Profile.GL, Profile.V_L7, Profile.LR)

_MONOID_PROFILES = (
    Profile.CRL,
    Profile.GIRARD,
    Profile.BOUNDED_GIRARD,
    Profile.GIRALE,
    Profile.BOUNDED_GIRALE,
)

Cells = List[List[int]]


def size_limit_of(profile: Profile) -> int:
    """Return the largest carrier the search supports for ``profile``."""
    if profile in _SEMILATTICE_PROFILES:
        return SEMILATTICE_SIZE_LIMIT
    return LATTICE_SIZE_LIMIT


class SearchSpec:
    """Describe which models to enumerate and what to falsify in them."""

    @require(lambda min_size, max_size: 1 <= min_size <= max_size)
    @require(lambda limit: limit is None or limit >= 1)
    def __init__(
        self,
        profile: Profile,
        max_size: int,
        min_size: int = 1,
        goal: Optional[Sentence] = None,
        frozen: Optional[Mapping[str, Sequence[object]]] = None,
        limit: Optional[int] = None,
    ) -> None:
        """Initialize with the given values."""
        self.profile = profile
        self.max_size = max_size
        self.min_size = min_size

        #: Formula, equation or quasiequation a countermodel should falsify
        self.goal = goal

        #: Cells of the canonical form every model must agree with; a negative
        #: entry leaves the cell free
        self.frozen = frozen

        #: Stop after this many models
        self.limit = limit


class SearchResult:
    """Report the models found by a search."""

    def __init__(
        self,
        models: Sequence[FiniteAlgebra],
        exhausted: bool,
        counterexample: Optional[FiniteAlgebra] = None,
        assignment: Optional[Mapping[str, int]] = None,
        elapsed: float = 0.0,
    ) -> None:
        """Initialize with the given values."""
        self.models = tuple(models)

        #: True if every candidate was visited, so that the count is exact
        self.exhausted = exhausted

        self.counterexample = counterexample

        #: Falsifying assignment in the counterexample
        self.assignment = assignment

        #: Wall time in seconds
        self.elapsed = elapsed

    @property
    def count(self) -> int:
        """Return the number of models found."""
        return len(self.models)


# region Orders


def _is_partial_order(leq: Sequence[Sequence[bool]]) -> bool:
    size = len(leq)
    for a, b in itertools.product(range(size), repeat=2):
        if a != b and leq[a][b] and leq[b][a]:
            return False
    for a, b, c in itertools.product(range(size), repeat=3):
        if leq[a][b] and leq[b][c] and not leq[a][c]:
            return False
    return True


def _order_algebra(
    leq: Sequence[Sequence[bool]], with_join: bool
) -> Optional[FiniteAlgebra]:
    meet = meet_from_order(leq)
    if meet is None:
        return None

    join = None  # type: Optional[Table]
    if with_join:
        join = join_from_order(leq)
        if join is None:
            return None

    size = len(leq)
    return FiniteAlgebra(
        name="order",
        size=size,
        element_names=[str(a) for a in range(size)],
        meet=meet,
        join=join,
    )


def _deduplicate(algebras: Iterator[Optional[FiniteAlgebra]]) -> Tuple[FiniteAlgebra, ...]:
    found = dict()  # type: Dict[bytes, FiniteAlgebra]
    for algebra in algebras:
        if algebra is not None:
            found.setdefault(canonical_key(algebra), algebra)
    return tuple(found[key] for key in sorted(found))


@functools.lru_cache(maxsize=None)
def orders(size: int, with_join: bool) -> Tuple[FiniteAlgebra, ...]:
    """
    Enumerate the meet-semilattices (or lattices) of ``size`` up to isomorphism.

    Element 0 is the least element and ``a ≤ b`` implies ``a ≤ b`` as integers,
    so only pairs of inner elements are guessed. For lattices the last element
    is the greatest.
    """

    def candidates() -> Iterator[Optional[FiniteAlgebra]]:
        last = size - 1 if with_join else size
        free = [(a, b) for a in range(1, size) for b in range(a + 1, last)]
        for chosen in itertools.product((False, True), repeat=len(free)):
            leq = [[a == b or a == 0 for b in range(size)] for a in range(size)]
            if with_join:
                for a in range(size):
                    leq[a][size - 1] = True
            for (a, b), related in zip(free, chosen):
                leq[a][b] = related
            if _is_partial_order(leq):
                yield _order_algebra(leq, with_join)

    return _deduplicate(candidates())


@functools.lru_cache(maxsize=None)
def orders_naive(size: int, with_join: bool) -> Tuple[FiniteAlgebra, ...]:
    """Enumerate the same orders by trying every reflexive relation."""

    def candidates() -> Iterator[Optional[FiniteAlgebra]]:
        free = [(a, b) for a in range(size) for b in range(size) if a != b]
        for chosen in itertools.product((False, True), repeat=len(free)):
            leq = [[a == b for b in range(size)] for a in range(size)]
            for (a, b), related in zip(free, chosen):
                leq[a][b] = related
            if _is_partial_order(leq):
                yield _order_algebra(leq, with_join)

    return _deduplicate(candidates())


# endregion

# region Table completion

# fmt: off
MULT_MONOTONE: Final = Condition(
    "MULT-MONOTONE", "a ≤ b implies a · c ≤ b · c", 3,
    lambda v, a, b, c: not v.leq(a, b) or v.leq(v.mult(a, c), v.mult(b, c)))

MULT_DISTRIBUTES: Final = Condition(
    "MULT-DISTRIBUTES-OVER-JOIN", "a · (b ∨ c) = a · b ∨ a · c", 3,
    lambda v, a, b, c: v.mult(a, v.join(b, c)) == v.join(v.mult(a, b), v.mult(a, c)))
# fmt: on

#: Conditions pruning the multiplication; with ⊥ absorbing they make the
#: residual exist
MULT_PRUNING: Final = MONOID_CONDITIONS + (MULT_MONOTONE, MULT_DISTRIBUTES)


def _complete(
    table: Cells,
    cells: Sequence[Tuple[int, int]],
    conditions: Sequence[Condition],
    view: Callable[[Cells], TableView],
    symmetric: bool,
) -> Iterator[Table]:
    """Fill the ``cells`` depth-first, backtracking as soon as a condition fails."""
    size = len(table)

    def visit(index: int) -> Iterator[Table]:
        if index == len(cells):
            yield tuple(tuple(row) for row in table)
            return

        a, b = cells[index]
        for value in range(size):
            table[a][b] = value
            if symmetric:
                table[b][a] = value
            if not refuted(conditions, view(table)):
                yield from visit(index + 1)

        table[a][b] = -1
        if symmetric:
            table[b][a] = -1

    return visit(0)


def _multiplications(lattice: FiniteAlgebra, one: int) -> Iterator[Table]:
    """Complete the commutative multiplications with unit ``one`` on the lattice."""
    size = lattice.size
    if size > 1 and one == 0:
        return

    table = [[-1] * size for _ in range(size)]
    for a in range(size):
        for x, y in ((0, a), (a, 0)):
            table[x][y] = 0
        for x, y in ((one, a), (a, one)):
            table[x][y] = a

    cells = [
        (a, b)
        for a in range(size)
        for b in range(a, size)
        if table[a][b] < 0
    ]

    yield from _complete(
        table,
        cells,
        MULT_PRUNING,
        lambda cells_: TableView(
            size, meet=lattice.meet, join=lattice.join, mult=cells_, one=one
        ),
        symmetric=True,
    )


def _implication_conditions(profile: Profile) -> Tuple[Condition, ...]:
    if profile == Profile.GS:
        return GS_CONDITIONS
    if profile == Profile.GL:
        return GS_CONDITIONS + (JOIN_LAW,)
    if profile == Profile.V_L7:
        return GS_CONDITIONS + L7_CONDITIONS
    if profile == Profile.LR:
        return LR_CONDITIONS
    raise AssertionError(f"Unexpected profile: {profile}")


def _implications(
    order: FiniteAlgebra,
    profile: Profile,
    one: Optional[int],
    neg: Optional[Unary],
) -> Iterator[Table]:
    """Complete the implications on the order; the row of 1 follows from L1."""
    size = order.size
    table = [[-1] * size for _ in range(size)]
    if one is not None:
        table[one] = list(range(size))

    cells = [
        (a, b)
        for a in range(size)
        for b in range(size)
        if table[a][b] < 0
    ]

    yield from _complete(
        table,
        cells,
        _implication_conditions(profile),
        lambda cells_: TableView(
            size, meet=order.meet, join=order.join, imp=cells_, neg=neg, one=one
        ),
        symmetric=False,
    )


def involutions(lattice: FiniteAlgebra) -> List[Unary]:
    """List the order-reversing involutions of the lattice."""
    size = lattice.size
    result = []  # type: List[Unary]
    for permutation in itertools.permutations(range(size)):
        if any(permutation[permutation[a]] != a for a in range(size)):
            continue
        if all(
            lattice.leq(permutation[b], permutation[a])
            for a, b in itertools.product(range(size), repeat=2)
            if lattice.leq(a, b)
        ):
            result.append(tuple(permutation))
    return result


# endregion

# region Models


def _crl_models(
    lattice: FiniteAlgebra, naive: bool
) -> Iterator[FiniteAlgebra]:
    """Equip the lattice with every unit and residuated multiplication."""
    size = lattice.size
    for one in range(size):
        tables = (
            _all_commutative_tables(size) if naive else _multiplications(lattice, one)
        )
        for mult in tables:
            model = lattice.evolve(mult=mult, one=one)
            imp, error = residual_from_mult(model)
            if error is None:
                yield model.evolve(imp=imp)


def _modalities(girard: FiniteAlgebra, naive: bool) -> Iterator[FiniteAlgebra]:
    """Equip a Girard algebra with its modalities, or with every unary table."""
    if naive:
        for bang in itertools.product(range(girard.size), repeat=girard.size):
            yield girard.evolve(bang=tuple(bang))
        return

    base = Profile.BOUNDED_GIRARD if girard.top is not None else Profile.GIRARD
    if not passes_profile(girard, base):
        return

    for subset in rc_heyting_subsets(girard):
        girale, _ = induce_modality(girard, subset)
        if girale is not None:
            yield girale


def _extend(
    crl_models: Iterator[FiniteAlgebra], profile: Profile, naive: bool
) -> Iterator[FiniteAlgebra]:
    """Add the zero, the bounds and the modality ``profile`` asks for."""
    for model in crl_models:
        if profile == Profile.CRL:
            yield model
            continue

        for zero in range(model.size):
            girard = model.evolve(zero=zero)
            girard = girard.evolve(neg=neg_from_zero(girard))
            if profile in (Profile.BOUNDED_GIRARD, Profile.BOUNDED_GIRALE):
                girard = girard.evolve(top=top_of(model), bot=bottom_of(model))

            if profile in (Profile.GIRARD, Profile.BOUNDED_GIRARD):
                yield girard
            else:
                yield from _modalities(girard, naive)


def _heyting_model(lattice: FiniteAlgebra) -> Optional[FiniteAlgebra]:
    top = top_of(lattice)
    model = lattice.evolve(mult=lattice.meet, one=top, top=top, bot=bottom_of(lattice))
    imp, error = residual_from_mult(model)
    if error is not None:
        return None
    return model.evolve(imp=imp)


def _candidates(profile: Profile, size: int, naive: bool) -> Iterator[FiniteAlgebra]:
    """Generate models of ``profile``, possibly many per isomorphism class."""
    with_join = profile not in _SEMILATTICE_PROFILES
    bases = orders_naive(size, with_join) if naive else orders(size, with_join)

    for base in bases:
        if profile == Profile.POSET_LATTICE:
            yield base

        elif profile == Profile.HEYTING:
            model = _heyting_model(base)
            if model is not None:
                yield model

        elif profile in _MONOID_PROFILES:
            yield from _extend(_crl_models(base, naive), profile, naive)

        elif profile == Profile.LR:
            for neg in involutions(base):
                tables = (
                    _all_tables(size) if naive else _implications(base, profile, None, neg)
                )
                for imp in tables:
                    yield base.evolve(imp=imp, neg=neg)

        elif profile in _IMPLICATION_PROFILES:
            for one in range(size):
                tables = (
                    _all_tables(size, fixed_row=one)
                    if naive
                    else _implications(base, profile, one, None)
                )
                for imp in tables:
                    yield base.evolve(imp=imp, one=one)

        else:
            raise AssertionError(f"Unexpected profile: {profile}")


def _all_commutative_tables(size: int) -> Iterator[Table]:
    cells = [(a, b) for a in range(size) for b in range(a, size)]
    for values in itertools.product(range(size), repeat=len(cells)):
        table = [[0] * size for _ in range(size)]
        for (a, b), value in zip(cells, values):
            table[a][b] = value
            table[b][a] = value
        yield tuple(tuple(row) for row in table)


def _all_tables(size: int, fixed_row: Optional[int] = None) -> Iterator[Table]:
    """Try every table; the row ``fixed_row``, if given, is the identity."""
    rows = [a for a in range(size) if a != fixed_row]
    for values in itertools.product(range(size), repeat=len(rows) * size):
        table = [list(range(size)) for _ in range(size)]
        for i, a in enumerate(rows):
            table[a] = list(values[i * size : (i + 1) * size])
        yield tuple(tuple(row) for row in table)


def _agrees(model: FiniteAlgebra, frozen: Optional[Mapping[str, Sequence[object]]]) -> bool:
    if frozen is None:
        return True

    for name, cells in frozen.items():
        if name in ("neg", "bang"):
            unary = model.unary(name)
            if unary is None or len(cells) != model.size:
                return False
            if any(
                isinstance(value, int) and value >= 0 and value != unary[a]
                for a, value in enumerate(cells)
            ):
                return False
        else:
            table = model.binary(name)
            if table is None or len(cells) != model.size:
                return False
            for a, row in enumerate(cells):
                assert isinstance(row, Sequence)
                if any(
                    isinstance(value, int) and value >= 0 and value != table[a][b]
                    for b, value in enumerate(row)
                ):
                    return False
    return True


def _models_of_size(
    profile: Profile, size: int, naive: bool
) -> List[Tuple[bytes, FiniteAlgebra]]:
    found = dict()  # type: Dict[bytes, FiniteAlgebra]
    for candidate in _candidates(profile, size, naive):
        if not passes_profile(candidate, profile):
            continue
        key = canonical_key(candidate)
        if key not in found:
            found[key] = candidate
    return [(key, found[key]) for key in sorted(found)]


def _size_error(profile: Profile, size: int) -> Optional[Error]:
    limit = size_limit_of(profile)
    if size > limit:
        return Error(
            "SIZE-LIMIT",
            f"The profile {profile.value} is enumerated up to size {limit}, "
            f"got {size}",
        )
    return None


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def enumerate_models(
    spec: SearchSpec,
) -> Tuple[Optional[SearchResult], Optional[Error]]:
    """
    Enumerate the models of the profile modulo isomorphism.

    The models are the canonical forms, sorted by size and then by the canonical
    key, and named after the profile, the size and their position.
    """
    error = _size_error(spec.profile, spec.max_size)
    if error is not None:
        return None, error

    start = time.perf_counter()
    models = []  # type: List[FiniteAlgebra]
    exhausted = True
    for size in range(spec.min_size, spec.max_size + 1):
        for i, (_, model) in enumerate(
            _models_of_size(spec.profile, size, naive=False)
        ):
            form = canonical_form(model, name=f"{spec.profile.value}-{size}-{i}")
            if not _agrees(form, spec.frozen):
                continue
            if spec.limit is not None and len(models) == spec.limit:
                exhausted = False
                break
            models.append(form)
        if not exhausted:
            break

    return (
        SearchResult(
            models, exhausted=exhausted, elapsed=time.perf_counter() - start
        ),
        None,
    )


@require(lambda size: size >= 1)
def enumerate_models_naive(profile: Profile, size: int) -> List[FiniteAlgebra]:
    """
    Enumerate the models of one size by filtering every candidate table.

    The orders come from all reflexive relations and the tables are tried
    exhaustively, except that the row of 1 in an implication is fixed by L1 and
    multiplications are tried only among the commutative ones.
    """
    return [
        canonical_form(model, name=f"{profile.value}-{size}-{i}")
        for i, (_, model) in enumerate(_models_of_size(profile, size, naive=True))
    ]


@require(lambda spec: spec.goal is not None)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def find_countermodel(
    spec: SearchSpec,
) -> Tuple[Optional[SearchResult], Optional[Error]]:
    """Find the first enumerated model which falsifies the goal."""
    assert spec.goal is not None

    start = time.perf_counter()
    result, error = enumerate_models(spec)
    if error is not None:
        return None, error
    assert result is not None

    for model in result.models:
        error = missing_for_formula(
            spec.goal, model, designation=isinstance(spec.goal, Formula)
        )
        if error is not None:
            return None, error

        assignment = find_falsifying(spec.goal, model)
        if assignment is not None:
            return (
                SearchResult(
                    result.models,
                    exhausted=result.exhausted,
                    counterexample=model,
                    assignment=assignment,
                    elapsed=time.perf_counter() - start,
                ),
                None,
            )

    return (
        SearchResult(
            result.models,
            exhausted=result.exhausted,
            elapsed=time.perf_counter() - start,
        ),
        None,
    )


# endregion
