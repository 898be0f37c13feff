"""Compute filters and congruences of finite residuated algebras."""

import itertools
from typing import (
    Callable,
    Collection,
    Final,
    FrozenSet,
    Generic,
    Iterable,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
    TypeVar,
)

import icontract
from icontract import require, ensure

from giralebench.algebra import (
    BINARY_TABLES,
    UNARY_TABLES,
    FiniteAlgebra,
    up_set,
)
from giralebench.common import Error
from giralebench.profiles import CheckReport, Violation

#: Largest carrier for which the filters and congruences are enumerated
SIZE_LIMIT: Final = 10


class Filter:
    """Represent a filter as the set of its members."""

    algebra: Final[FiniteAlgebra]
    members: Final[FrozenSet[int]]

    def __init__(self, algebra: FiniteAlgebra, members: Iterable[int]) -> None:
        """Initialize with the given values."""
        self.algebra = algebra
        self.members = frozenset(members)

    def sorted_members(self) -> Tuple[int, ...]:
        """List the members in ascending order."""
        return tuple(sorted(self.members))

    def __contains__(self, element: int) -> bool:
        return element in self.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Filter):
            return NotImplemented
        return self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        labels = [self.algebra.label(a) for a in self.sorted_members()]
        return f"{self.__class__.__name__}({labels!r})"


class Congruence:
    """
    Represent a congruence as a partition of the carrier.

    Every element is mapped to the least element of its block.
    """

    algebra: Final[FiniteAlgebra]
    leaders: Final[Tuple[int, ...]]

    @require(lambda algebra, leaders: len(leaders) == algebra.size)
    @require(lambda leaders: all(leaders[leader] == leader for leader in leaders))
    @require(lambda leaders: all(leader <= a for a, leader in enumerate(leaders)))
    def __init__(self, algebra: FiniteAlgebra, leaders: Sequence[int]) -> None:
        """Initialize with the given values."""
        self.algebra = algebra
        self.leaders = tuple(leaders)

    def related(self, a: int, b: int) -> bool:
        """Check whether ``a`` and ``b`` lie in the same block."""
        return self.leaders[a] == self.leaders[b]

    def blocks(self) -> List[Tuple[int, ...]]:
        """List the blocks ordered by their least elements."""
        return [
            tuple(a for a in range(len(self.leaders)) if self.leaders[a] == leader)
            for leader in sorted(set(self.leaders))
        ]

    def pairs(self) -> FrozenSet[Tuple[int, int]]:
        """Collect all the related pairs."""
        size = len(self.leaders)
        return frozenset(
            (a, b)
            for a, b in itertools.product(range(size), repeat=2)
            if self.leaders[a] == self.leaders[b]
        )

    def refines(self, other: "Congruence") -> bool:
        """Check whether every block lies within a block of ``other``."""
        return all(
            other.leaders[a] == other.leaders[leader]
            for a, leader in enumerate(self.leaders)
        )

    def is_identity(self) -> bool:
        """Check whether every block is a singleton."""
        return all(leader == a for a, leader in enumerate(self.leaders))

    def is_full(self) -> bool:
        """Check whether there is a single block."""
        return all(leader == 0 for leader in self.leaders)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.leaders == other.leaders

    def __hash__(self) -> int:
        return hash(self.leaders)

    def __repr__(self) -> str:
        rendered = [
            [self.algebra.label(a) for a in block] for block in self.blocks()
        ]
        return f"{self.__class__.__name__}({rendered!r})"


T = TypeVar("T", Filter, Congruence)


class SubsetLattice(Generic[T]):
    """Represent a lattice of filters or congruences ordered by inclusion."""

    #: Members sorted from the least one
    elements: Final[Tuple[T, ...]]

    def __init__(self, elements: Sequence[T], leq: Callable[[T, T], bool]) -> None:
        """Initialize with the given values."""
        self.elements = tuple(elements)
        self._leq = leq

    def leq(self, i: int, j: int) -> bool:
        """Check whether the ``i``-th element is included in the ``j``-th."""
        return self._leq(self.elements[i], self.elements[j])

    def bottom(self) -> Optional[int]:
        """Find the index of the least element."""
        for i in range(len(self.elements)):
            if all(self.leq(i, j) for j in range(len(self.elements))):
                return i
        return None

    def top(self) -> Optional[int]:
        """Find the index of the greatest element."""
        for i in range(len(self.elements)):
            if all(self.leq(j, i) for j in range(len(self.elements))):
                return i
        return None

    def meet(self, i: int, j: int) -> Optional[int]:
        """Find the index of the greatest common lower bound, if any."""
        lower = [
            k
            for k in range(len(self.elements))
            if self.leq(k, i) and self.leq(k, j)
        ]
        for k in lower:
            if all(self.leq(m, k) for m in lower):
                return k
        return None

    def join(self, i: int, j: int) -> Optional[int]:
        """Find the index of the least common upper bound, if any."""
        upper = [
            k
            for k in range(len(self.elements))
            if self.leq(i, k) and self.leq(j, k)
        ]
        for k in upper:
            if all(self.leq(k, m) for m in upper):
                return k
        return None

    def is_lattice(self) -> bool:
        """Check that the bounds exist and every pair has a meet and a join."""
        if self.bottom() is None or self.top() is None:
            return False
        return all(
            self.meet(i, j) is not None and self.join(i, j) is not None
            for i, j in itertools.combinations(range(len(self.elements)), 2)
        )

    def __len__(self) -> int:
        return len(self.elements)


def _filter_order(first: Filter, second: Filter) -> bool:
    return first.members <= second.members


def _congruence_order(first: Congruence, second: Congruence) -> bool:
    return first.refines(second)


# region Filters


def filter_violation(algebra: FiniteAlgebra, members: Collection[int]) -> Optional[str]:
    """Name the first filter condition ``members`` fails, if any."""
    assert algebra.meet is not None and algebra.imp is not None
    assert algebra.one is not None
    subset = frozenset(members)

    if algebra.one not in subset:
        return "The filter must contain 1"

    for a in subset:
        for b in range(algebra.size):
            if algebra.leq(a, b) and b not in subset:
                return f"The filter must be up-closed, but misses {algebra.label(b)}"

    for a, b in itertools.product(sorted(subset), repeat=2):
        if algebra.meet[a][b] not in subset:
            return "The filter must be closed under meets"

    for a in sorted(subset):
        for b in range(algebra.size):
            if algebra.imp[a][b] in subset and b not in subset:
                return "The filter must be closed under modus ponens"

    if algebra.bang is not None:
        for a in subset:
            if algebra.bang[a] not in subset:
                return "The filter must be closed under !"

    return None


@require(lambda algebra: algebra.meet is not None and algebra.imp is not None)
@require(lambda algebra: algebra.one is not None)
@ensure(lambda algebra, result: filter_violation(algebra, result.members) is None)
def generate_filter_by_closure(algebra: FiniteAlgebra, generators: Iterable[int]) -> Filter:
    """Close the generators and 1 under the filter conditions up to a fixpoint."""
    assert algebra.meet is not None and algebra.imp is not None
    assert algebra.one is not None

    members = set(generators)  # type: Set[int]
    members.add(algebra.one)

    changed = True
    while changed:
        changed = False
        new = set()  # type: Set[int]
        for a in members:
            new.update(up_set(algebra, a))
            if algebra.bang is not None:
                new.add(algebra.bang[a])
        for a, b in itertools.product(sorted(members), repeat=2):
            new.add(algebra.meet[a][b])
        for a in members:
            for b in range(algebra.size):
                if algebra.imp[a][b] in members:
                    new.add(b)

        if not new <= members:
            members.update(new)
            changed = True

    return Filter(algebra, members)


@require(lambda algebra: algebra.meet is not None and algebra.imp is not None)
@require(lambda algebra: algebra.one is not None)
def generate_filter(algebra: FiniteAlgebra, generators: Iterable[int]) -> Filter:
    """
    Compute the least filter containing ``generators``.

    With a modality the filter is the up-set of ``!(b₁ ∧ … ∧ bₙ)`` over all the
    generators, or the up-set of 1 when there are none; this presumes a girale.
    Otherwise the filter is obtained by closure.
    """
    if algebra.bang is None:
        return generate_filter_by_closure(algebra, generators)

    assert algebra.meet is not None and algebra.one is not None

    listed = sorted(set(generators))
    if not listed:
        return Filter(algebra, up_set(algebra, algebra.one))

    least = listed[0]
    for b in listed[1:]:
        least = algebra.meet[least][b]
    return Filter(algebra, up_set(algebra, algebra.bang[least]))


@require(lambda algebra: algebra.meet is not None and algebra.imp is not None)
@require(lambda algebra: algebra.one is not None)
def principal_filter(algebra: FiniteAlgebra, a: int) -> Filter:
    """Compute the filter generated by ``a``; in a girale this is ``[!a)``."""
    if algebra.bang is not None:
        return Filter(algebra, up_set(algebra, algebra.bang[a]))
    return generate_filter_by_closure(algebra, [a])


def _size_error(algebra: FiniteAlgebra, size_limit: int) -> Optional[Error]:
    if algebra.size > size_limit:
        return Error(
            "SIZE-LIMIT",
            f"The algebra {algebra.name} has {algebra.size} elements, "
            f"but at most {size_limit} are supported",
        )
    return None


@require(lambda algebra: algebra.meet is not None and algebra.imp is not None)
@require(lambda algebra: algebra.one is not None)
@ensure(
    lambda result: result[0] is None or result[0].is_lattice(), enabled=icontract.SLOW
)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def all_filters(
    algebra: FiniteAlgebra, size_limit: int = SIZE_LIMIT
) -> Tuple[Optional[SubsetLattice[Filter]], Optional[Error]]:
    """
    Enumerate all the filters, from the least to the greatest.

    A filter of a finite algebra is generated by its least element, so the
    filters generated by single elements are all there are.
    """
    error = _size_error(algebra, size_limit)
    if error is not None:
        return None, error

    filters = {
        generate_filter_by_closure(algebra, [a]) for a in range(algebra.size)
    }
    ordered = sorted(filters, key=lambda f: (len(f.members), f.sorted_members()))
    return SubsetLattice(ordered, _filter_order), None


# endregion

# region Congruences


class _Partition:
    """Merge the blocks of a partition and keep the least elements as leaders."""

    def __init__(self, leaders: Sequence[int]) -> None:
        self.leaders = list(leaders)

    def find(self, a: int) -> int:
        while self.leaders[a] != a:
            a = self.leaders[a]
        return a

    def merge(self, a: int, b: int) -> bool:
        first = self.find(a)
        second = self.find(b)
        if first == second:
            return False
        low, high = min(first, second), max(first, second)
        self.leaders[high] = low
        return True

    def flattened(self) -> Tuple[int, ...]:
        return tuple(self.find(a) for a in range(len(self.leaders)))


def _close_compatible(algebra: FiniteAlgebra, partition: _Partition) -> None:
    """Merge blocks until every present operation respects the partition."""
    changed = True
    while changed:
        changed = False
        for name in BINARY_TABLES:
            table = algebra.binary(name)
            if table is None:
                continue
            for x, y in itertools.product(range(algebra.size), repeat=2):
                x_leader = partition.find(x)
                y_leader = partition.find(y)
                if partition.merge(table[x][y], table[x_leader][y_leader]):
                    changed = True

        for name in UNARY_TABLES:
            unary = algebra.unary(name)
            if unary is None:
                continue
            for x in range(algebra.size):
                if partition.merge(unary[x], unary[partition.find(x)]):
                    changed = True


def identity_congruence(algebra: FiniteAlgebra) -> Congruence:
    """Relate every element only to itself."""
    return Congruence(algebra, list(range(algebra.size)))


def full_congruence(algebra: FiniteAlgebra) -> Congruence:
    """Relate all elements."""
    return Congruence(algebra, [0] * algebra.size)


def congruence_generated_by(
    algebra: FiniteAlgebra, pairs: Iterable[Tuple[int, int]]
) -> Congruence:
    """Compute the least congruence relating all the given ``pairs``."""
    partition = _Partition(range(algebra.size))
    for a, b in pairs:
        partition.merge(a, b)
    _close_compatible(algebra, partition)
    return Congruence(algebra, partition.flattened())


def principal_congruence(algebra: FiniteAlgebra, a: int, b: int) -> Congruence:
    """Compute the least congruence relating ``a`` and ``b`` by closure."""
    return congruence_generated_by(algebra, [(a, b)])


def biimplication(algebra: FiniteAlgebra, a: int, b: int) -> int:
    """Compute ``a ↔ b = (a → b) ∧ (b → a)``."""
    assert algebra.meet is not None and algebra.imp is not None
    return algebra.meet[algebra.imp[a][b]][algebra.imp[b][a]]


@require(lambda algebra: algebra.meet is not None and algebra.imp is not None)
@require(lambda algebra: algebra.one is not None)
def theta_of(filter_: Filter, algebra: FiniteAlgebra) -> Congruence:
    """Relate ``a`` and ``b`` when both ``a → b`` and ``b → a`` lie in the filter."""
    assert algebra.imp is not None
    partition = _Partition(range(algebra.size))
    for a, b in itertools.combinations(range(algebra.size), 2):
        if algebra.imp[a][b] in filter_ and algebra.imp[b][a] in filter_:
            partition.merge(a, b)
    return Congruence(algebra, partition.flattened())


@require(lambda algebra: algebra.one is not None)
def filter_of(congruence: Congruence, algebra: FiniteAlgebra) -> Filter:
    """Collect the block of 1."""
    assert algebra.one is not None
    return Filter(
        algebra,
        (a for a in range(algebra.size) if congruence.related(a, algebra.one)),
    )


@require(lambda algebra: algebra.meet is not None and algebra.imp is not None)
@require(lambda algebra: algebra.one is not None)
def principal_congruence_via_filter(
    algebra: FiniteAlgebra, a: int, b: int
) -> Congruence:
    """Compute the least congruence relating ``a`` and ``b`` through ``Fil(a ↔ b)``."""
    return theta_of(
        generate_filter(algebra, [biimplication(algebra, a, b)]), algebra
    )


def is_congruence(algebra: FiniteAlgebra, congruence: Congruence) -> bool:
    """Check that every present operation respects the partition."""
    leaders = congruence.leaders
    for name in BINARY_TABLES:
        table = algebra.binary(name)
        if table is None:
            continue
        for x, y in itertools.product(range(algebra.size), repeat=2):
            if leaders[table[x][y]] != leaders[table[leaders[x]][leaders[y]]]:
                return False

    for name in UNARY_TABLES:
        unary = algebra.unary(name)
        if unary is None:
            continue
        for x in range(algebra.size):
            if leaders[unary[x]] != leaders[unary[leaders[x]]]:
                return False

    return True


def _join(first: Congruence, second: Congruence) -> Congruence:
    partition = _Partition(first.leaders)
    for a, leader in enumerate(second.leaders):
        partition.merge(a, leader)
    return Congruence(first.algebra, partition.flattened())


@ensure(
    lambda result: result[0] is None or result[0].is_lattice(), enabled=icontract.SLOW
)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def all_congruences(
    algebra: FiniteAlgebra, size_limit: int = SIZE_LIMIT
) -> Tuple[Optional[SubsetLattice[Congruence]], Optional[Error]]:
    """
    Enumerate all the congruences, from the identity to the full one.

    The principal congruences are closed under joins, which yields every
    congruence of a finite algebra.
    """
    error = _size_error(algebra, size_limit)
    if error is not None:
        return None, error

    found = {identity_congruence(algebra)}  # type: Set[Congruence]
    for a, b in itertools.combinations(range(algebra.size), 2):
        found.add(principal_congruence(algebra, a, b))

    frontier = list(found)
    while frontier:
        new = []  # type: List[Congruence]
        for first in frontier:
            for second in list(found):
                joined = _join(first, second)
                if joined not in found:
                    found.add(joined)
                    new.append(joined)
        frontier = new

    ordered = sorted(found, key=lambda c: (-len(set(c.leaders)), c.leaders))
    return SubsetLattice(ordered, _congruence_order), None


# endregion

# region Checks


@require(lambda algebra: algebra.meet is not None and algebra.imp is not None)
@require(lambda algebra: algebra.one is not None)
@require(lambda algebra, size_limit: algebra.size <= size_limit)
def check_con_fil_iso(algebra: FiniteAlgebra, size_limit: int = SIZE_LIMIT) -> CheckReport:
    """
    Check that filters and congruences correspond one-to-one.

    The maps are ``F ↦ θ_F`` and ``θ ↦ 1/θ``; they must be mutually inverse and
    preserve the inclusion. Witnesses are the members of the offending filter or
    the leaders of the offending congruence.
    """
    filters, _ = all_filters(algebra, size_limit)
    congruences, _ = all_congruences(algebra, size_limit)
    assert filters is not None and congruences is not None

    violations = []  # type: List[Violation]

    for filter_ in filters.elements:
        theta = theta_of(filter_, algebra)
        if not is_congruence(algebra, theta):
            violations.append(
                Violation(
                    "THETA-NOT-CONGRUENCE",
                    filter_.sorted_members(),
                    "The relation of the filter is not a congruence",
                )
            )
        elif filter_of(theta, algebra) != filter_:
            violations.append(
                Violation(
                    "FILTER-ROUND-TRIP",
                    filter_.sorted_members(),
                    "The block of 1 differs from the filter",
                )
            )

    for congruence in congruences.elements:
        filter_ = filter_of(congruence, algebra)
        if filter_violation(algebra, filter_.members) is not None:
            violations.append(
                Violation(
                    "BLOCK-NOT-FILTER",
                    congruence.leaders,
                    "The block of 1 is not a filter",
                )
            )
        elif theta_of(filter_, algebra) != congruence:
            violations.append(
                Violation(
                    "CONGRUENCE-ROUND-TRIP",
                    congruence.leaders,
                    "The congruence differs from the one of its block of 1",
                )
            )

    for first, second in itertools.product(filters.elements, repeat=2):
        included = first.members <= second.members
        refined = theta_of(first, algebra).refines(theta_of(second, algebra))
        if included != refined:
            violations.append(
                Violation(
                    "ORDER-MISMATCH",
                    first.sorted_members(),
                    f"The inclusion in {list(second.sorted_members())} "
                    f"is not mirrored by the congruences",
                )
            )
            break

    return CheckReport(violations)


@require(lambda algebra: algebra.meet is not None and algebra.imp is not None)
@require(lambda algebra: algebra.one is not None and algebra.bang is not None)
def edpc_check(algebra: FiniteAlgebra) -> CheckReport:
    """
    Check that ``(c, d) ∈ Cg(a, b)`` iff ``!(a ↔ b) ≤ c ↔ d`` for all elements.

    The principal congruences are computed by closure; the report also flags
    any pair for which the closure and the filter route disagree.
    """
    assert algebra.bang is not None
    violations = []  # type: List[Violation]

    for a, b in itertools.product(range(algebra.size), repeat=2):
        by_closure = principal_congruence(algebra, a, b)
        by_filter = principal_congruence_via_filter(algebra, a, b)
        if by_closure != by_filter:
            violations.append(
                Violation(
                    "PRINCIPAL-CONGRUENCE-MISMATCH",
                    (a, b),
                    "The closure and the filter yield different congruences",
                )
            )
            break

    bound = None  # type: Optional[Tuple[int, int, int, int]]
    for a, b in itertools.product(range(algebra.size), repeat=2):
        generated = principal_congruence(algebra, a, b)
        modal = algebra.bang[biimplication(algebra, a, b)]
        for c, d in itertools.product(range(algebra.size), repeat=2):
            expected = algebra.leq(modal, biimplication(algebra, c, d))
            if generated.related(c, d) != expected:
                bound = (a, b, c, d)
                break
        if bound is not None:
            break

    if bound is not None:
        violations.append(
            Violation("EDPC", bound, "(c, d) ∈ Cg(a, b) iff !(a ↔ b) ≤ c ↔ d")
        )

    return CheckReport(violations)


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def is_simple(
    algebra: FiniteAlgebra, size_limit: int = SIZE_LIMIT
) -> Tuple[Optional[bool], Optional[Error]]:
    """Check that the identity and the full congruence are the only ones and differ."""
    congruences, error = all_congruences(algebra, size_limit)
    if error is not None:
        return None, error
    assert congruences is not None
    return len(congruences) == 2, None


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def is_subdirectly_irreducible(
    algebra: FiniteAlgebra, size_limit: int = SIZE_LIMIT
) -> Tuple[Optional[bool], Optional[Error]]:
    """Check that the congruences above the identity have a least element."""
    congruences, error = all_congruences(algebra, size_limit)
    if error is not None:
        return None, error
    assert congruences is not None

    nontrivial = [c for c in congruences.elements if not c.is_identity()]
    if not nontrivial:
        return False, None

    monolith = [
        c for c in nontrivial if all(c.refines(other) for other in nontrivial)
    ]
    return len(monolith) == 1, None


# endregion
