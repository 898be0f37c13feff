"""Construct algebras from other algebras: G_n, Heyt(A), modalities and completions."""

import itertools
from typing import (
    Callable,
    Collection,
    Dict,
    Final,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
)

import icontract
from icontract import require, ensure

from giralebench.algebra import (
    FiniteAlgebra,
    Table,
    Unary,
    canonical_key,
    down_set,
    neg_from_zero,
    reduct,
    residual_from_mult,
)
from giralebench.common import Error
from giralebench.congruence import all_filters, generate_filter
from giralebench.profiles import (
    CheckReport,
    Profile,
    Violation,
    check_profile,
    missing_requirements,
    passes_profile,
)

#: Largest algebra whose frame of hereditary sets is built
FRAME_SIZE_LIMIT: Final = 4

#: Largest algebra whose closed sets are built
PHASE_SIZE_LIMIT: Final = 8

#: Largest number of atoms of G_n for the repair search
REPAIR_SIZE_LIMIT: Final = 4


def _tabulate(size: int, operation: Callable[[int, int], int]) -> Table:
    return tuple(tuple(operation(a, b) for b in range(size)) for a in range(size))


# region G_n


def _height_three_labels(n: int) -> List[str]:
    return ["bot", "one", "zero"] + [f"a{i}" for i in range(3, n + 1)] + ["top"]


@require(lambda n: n >= 1)
def gen_gn(n: int, amend_neg: bool = True) -> FiniteAlgebra:
    """
    Construct the girale G_n on the height three lattice with ``n`` atoms.

    The elements are ordered ``bot, one, zero, a3, …, an, top``. The atoms other
    than 1 and 0 square to ⊥, ⊥ absorbs, 1 is the unit and every other product
    is ⊤. The modality maps 1 and ⊤ to 1, everything else to ⊥.

    Unless ``amend_neg`` is unset, the negation swaps 1 and 0 so that it is
    involutive; otherwise ¬1 = ⊥ and ¬0 = 1 are taken literally. G_1 is the
    two-element Boolean algebra with 0 = ⊥ and 1 = ⊤.
    """
    if n == 1:
        chain = ((0, 0), (0, 1))
        return FiniteAlgebra(
            name="G1",
            size=2,
            element_names=["bot", "top"],
            meet=chain,
            join=((0, 1), (1, 1)),
            mult=chain,
            imp=((1, 1), (0, 1)),
            neg=(1, 0),
            bang=(0, 1),
            one=1,
            zero=0,
            top=1,
            bot=0,
        )

    size = n + 2
    bot, one, zero, top = 0, 1, 2, size - 1

    def meet(a: int, b: int) -> int:
        if a == b or b == top:
            return a
        if a == top:
            return b
        return bot

    def join(a: int, b: int) -> int:
        if a == b or b == bot:
            return a
        if a == bot:
            return b
        return top

    def mult(a: int, b: int) -> int:
        if a == bot or b == bot:
            return bot
        if a == one:
            return b
        if b == one:
            return a
        if a == b and a not in (zero, top):
            return bot
        return top

    neg = [0] * size
    for a in range(size):
        if a == bot:
            neg[a] = top
        elif a == top:
            neg[a] = bot
        elif a == one:
            neg[a] = zero if amend_neg else bot
        elif a == zero:
            neg[a] = one
        else:
            neg[a] = a

    mult_table = _tabulate(size, mult)

    return FiniteAlgebra(
        name=f"G{n}" if amend_neg else f"G{n}-verbatim",
        size=size,
        element_names=_height_three_labels(n),
        meet=_tabulate(size, meet),
        join=_tabulate(size, join),
        mult=mult_table,
        imp=_tabulate(size, lambda a, b: neg[mult_table[a][neg[b]]]),
        neg=tuple(neg),
        bang=tuple(one if a in (one, top) else bot for a in range(size)),
        one=one,
        zero=zero,
        top=top,
        bot=bot,
    )


class FrozenCells:
    """
    Specify which cells of G_n the repair search may change.

    The multiplication cells are unordered pairs; the products stay commutative.
    """

    def __init__(
        self,
        free_mult: Collection[Tuple[int, int]] = (),
        free_neg: Collection[int] = (),
    ) -> None:
        """Initialize with the given values."""
        self.free_mult = tuple(sorted({(min(a, b), max(a, b)) for a, b in free_mult}))
        self.free_neg = tuple(sorted(set(free_neg)))


@require(lambda n: n >= 1)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def repair_search(
    n: int, cells: FrozenCells, size_limit: int = REPAIR_SIZE_LIMIT
) -> Tuple[Optional[List[FiniteAlgebra]], Optional[Error]]:
    """
    Try all values of the free cells of the amended G_n.

    Only completions passing the bounded girale profile are kept, one per
    isomorphism class, sorted by their canonical keys. The residual is derived
    from the multiplication.
    """
    if n > size_limit:
        return None, Error(
            "SIZE-LIMIT",
            f"The repair search supports at most {size_limit} atoms, got {n}",
        )

    base = gen_gn(n)
    size = base.size
    assert base.mult is not None and base.neg is not None

    for a, b in cells.free_mult:
        if not (0 <= a < size and 0 <= b < size):
            return None, Error(
                "INPUT-ERROR", f"The cell ({a}, {b}) lies outside of G{n}"
            )
    for a in cells.free_neg:
        if not 0 <= a < size:
            return None, Error("INPUT-ERROR", f"The cell {a} lies outside of G{n}")

    found = dict()  # type: Dict[bytes, FiniteAlgebra]
    free_count = len(cells.free_mult) + len(cells.free_neg)
    for values in itertools.product(range(size), repeat=free_count):
        mult = [list(row) for row in base.mult]
        for (a, b), value in zip(cells.free_mult, values):
            mult[a][b] = value
            mult[b][a] = value

        neg = list(base.neg)
        for a, value in zip(cells.free_neg, values[len(cells.free_mult) :]):
            neg[a] = value

        candidate = base.evolve(
            mult=tuple(tuple(row) for row in mult), neg=tuple(neg), drop=["imp"]
        )
        imp, error = residual_from_mult(candidate)
        if error is not None:
            continue
        candidate = candidate.evolve(imp=imp)

        if not passes_profile(candidate, Profile.BOUNDED_GIRALE):
            continue

        key = canonical_key(candidate)
        if key not in found:
            found[key] = candidate

    return [
        found[key].evolve(name=f"G{n}-repair-{i}")
        for i, key in enumerate(sorted(found))
    ], None


# endregion

# region Heyt(A)


def bang_image(algebra: FiniteAlgebra) -> List[int]:
    """List the elements of the form ``!a`` in ascending order."""
    assert algebra.bang is not None
    return sorted(set(algebra.bang))


@require(
    lambda algebra: all(
        table is not None
        for table in (algebra.meet, algebra.join, algebra.imp, algebra.bang)
    )
    and algebra.one is not None
)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def heyt(algebra: FiniteAlgebra) -> Tuple[Optional[FiniteAlgebra], Optional[Error]]:
    """
    Construct the Heyting algebra on the image of the modality.

    The meet is ``!(u ∧ v)``, the join is inherited, the implication is
    ``!(u → v)`` and the multiplication equals the meet. The constant 1 is the
    top and the least element is the bottom.
    """
    assert algebra.meet is not None and algebra.join is not None
    assert algebra.imp is not None and algebra.bang is not None
    assert algebra.one is not None

    carrier = bang_image(algebra)
    position = {a: i for i, a in enumerate(carrier)}
    bang = algebra.bang

    def inside(value: int, what: str) -> Optional[Error]:
        if value not in position:
            return Error(
                "NOT-CLOSED",
                f"{what} yields {algebra.label(value)} outside of the image of !",
                witness=(value,),
            )
        return None

    tables = dict()  # type: Dict[str, Table]
    operations = {
        "meet": lambda u, v: bang[algebra.meet[u][v]],  # type: ignore
        "join": lambda u, v: algebra.join[u][v],  # type: ignore
        "imp": lambda u, v: bang[algebra.imp[u][v]],  # type: ignore
    }
    for name, operation in operations.items():
        rows = []  # type: List[Tuple[int, ...]]
        for u in carrier:
            row = []  # type: List[int]
            for v in carrier:
                value = operation(u, v)
                error = inside(value, name)
                if error is not None:
                    return None, error
                row.append(position[value])
            rows.append(tuple(row))
        tables[name] = tuple(rows)

    error = inside(algebra.one, "1")
    if error is not None:
        return None, error

    meet_table = tables["meet"]
    size = len(carrier)
    bot = None  # type: Optional[int]
    for u in range(size):
        if all(meet_table[u][v] == u for v in range(size)):
            bot = u
            break
    assert bot is not None, "A finite meet-semilattice has a least element"

    return (
        FiniteAlgebra(
            name=f"Heyt({algebra.name})",
            size=size,
            element_names=[algebra.label(a) for a in carrier],
            meet=meet_table,
            join=tables["join"],
            mult=meet_table,
            imp=tables["imp"],
            one=position[algebra.one],
            top=position[algebra.one],
            bot=bot,
        ),
        None,
    )


def _heyting_negation(algebra: FiniteAlgebra) -> Unary:
    assert algebra.imp is not None and algebra.bot is not None
    return tuple(algebra.imp[a][algebra.bot] for a in range(algebra.size))


def boolean_girale_check(algebra: FiniteAlgebra) -> bool:
    """Check that ``¬¬x = x`` holds in Heyt(A) with ``¬x = x → ⊥``."""
    heyting, error = heyt(algebra)
    if error is not None:
        return False
    assert heyting is not None

    neg = _heyting_negation(heyting)
    return all(neg[neg[a]] == a for a in range(heyting.size))


@require(
    lambda algebra: algebra.bang is not None
    and algebra.meet is not None
    and algebra.imp is not None
    and algebra.one is not None
)
def heyt_con_iso(algebra: FiniteAlgebra) -> CheckReport:
    """
    Check that the filters of A and of Heyt(A) correspond one-to-one.

    The maps are ``F ↦ F ∩ !A`` and ``G ↦ Fil_A(G)``; the witnesses are the
    members of the offending filter in A's indices.
    """
    heyting, error = heyt(algebra)
    if error is not None:
        return CheckReport([Violation(error.code, error.witness, error.message)])
    assert heyting is not None

    carrier = bang_image(algebra)
    filters, error = all_filters(algebra)
    if error is not None:
        return CheckReport([Violation(error.code, (), error.message)])
    heyting_filters, error = all_filters(heyting)
    if error is not None:
        return CheckReport([Violation(error.code, (), error.message)])
    assert filters is not None and heyting_filters is not None

    heyting_members = {f.members for f in heyting_filters.elements}

    def restrict(members: FrozenSet[int]) -> FrozenSet[int]:
        return frozenset(i for i, a in enumerate(carrier) if a in members)

    def extend(members: FrozenSet[int]) -> FrozenSet[int]:
        return generate_filter(algebra, [carrier[i] for i in members]).members

    violations = []  # type: List[Violation]
    for filter_ in filters.elements:
        restricted = restrict(filter_.members)
        if restricted not in heyting_members:
            violations.append(
                Violation(
                    "RESTRICTION-NOT-FILTER",
                    filter_.sorted_members(),
                    "F ∩ !A is not a filter of Heyt(A)",
                )
            )
        elif extend(restricted) != filter_.members:
            violations.append(
                Violation(
                    "RESTRICTION-ROUND-TRIP",
                    filter_.sorted_members(),
                    "Fil(F ∩ !A) differs from F",
                )
            )

    for heyting_filter in heyting_filters.elements:
        extended = extend(heyting_filter.members)
        if restrict(extended) != heyting_filter.members:
            violations.append(
                Violation(
                    "EXTENSION-ROUND-TRIP",
                    tuple(sorted(extended)),
                    "Fil(G) ∩ !A differs from G",
                )
            )

    for first, second in itertools.product(filters.elements, repeat=2):
        if (first.members <= second.members) != (
            restrict(first.members) <= restrict(second.members)
        ):
            violations.append(
                Violation(
                    "ORDER-MISMATCH",
                    first.sorted_members(),
                    "The restriction does not preserve the inclusion",
                )
            )
            break

    return CheckReport(violations)


# endregion

# region Modalities


def _invalid(message: str, witness: Tuple[int, ...] = ()) -> Error:
    return Error("INVALID-H", message, witness=witness)


@require(
    lambda algebra: algebra.meet is not None
    and algebra.mult is not None
    and algebra.one is not None
)
def validate_heyting_subset(
    algebra: FiniteAlgebra, subset: Collection[int]
) -> Optional[Error]:
    """
    Report the first condition of a relatively complete Heyting subset violated.

    The subset must contain 1, lie below 1, consist of idempotents, be closed
    under multiplication and have a greatest member below every element.
    """
    assert algebra.mult is not None and algebra.one is not None
    members = sorted(set(subset))

    if algebra.one not in members:
        return _invalid("The subset must contain 1")

    for h in members:
        if not algebra.leq(h, algebra.one):
            return _invalid(
                f"The member {algebra.label(h)} does not lie below 1", (h,)
            )
        if algebra.mult[h][h] != h:
            return _invalid(f"The member {algebra.label(h)} is not idempotent", (h,))

    for h, k in itertools.product(members, repeat=2):
        if algebra.mult[h][k] not in members:
            return _invalid(
                f"The product of {algebra.label(h)} and {algebra.label(k)} "
                f"is not in the subset",
                (h, k),
            )

    for a in range(algebra.size):
        below = [h for h in members if algebra.leq(h, a)]
        if not below:
            return Error(
                "NO-SUP",
                f"No member of the subset lies below {algebra.label(a)}",
                witness=(a,),
            )
        if not any(all(algebra.leq(h, g) for h in below) for g in below):
            return _invalid(
                f"The members below {algebra.label(a)} have no greatest one", (a,)
            )

    return None


class InducedModality:
    """Represent the modality ``!a = max{h ∈ H : h ≤ a}`` of a Heyting subset."""

    def __init__(
        self, base: FiniteAlgebra, subset: FrozenSet[int], bang: Unary
    ) -> None:
        """Initialize with the given values."""
        self.base = base
        self.subset = subset
        self.bang = bang

    def algebra(self) -> FiniteAlgebra:
        """Equip the base algebra with the modality."""
        return self.base.evolve(bang=self.bang)


@require(
    lambda algebra: algebra.meet is not None
    and algebra.mult is not None
    and algebra.one is not None
)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def derive_modality(
    algebra: FiniteAlgebra, subset: Collection[int]
) -> Tuple[Optional[InducedModality], Optional[Error]]:
    """Validate the Heyting subset and compute its modality."""
    error = validate_heyting_subset(algebra, subset)
    if error is not None:
        return None, error

    members = sorted(set(subset))
    bang = []  # type: List[int]
    for a in range(algebra.size):
        below = [h for h in members if algebra.leq(h, a)]
        greatest = [g for g in below if all(algebra.leq(h, g) for h in below)]
        bang.append(greatest[0])

    return InducedModality(algebra, frozenset(members), tuple(bang)), None


def _is_girard(algebra: FiniteAlgebra) -> bool:
    return missing_requirements(algebra, Profile.GIRARD) is None and passes_profile(
        algebra, Profile.GIRARD
    )


@require(
    lambda algebra: algebra.meet is not None
    and algebra.mult is not None
    and algebra.one is not None
)
@ensure(
    lambda algebra, result: result[0] is None
    or algebra.size > PHASE_SIZE_LIMIT
    or not _is_girard(algebra)
    or passes_profile(result[0], Profile.GIRALE),
    "A Girard algebra equipped with the modality is a girale",
    enabled=icontract.SLOW,
)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def induce_modality(
    algebra: FiniteAlgebra, subset: Collection[int]
) -> Tuple[Optional[FiniteAlgebra], Optional[Error]]:
    """Equip the algebra with the modality of the Heyting subset."""
    modality, error = derive_modality(algebra, subset)
    if error is not None:
        return None, error
    assert modality is not None
    return modality.algebra(), None


def idempotents_below_one(algebra: FiniteAlgebra) -> List[int]:
    """List the elements ``h ≤ 1`` with ``h · h = h``."""
    assert algebra.mult is not None and algebra.one is not None
    return [
        h
        for h in range(algebra.size)
        if algebra.leq(h, algebra.one) and algebra.mult[h][h] == h
    ]


@require(
    lambda algebra: algebra.meet is not None
    and algebra.mult is not None
    and algebra.one is not None
)
def rc_heyting_subsets(algebra: FiniteAlgebra) -> List[FrozenSet[int]]:
    """Enumerate all the relatively complete Heyting subsets, smallest first."""
    assert algebra.one is not None
    candidates = [h for h in idempotents_below_one(algebra) if h != algebra.one]

    result = []  # type: List[FrozenSet[int]]
    for count in range(len(candidates) + 1):
        for chosen in itertools.combinations(candidates, count):
            subset = frozenset(chosen) | {algebra.one}
            if validate_heyting_subset(algebra, subset) is None:
                result.append(subset)

    return sorted(result, key=lambda subset: (len(subset), sorted(subset)))


# endregion

# region Completions


class ClosedFamily:
    """
    Represent a family of subsets closed under the completion's closure.

    For the frame of hereditary sets, ``points`` lists the semilattice filters
    and the members are sets of point indices. For the phase completion there
    are no points and the members are sets of elements.
    """

    def __init__(
        self,
        base: FiniteAlgebra,
        members: Sequence[FrozenSet[int]],
        points: Optional[Sequence[FrozenSet[int]]] = None,
    ) -> None:
        """Initialize with the given values."""
        self.base = base
        self.members = tuple(members)
        self.points = tuple(points) if points is not None else None
        self.index = {
            member: i for i, member in enumerate(self.members)
        }  # type: Mapping[FrozenSet[int], int]

    def __len__(self) -> int:
        return len(self.members)


class Completion:
    """Bundle a completion with the embedding of its base algebra."""

    def __init__(
        self,
        family: ClosedFamily,
        algebra: FiniteAlgebra,
        embedding: Sequence[int],
    ) -> None:
        """Initialize with the given values."""
        self.family = family
        self.algebra = algebra

        #: Index in ``algebra`` of the image of every base element
        self.embedding = tuple(embedding)


def _size_error(algebra: FiniteAlgebra, size_limit: int) -> Optional[Error]:
    if algebra.size > size_limit:
        return Error(
            "SIZE-LIMIT",
            f"The algebra {algebra.name} has {algebra.size} elements, "
            f"but the completion supports at most {size_limit}",
        )
    return None


def _subsets(size: int) -> Iterable[FrozenSet[int]]:
    for mask in range(1 << size):
        yield frozenset(i for i in range(size) if mask & (1 << i))


def _mask(members: Iterable[int]) -> int:
    return sum(1 << i for i in members)


def _homomorphism_violations(
    source: FiniteAlgebra,
    target: FiniteAlgebra,
    embedding: Sequence[int],
    tables: Sequence[str],
    constants: Sequence[str] = (),
) -> List[Violation]:
    """Check that ``embedding`` is injective and preserves the named parts."""
    violations = []  # type: List[Violation]

    for a, b in itertools.combinations(range(source.size), 2):
        if embedding[a] == embedding[b]:
            violations.append(
                Violation("EMBEDDING-INJECTIVE", (a, b), "Distinct images expected")
            )
            break

    for name in tables:
        if name in ("neg", "bang"):
            source_unary = source.unary(name)
            target_unary = target.unary(name)
            assert source_unary is not None and target_unary is not None
            for a in range(source.size):
                if embedding[source_unary[a]] != target_unary[embedding[a]]:
                    violations.append(
                        Violation(
                            f"EMBEDDING-{name.upper()}",
                            (a,),
                            f"The embedding does not preserve {name}",
                        )
                    )
                    break
            continue

        source_table = source.binary(name)
        target_table = target.binary(name)
        assert source_table is not None and target_table is not None
        for a, b in itertools.product(range(source.size), repeat=2):
            if embedding[source_table[a][b]] != target_table[embedding[a]][embedding[b]]:
                violations.append(
                    Violation(
                        f"EMBEDDING-{name.upper()}",
                        (a, b),
                        f"The embedding does not preserve {name}",
                    )
                )
                break

    for name in constants:
        source_value = source.constant(name)
        target_value = target.constant(name)
        assert source_value is not None and target_value is not None
        if embedding[source_value] != target_value:
            violations.append(
                Violation(
                    f"EMBEDDING-{name.upper()}",
                    (source_value,),
                    f"The embedding does not preserve {name}",
                )
            )

    return violations


def semilattice_filters(algebra: FiniteAlgebra) -> List[FrozenSet[int]]:
    """List the nonempty up-closed meet-closed subsets by size, then members."""
    assert algebra.meet is not None
    meet = algebra.meet
    result = []  # type: List[FrozenSet[int]]
    for subset in _subsets(algebra.size):
        if not subset:
            continue
        if any(
            algebra.leq(a, b) and b not in subset
            for a in subset
            for b in range(algebra.size)
        ):
            continue
        if any(meet[a][b] not in subset for a in subset for b in subset):
            continue
        result.append(subset)
    return sorted(result, key=lambda subset: (len(subset), sorted(subset)))


def _frame_label(members: FrozenSet[int]) -> str:
    return "[" + ",".join(f"F{i}" for i in sorted(members)) + "]"


@require(
    lambda algebra: algebra.meet is not None
    and algebra.imp is not None
    and algebra.one is not None
)
@require(
    lambda algebra: algebra.size > FRAME_SIZE_LIMIT
    or passes_profile(reduct(algebra, ["meet", "imp", "one"]), Profile.V_L7),
    enabled=icontract.SLOW,
)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def frame_completion(
    algebra: FiniteAlgebra, size_limit: int = FRAME_SIZE_LIMIT
) -> Tuple[Optional[Completion], Optional[Error]]:
    """
    Embed the {→, ∧, 1}-reduct into the residuated lattice of hereditary sets.

    The points are the semilattice filters; the hereditary sets are the
    families closed upwards under inclusion, ordered by their bitmasks. The
    embedding maps ``a`` to the family of filters containing ``a``.
    """
    error = _size_error(algebra, size_limit)
    if error is not None:
        return None, error

    assert algebra.imp is not None and algebra.one is not None
    base = reduct(algebra, ["meet", "imp", "one"])
    imp = algebra.imp
    points = semilattice_filters(base)
    count = len(points)

    def related(f: int, g: int, h: int) -> bool:
        return all(
            b in points[h]
            for a in points[f]
            for b in range(algebra.size)
            if imp[a][b] in points[g]
        )

    relation = {
        (f, g, h)
        for f, g, h in itertools.product(range(count), repeat=3)
        if related(f, g, h)
    }  # type: Set[Tuple[int, int, int]]

    hereditary = [
        subset
        for subset in _subsets(count)
        if all(
            g in subset
            for f in subset
            for g in range(count)
            if points[f] <= points[g]
        )
    ]
    hereditary.sort(key=_mask)
    index = {member: i for i, member in enumerate(hereditary)}

    def compose(x: FrozenSet[int], y: FrozenSet[int]) -> FrozenSet[int]:
        return frozenset(
            h
            for h in range(count)
            if any((f, g, h) in relation for f in y for g in x)
        )

    def residual(x: FrozenSet[int], y: FrozenSet[int]) -> FrozenSet[int]:
        return frozenset(
            h
            for h in range(count)
            if all(
                g in y
                for f in x
                for g in range(count)
                if (f, h, g) in relation
            )
        )

    size = len(hereditary)
    tables = dict()  # type: Dict[str, Table]
    for name, operation in (
        ("meet", lambda x, y: x & y),
        ("join", lambda x, y: x | y),
        ("mult", compose),
        ("imp", residual),
    ):
        rows = []  # type: List[Tuple[int, ...]]
        for x in hereditary:
            row = []  # type: List[int]
            for y in hereditary:
                value = operation(x, y)  # type: ignore
                if value not in index:
                    return None, Error(
                        "PROFILE-FAIL",
                        f"The {name} of two hereditary sets is not hereditary",
                        witness=(index[x], index[y]),
                    )
                row.append(index[value])
            rows.append(tuple(row))
        tables[name] = tuple(rows)

    def principal(a: int) -> FrozenSet[int]:
        return frozenset(f for f in range(count) if a in points[f])

    one = index[principal(algebra.one)]
    frame = FiniteAlgebra(
        name=f"D({algebra.name})",
        size=size,
        element_names=[_frame_label(member) for member in hereditary],
        meet=tables["meet"],
        join=tables["join"],
        mult=tables["mult"],
        imp=tables["imp"],
        one=one,
    )

    report = check_profile(frame, Profile.CRL)
    if not report.passed:
        violation = report.violations[0]
        return None, Error(
            "PROFILE-FAIL",
            f"The frame of hereditary sets violates {violation.condition}",
            witness=violation.witness,
        )

    embedding = [index[principal(a)] for a in range(algebra.size)]
    violations = _homomorphism_violations(
        base, frame, embedding, tables=["meet", "imp"], constants=["one"]
    )
    if violations:
        return None, Error(
            "PROFILE-FAIL",
            f"The embedding into the frame violates {violations[0].condition}",
            witness=violations[0].witness,
        )

    return (
        Completion(ClosedFamily(algebra, hereditary, points), frame, embedding),
        None,
    )


def polar(algebra: FiniteAlgebra, neg: Sequence[int], subset: Iterable[int]) -> FrozenSet[int]:
    """Compute ``N(S) = {b : a ≤ ¬b for all a ∈ S}``."""
    members = list(subset)
    return frozenset(
        b
        for b in range(algebra.size)
        if all(algebra.leq(a, neg[b]) for a in members)
    )


@require(
    lambda algebra: all(
        table is not None
        for table in (algebra.meet, algebra.join, algebra.mult, algebra.imp)
    )
    and algebra.one is not None
    and algebra.zero is not None
)
@require(
    lambda algebra: algebra.size > PHASE_SIZE_LIMIT
    or passes_profile(algebra, Profile.GIRARD),
    enabled=icontract.SLOW,
)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def phase_completion(
    algebra: FiniteAlgebra, size_limit: int = PHASE_SIZE_LIMIT
) -> Tuple[Optional[Completion], Optional[Error]]:
    """
    Embed a Girard algebra into the Girard algebra of its closed sets.

    A set is closed if it is a fixpoint of the double polar. The product of two
    closed sets is the closure of the pointwise products, the negation is the
    polar and ``X → Y = ¬(X · ¬Y)``. Every closed set is the down-set of an
    element, whose label it carries; the embedding maps ``a`` to ``(a]``.
    """
    error = _size_error(algebra, size_limit)
    if error is not None:
        return None, error

    assert algebra.mult is not None and algebra.one is not None
    neg = algebra.neg if algebra.neg is not None else neg_from_zero(algebra)

    def n(subset: Iterable[int]) -> FrozenSet[int]:
        return polar(algebra, neg, subset)

    closed = {n(subset) for subset in _subsets(algebra.size)}

    generators = dict()  # type: Dict[FrozenSet[int], int]
    for member in closed:
        for c in range(algebra.size):
            if down_set(algebra, c) == member:
                generators[member] = c
                break
        else:
            return None, Error(
                "PROFILE-FAIL",
                "A closed set is not the down-set of an element",
                witness=tuple(sorted(member)),
            )

    ordered = sorted(closed, key=lambda member: generators[member])
    index = {member: i for i, member in enumerate(ordered)}
    mult = algebra.mult

    def product(x: FrozenSet[int], y: FrozenSet[int]) -> FrozenSet[int]:
        return n(n(mult[a][b] for a in x for b in y))

    def implication(x: FrozenSet[int], y: FrozenSet[int]) -> FrozenSet[int]:
        return n(product(x, n(y)))

    tables = dict()  # type: Dict[str, Table]
    for name, operation in (
        ("meet", lambda x, y: x & y),
        ("join", lambda x, y: n(n(x | y))),
        ("mult", product),
        ("imp", implication),
    ):
        tables[name] = tuple(
            tuple(index[operation(x, y)] for y in ordered)  # type: ignore
            for x in ordered
        )

    one_set = n(n([algebra.one]))
    phase = FiniteAlgebra(
        name=f"C({algebra.name})",
        size=len(ordered),
        element_names=[
            f"({algebra.label(generators[member])}]" for member in ordered
        ],
        meet=tables["meet"],
        join=tables["join"],
        mult=tables["mult"],
        imp=tables["imp"],
        neg=tuple(index[n(member)] for member in ordered),
        one=index[one_set],
        zero=index[n(one_set)],
        top=index[frozenset(range(algebra.size))],
        bot=index[n(range(algebra.size))],
    )

    report = check_profile(phase, Profile.BOUNDED_GIRARD)
    if not report.passed:
        violation = report.violations[0]
        return None, Error(
            "PROFILE-FAIL",
            f"The closed sets violate {violation.condition}",
            witness=violation.witness,
        )

    embedding = [index[n(n([a]))] for a in range(algebra.size)]
    source = algebra.evolve(neg=tuple(neg))
    violations = _homomorphism_violations(
        source,
        phase,
        embedding,
        tables=["meet", "join", "mult", "imp", "neg"],
        constants=["one", "zero"],
    )
    if violations:
        return None, Error(
            "PROFILE-FAIL",
            f"The embedding into the closed sets violates {violations[0].condition}",
            witness=violations[0].witness,
        )

    return Completion(ClosedFamily(algebra, ordered), phase, embedding), None


@require(
    lambda algebra: all(
        table is not None
        for table in (algebra.meet, algebra.join, algebra.mult, algebra.imp)
    )
    and algebra.one is not None
    and algebra.zero is not None
)
def conservativity_check(
    algebra: FiniteAlgebra, size_limit: int = PHASE_SIZE_LIMIT
) -> CheckReport:
    """
    Check that the algebra embeds into a girale over its closed sets.

    The modality of the girale comes from the idempotents below 1. The
    embedding must preserve the lattice, the monoid, the residual, the negation
    and the constants 1 and 0.
    """
    completion, error = phase_completion(algebra, size_limit)
    if error is not None:
        return CheckReport([Violation(error.code, error.witness, error.message)])
    assert completion is not None

    closed = completion.algebra
    girale, error = induce_modality(closed, idempotents_below_one(closed))
    if error is not None:
        return CheckReport([Violation(error.code, error.witness, error.message)])
    assert girale is not None

    report = check_profile(girale, Profile.BOUNDED_GIRALE)
    if not report.passed:
        return report

    neg = algebra.neg if algebra.neg is not None else neg_from_zero(algebra)
    return CheckReport(
        _homomorphism_violations(
            algebra.evolve(neg=tuple(neg)),
            girale,
            completion.embedding,
            tables=["meet", "join", "mult", "imp", "neg"],
            constants=["one", "zero"],
        )
    )


# endregion
