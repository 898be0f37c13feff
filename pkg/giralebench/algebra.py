"""Represent finite algebras as explicit operation tables."""

import itertools
from typing import (
    Collection,
    Dict,
    Final,
    FrozenSet,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

import icontract
from icontract import require, ensure

from giralebench.common import Error

Table = Tuple[Tuple[int, ...], ...]
Unary = Tuple[int, ...]

#: Binary tables in the order in which they are encoded and printed
BINARY_TABLES: Final = ("meet", "join", "mult", "imp")

#: Unary tables in the order in which they are encoded and printed
UNARY_TABLES: Final = ("neg", "bang")

#: Constants in the order in which they are encoded and printed
CONSTANTS: Final = ("one", "zero", "top", "bot")


def _binary_ok(table: Optional[Table], size: int) -> bool:
    return table is None or (
        len(table) == size
        and all(len(row) == size for row in table)
        and all(0 <= value < size for row in table for value in row)
    )


def _unary_ok(table: Optional[Unary], size: int) -> bool:
    return table is None or (
        len(table) == size and all(0 <= value < size for value in table)
    )


def _constant_ok(value: Optional[int], size: int) -> bool:
    return value is None or 0 <= value < size


class FiniteAlgebra:
    """
    Represent an algebra over the carrier ``{0, …, size - 1}``.

    The operations are given as tables of element indices. Every table and every
    constant is optional; which of them are required depends on what is checked.
    The instances are immutable.
    """

    name: Final[str]
    size: Final[int]
    element_names: Final[Tuple[str, ...]]

    meet: Final[Optional[Table]]
    join: Final[Optional[Table]]
    mult: Final[Optional[Table]]

    #: Residual of ``mult``, given or derived
    imp: Final[Optional[Table]]

    neg: Final[Optional[Unary]]
    bang: Final[Optional[Unary]]

    one: Final[Optional[int]]
    zero: Final[Optional[int]]
    top: Final[Optional[int]]
    bot: Final[Optional[int]]

    @require(lambda size: size >= 1)
    @require(lambda size, element_names: len(element_names) == size)
    @require(lambda element_names: len(set(element_names)) == len(element_names))
    @require(
        lambda size, meet, join, mult, imp: all(
            _binary_ok(table, size) for table in (meet, join, mult, imp)
        ),
        enabled=icontract.SLOW,
    )
    @require(
        lambda size, neg, bang: _unary_ok(neg, size) and _unary_ok(bang, size),
        enabled=icontract.SLOW,
    )
    @require(
        lambda size, one, zero, top, bot: all(
            _constant_ok(value, size) for value in (one, zero, top, bot)
        )
    )
    def __init__(
        self,
        name: str,
        size: int,
        element_names: Sequence[str],
        meet: Optional[Table] = None,
        join: Optional[Table] = None,
        mult: Optional[Table] = None,
        imp: Optional[Table] = None,
        neg: Optional[Unary] = None,
        bang: Optional[Unary] = None,
        one: Optional[int] = None,
        zero: Optional[int] = None,
        top: Optional[int] = None,
        bot: Optional[int] = None,
    ) -> None:
        """Initialize with the given values."""
        self.name = name
        self.size = size
        self.element_names = tuple(element_names)
        self.meet = meet
        self.join = join
        self.mult = mult
        self.imp = imp
        self.neg = neg
        self.bang = bang
        self.one = one
        self.zero = zero
        self.top = top
        self.bot = bot

    def leq(self, a: int, b: int) -> bool:
        """Compare ``a`` and ``b`` in the order induced by the meet table."""
        assert self.meet is not None
        return self.meet[a][b] == a

    def label(self, a: int) -> str:
        """Return the name of the element ``a``."""
        return self.element_names[a]

    def index_of(self, label: str) -> Optional[int]:
        """Find the element named ``label``, if any."""
        try:
            return self.element_names.index(label)
        except ValueError:
            return None

    def binary(self, name: str) -> Optional[Table]:
        """Retrieve the binary table by its ``name``."""
        if name == "meet":
            return self.meet
        if name == "join":
            return self.join
        if name == "mult":
            return self.mult
        if name == "imp":
            return self.imp

        raise KeyError(name)

    def unary(self, name: str) -> Optional[Unary]:
        """Retrieve the unary table by its ``name``."""
        if name == "neg":
            return self.neg
        if name == "bang":
            return self.bang

        raise KeyError(name)

    def constant(self, name: str) -> Optional[int]:
        """Retrieve the constant by its ``name``."""
        if name == "one":
            return self.one
        if name == "zero":
            return self.zero
        if name == "top":
            return self.top
        if name == "bot":
            return self.bot

        raise KeyError(name)

    def signature(self) -> Tuple[str, ...]:
        """List the names of the present tables and constants."""
        names = []  # type: List[str]
        for name in BINARY_TABLES:
            if self.binary(name) is not None:
                names.append(name)
        for name in UNARY_TABLES:
            if self.unary(name) is not None:
                names.append(name)
        for name in CONSTANTS:
            if self.constant(name) is not None:
                names.append(name)
        return tuple(names)

    # fmt: off
    @require(
        lambda self, drop:
        all(name in BINARY_TABLES + UNARY_TABLES + CONSTANTS for name in drop)
    )
    # fmt: on
    def evolve(
        self,
        name: Optional[str] = None,
        element_names: Optional[Sequence[str]] = None,
        meet: Optional[Table] = None,
        join: Optional[Table] = None,
        mult: Optional[Table] = None,
        imp: Optional[Table] = None,
        neg: Optional[Unary] = None,
        bang: Optional[Unary] = None,
        one: Optional[int] = None,
        zero: Optional[int] = None,
        top: Optional[int] = None,
        bot: Optional[int] = None,
        drop: Collection[str] = (),
    ) -> "FiniteAlgebra":
        """
        Copy the algebra replacing the given parts.

        Arguments left at ``None`` are kept, the names listed in ``drop`` are
        removed.
        """

        def pick(new: Optional[object], old: Optional[object], key: str) -> object:
            if key in drop:
                return None
            return new if new is not None else old

        return FiniteAlgebra(
            name=name if name is not None else self.name,
            size=self.size,
            element_names=(
                element_names if element_names is not None else self.element_names
            ),
            meet=pick(meet, self.meet, "meet"),  # type: ignore
            join=pick(join, self.join, "join"),  # type: ignore
            mult=pick(mult, self.mult, "mult"),  # type: ignore
            imp=pick(imp, self.imp, "imp"),  # type: ignore
            neg=pick(neg, self.neg, "neg"),  # type: ignore
            bang=pick(bang, self.bang, "bang"),  # type: ignore
            one=pick(one, self.one, "one"),  # type: ignore
            zero=pick(zero, self.zero, "zero"),  # type: ignore
            top=pick(top, self.top, "top"),  # type: ignore
            bot=pick(bot, self.bot, "bot"),  # type: ignore
        )

    def _key(self) -> Tuple[object, ...]:
        return (
            self.name,
            self.size,
            self.element_names,
            self.meet,
            self.join,
            self.mult,
            self.imp,
            self.neg,
            self.bang,
            self.one,
            self.zero,
            self.top,
            self.bot,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self.name!r}, size={self.size}, "
            f"signature={self.signature()!r})"
        )


def trivial_algebra(name: str = "trivial") -> FiniteAlgebra:
    """Construct the one-element algebra with every table and constant."""
    return FiniteAlgebra(
        name=name,
        size=1,
        element_names=["e"],
        meet=((0,),),
        join=((0,),),
        mult=((0,),),
        imp=((0,),),
        neg=(0,),
        bang=(0,),
        one=0,
        zero=0,
        top=0,
        bot=0,
    )


def semilattice_error(meet: Table) -> Optional[Error]:
    """Check that ``meet`` is idempotent, commutative and associative."""
    size = len(meet)
    for a in range(size):
        if meet[a][a] != a:
            return Error(
                "NOT-A-SEMILATTICE", f"meet is not idempotent at {a}", witness=(a,)
            )

    for a, b in itertools.product(range(size), repeat=2):
        if meet[a][b] != meet[b][a]:
            return Error(
                "NOT-A-SEMILATTICE",
                f"meet is not commutative at ({a}, {b})",
                witness=(a, b),
            )

    for a, b, c in itertools.product(range(size), repeat=3):
        if meet[meet[a][b]][c] != meet[a][meet[b][c]]:
            return Error(
                "NOT-A-SEMILATTICE",
                f"meet is not associative at ({a}, {b}, {c})",
                witness=(a, b, c),
            )

    return None


@require(lambda algebra: algebra.meet is not None)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def order_from_meet(
    algebra: FiniteAlgebra,
) -> Tuple[Optional[FrozenSet[Tuple[int, int]]], Optional[Error]]:
    """Derive the partial order ``{(a, b) : a ∧ b = a}`` from the meet table."""
    assert algebra.meet is not None
    error = semilattice_error(algebra.meet)
    if error is not None:
        return None, error

    return (
        frozenset(
            (a, b)
            for a, b in itertools.product(range(algebra.size), repeat=2)
            if algebra.meet[a][b] == a
        ),
        None,
    )


def meet_from_order(leq: Sequence[Sequence[bool]]) -> Optional[Table]:
    """Compute the table of greatest lower bounds, or None if one is missing."""
    size = len(leq)
    rows = []  # type: List[Tuple[int, ...]]
    for a in range(size):
        row = []  # type: List[int]
        for b in range(size):
            lower = [c for c in range(size) if leq[c][a] and leq[c][b]]
            greatest = [c for c in lower if all(leq[d][c] for d in lower)]
            if len(greatest) != 1:
                return None
            row.append(greatest[0])
        rows.append(tuple(row))
    return tuple(rows)


def join_from_order(leq: Sequence[Sequence[bool]]) -> Optional[Table]:
    """Compute the table of least upper bounds, or None if one is missing."""
    size = len(leq)
    dual = [[leq[b][a] for b in range(size)] for a in range(size)]
    return meet_from_order(dual)


def order_matrix(algebra: FiniteAlgebra) -> List[List[bool]]:
    """Tabulate the order induced by the meet table."""
    return [
        [algebra.leq(a, b) for b in range(algebra.size)] for a in range(algebra.size)
    ]


@require(lambda algebra: algebra.meet is not None)
def bottom_of(algebra: FiniteAlgebra) -> Optional[int]:
    """Find the least element, if any."""
    for a in range(algebra.size):
        if all(algebra.leq(a, b) for b in range(algebra.size)):
            return a
    return None


@require(lambda algebra: algebra.meet is not None)
def top_of(algebra: FiniteAlgebra) -> Optional[int]:
    """Find the greatest element, if any."""
    for a in range(algebra.size):
        if all(algebra.leq(b, a) for b in range(algebra.size)):
            return a
    return None


@require(lambda algebra: algebra.meet is not None)
def up_set(algebra: FiniteAlgebra, a: int) -> FrozenSet[int]:
    """Collect ``{b : a ≤ b}``."""
    return frozenset(b for b in range(algebra.size) if algebra.leq(a, b))


@require(lambda algebra: algebra.meet is not None)
def down_set(algebra: FiniteAlgebra, a: int) -> FrozenSet[int]:
    """Collect ``{b : b ≤ a}``."""
    return frozenset(b for b in range(algebra.size) if algebra.leq(b, a))


@require(lambda algebra: algebra.meet is not None and algebra.mult is not None)
@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def residual_from_mult(
    algebra: FiniteAlgebra,
) -> Tuple[Optional[Table], Optional[Error]]:
    """
    Derive ``a → b`` as the greatest ``c`` with ``a · c ≤ b``.

    The residual exists only if every such set has a greatest element.
    """
    assert algebra.mult is not None
    size = algebra.size
    rows = []  # type: List[Tuple[int, ...]]
    for a in range(size):
        row = []  # type: List[int]
        for b in range(size):
            candidates = [c for c in range(size) if algebra.leq(algebra.mult[a][c], b)]
            greatest = [
                c for c in candidates if all(algebra.leq(d, c) for d in candidates)
            ]
            if len(greatest) != 1:
                return None, Error(
                    "NO-RESIDUAL",
                    f"There is no greatest c with "
                    f"{algebra.label(a)} · c ≤ {algebra.label(b)}",
                    witness=(a, b),
                )
            row.append(greatest[0])
        rows.append(tuple(row))

    return tuple(rows), None


@require(lambda algebra: algebra.imp is not None and algebra.zero is not None)
def neg_from_zero(algebra: FiniteAlgebra) -> Unary:
    """Derive the negation ``¬a = a → 0``."""
    assert algebra.imp is not None and algebra.zero is not None
    return tuple(algebra.imp[a][algebra.zero] for a in range(algebra.size))


def with_derived_tables(algebra: FiniteAlgebra) -> FiniteAlgebra:
    """
    Fill in the tables that can be derived and are missing.

    The join is derived from the order when the order is a lattice, the residual
    from the multiplication when it exists and the negation from the zero.
    Tables that can not be derived are left out.
    """
    result = algebra

    if result.meet is not None and result.join is None:
        if semilattice_error(result.meet) is None:
            join = join_from_order(order_matrix(result))
            if join is not None:
                result = result.evolve(join=join)

    if result.meet is not None and result.mult is not None and result.imp is None:
        imp, _ = residual_from_mult(result)
        if imp is not None:
            result = result.evolve(imp=imp)

    if result.imp is not None and result.zero is not None and result.neg is None:
        result = result.evolve(neg=neg_from_zero(result))

    return result


def reduct(algebra: FiniteAlgebra, keep: Collection[str]) -> FiniteAlgebra:
    """Drop every table and constant not listed in ``keep``."""
    return algebra.evolve(
        drop=[
            name
            for name in BINARY_TABLES + UNARY_TABLES + CONSTANTS
            if name not in keep
        ]
    )


@require(lambda first, second: first.signature() == second.signature())
def product(first: FiniteAlgebra, second: FiniteAlgebra) -> FiniteAlgebra:
    """Construct the direct product with the pairs ordered lexicographically."""
    pairs = list(itertools.product(range(first.size), range(second.size)))
    index = {pair: i for i, pair in enumerate(pairs)}

    def binary(name: str) -> Optional[Table]:
        left = first.binary(name)
        right = second.binary(name)
        if left is None or right is None:
            return None
        return tuple(
            tuple(index[(left[a][c], right[b][d])] for (c, d) in pairs)
            for (a, b) in pairs
        )

    def unary(name: str) -> Optional[Unary]:
        left = first.unary(name)
        right = second.unary(name)
        if left is None or right is None:
            return None
        return tuple(index[(left[a], right[b])] for (a, b) in pairs)

    def constant(name: str) -> Optional[int]:
        left = first.constant(name)
        right = second.constant(name)
        if left is None or right is None:
            return None
        return index[(left, right)]

    return FiniteAlgebra(
        name=f"{first.name}x{second.name}",
        size=len(pairs),
        element_names=[
            f"({first.label(a)},{second.label(b)})" for (a, b) in pairs
        ],
        meet=binary("meet"),
        join=binary("join"),
        mult=binary("mult"),
        imp=binary("imp"),
        neg=unary("neg"),
        bang=unary("bang"),
        one=constant("one"),
        zero=constant("zero"),
        top=constant("top"),
        bot=constant("bot"),
    )


@require(
    lambda algebra, sigma: sorted(sigma) == list(range(algebra.size)),
    "sigma is a permutation of the carrier",
)
def permute(algebra: FiniteAlgebra, sigma: Sequence[int]) -> FiniteAlgebra:
    """
    Rename the element ``a`` to ``sigma[a]``, carrying labels and tables along.

    The result is isomorphic to the original through ``sigma``.
    """
    inverse = [0] * algebra.size
    for a, image in enumerate(sigma):
        inverse[image] = a

    def binary(table: Optional[Table]) -> Optional[Table]:
        if table is None:
            return None
        return tuple(
            tuple(sigma[table[inverse[x]][inverse[y]]] for y in range(algebra.size))
            for x in range(algebra.size)
        )

    def unary(table: Optional[Unary]) -> Optional[Unary]:
        if table is None:
            return None
        return tuple(sigma[table[inverse[x]]] for x in range(algebra.size))

    def constant(value: Optional[int]) -> Optional[int]:
        return None if value is None else sigma[value]

    return FiniteAlgebra(
        name=algebra.name,
        size=algebra.size,
        element_names=[algebra.element_names[inverse[x]] for x in range(algebra.size)],
        meet=binary(algebra.meet),
        join=binary(algebra.join),
        mult=binary(algebra.mult),
        imp=binary(algebra.imp),
        neg=unary(algebra.neg),
        bang=unary(algebra.bang),
        one=constant(algebra.one),
        zero=constant(algebra.zero),
        top=constant(algebra.top),
        bot=constant(algebra.bot),
    )


def element_invariants(algebra: FiniteAlgebra) -> List[Tuple[int, ...]]:
    """
    Compute for every element a tuple preserved by every isomorphism.

    Constants sort first; the remaining entries count order and table facts.
    """
    size = algebra.size
    result = []  # type: List[Tuple[int, ...]]
    for a in range(size):
        entries = []  # type: List[int]
        for name in CONSTANTS:
            value = algebra.constant(name)
            entries.append(0 if value == a else 1)

        if algebra.meet is not None:
            entries.append(sum(1 for b in range(size) if algebra.meet[b][a] == b))
            entries.append(sum(1 for b in range(size) if algebra.meet[a][b] == a))

        if algebra.mult is not None:
            entries.append(1 if algebra.mult[a][a] == a else 0)
            entries.append(sum(1 for b in range(size) if algebra.mult[a][b] == a))

        if algebra.imp is not None:
            entries.append(sum(1 for b in range(size) if algebra.imp[a][b] == b))

        if algebra.neg is not None:
            entries.append(1 if algebra.neg[a] == a else 0)

        if algebra.bang is not None:
            entries.append(1 if algebra.bang[a] == a else 0)
            entries.append(sum(1 for b in range(size) if algebra.bang[b] == a))

        result.append(tuple(entries))
    return result


def _candidate_orders(algebra: FiniteAlgebra) -> Iterator[Tuple[int, ...]]:
    """Yield the element sequences grouping elements by ascending invariants."""
    invariants = element_invariants(algebra)
    classes = []  # type: List[List[int]]
    for invariant in sorted(set(invariants)):
        classes.append([a for a in range(algebra.size) if invariants[a] == invariant])

    for choice in itertools.product(
        *(itertools.permutations(members) for members in classes)
    ):
        yield tuple(a for members in choice for a in members)


def _encode(algebra: FiniteAlgebra, order: Sequence[int]) -> bytes:
    """Encode the algebra with the element ``order[i]`` renamed to ``i``."""
    size = algebra.size
    position = [0] * size
    for i, a in enumerate(order):
        position[a] = i

    encoded = bytearray([size])
    for name in BINARY_TABLES:
        table = algebra.binary(name)
        if table is None:
            encoded.append(255)
            continue
        encoded.append(254)
        for a in order:
            for b in order:
                encoded.append(position[table[a][b]])

    for name in UNARY_TABLES:
        unary = algebra.unary(name)
        if unary is None:
            encoded.append(255)
            continue
        encoded.append(254)
        for a in order:
            encoded.append(position[unary[a]])

    for name in CONSTANTS:
        value = algebra.constant(name)
        encoded.append(255 if value is None else position[value])

    return bytes(encoded)


def _canonical_order(algebra: FiniteAlgebra) -> Tuple[bytes, Tuple[int, ...]]:
    best = None  # type: Optional[Tuple[bytes, Tuple[int, ...]]]
    for order in _candidate_orders(algebra):
        encoded = _encode(algebra, order)
        if best is None or encoded < best[0]:
            best = (encoded, order)
    assert best is not None
    return best


def canonical_key(algebra: FiniteAlgebra) -> bytes:
    """
    Encode the algebra so that two algebras are isomorphic iff their keys match.

    The key is the minimum encoding over all renamings which respect the
    element invariants. Labels and the name do not enter the key.
    """
    return _canonical_order(algebra)[0]


def canonical_form(algebra: FiniteAlgebra, name: str = "canonical") -> FiniteAlgebra:
    """Rename the elements along the canonical key, labelling them ``e0``, ``e1``…"""
    _, order = _canonical_order(algebra)
    sigma = [0] * algebra.size
    for i, a in enumerate(order):
        sigma[a] = i

    return permute(algebra, sigma).evolve(
        name=name, element_names=[f"e{i}" for i in range(algebra.size)]
    )


def signature_mismatch(first: FiniteAlgebra, second: FiniteAlgebra) -> Optional[Error]:
    """Report if the two algebras have different tables or constants present."""
    if first.signature() != second.signature():
        return Error(
            "SIGNATURE-MISMATCH",
            f"{first.name} has {', '.join(first.signature())} "
            f"while {second.name} has {', '.join(second.signature())}",
        )
    return None


def _preserves(
    first: FiniteAlgebra, second: FiniteAlgebra, sigma: Sequence[int]
) -> bool:
    size = first.size
    for name in BINARY_TABLES:
        left = first.binary(name)
        right = second.binary(name)
        if left is None or right is None:
            continue
        for a in range(size):
            for b in range(size):
                if sigma[left[a][b]] != right[sigma[a]][sigma[b]]:
                    return False

    for name in UNARY_TABLES:
        left_unary = first.unary(name)
        right_unary = second.unary(name)
        if left_unary is None or right_unary is None:
            continue
        for a in range(size):
            if sigma[left_unary[a]] != right_unary[sigma[a]]:
                return False

    for name in CONSTANTS:
        left_value = first.constant(name)
        right_value = second.constant(name)
        if left_value is not None and right_value is not None:
            if sigma[left_value] != right_value:
                return False

    return True


@require(lambda first, second: signature_mismatch(first, second) is None)
def is_isomorphic(
    first: FiniteAlgebra, second: FiniteAlgebra
) -> Optional[Tuple[int, ...]]:
    """
    Find a bijection ``sigma`` from ``first`` to ``second`` preserving everything.

    Return None if there is none.
    Call :py:func:`signature_mismatch` first to get the error as a value.
    """
    if first.size != second.size:
        return None

    first_invariants = element_invariants(first)
    second_invariants = element_invariants(second)
    if sorted(first_invariants) != sorted(second_invariants):
        return None

    targets = {}  # type: Dict[Tuple[int, ...], List[int]]
    for b, invariant in enumerate(second_invariants):
        targets.setdefault(invariant, []).append(b)

    classes = sorted(targets.keys())
    sources = [
        [a for a in range(first.size) if first_invariants[a] == invariant]
        for invariant in classes
    ]

    for choice in itertools.product(
        *(itertools.permutations(targets[invariant]) for invariant in classes)
    ):
        sigma = [0] * first.size
        for members, images in zip(sources, choice):
            for a, b in zip(members, images):
                sigma[a] = b

        if _preserves(first, second, sigma):
            return tuple(sigma)

    return None
