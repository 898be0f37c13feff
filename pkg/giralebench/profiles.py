"""Check finite algebras against the axiom profiles and the law suites."""

import enum
import itertools
from typing import (
    Callable,
    Final,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from icontract import require, ensure

from giralebench.algebra import FiniteAlgebra, residual_from_mult, neg_from_zero
from giralebench.common import Error


class Profile(enum.Enum):
    """List the classes of algebras an algebra can be checked against."""

    POSET_LATTICE = "poset-lattice"
    GS = "gs"
    GL = "gl"
    V_L7 = "v-l7"
    CRL = "crl"
    GIRARD = "girard"
    BOUNDED_GIRARD = "bounded-girard"
    GIRALE = "girale"
    BOUNDED_GIRALE = "bounded-girale"
    LR = "lr"
    HEYTING = "heyting"


class Unassigned(Exception):
    """Signal that an evaluation reached a cell which has not been filled in yet."""


Cells = Sequence[Sequence[int]]


class TableView:
    """
    Evaluate the operations of a possibly partial algebra.

    A cell holding a negative value is not filled in yet; reading it raises
    :py:class:`Unassigned`.
    """

    def __init__(
        self,
        size: int,
        meet: Optional[Cells] = None,
        join: Optional[Cells] = None,
        mult: Optional[Cells] = None,
        imp: Optional[Cells] = None,
        neg: Optional[Sequence[int]] = None,
        bang: Optional[Sequence[int]] = None,
        one: Optional[int] = None,
        zero: Optional[int] = None,
        top: Optional[int] = None,
        bot: Optional[int] = None,
    ) -> None:
        """Initialize with the given values."""
        self.size = size
        self._meet = meet
        self._join = join
        self._mult = mult
        self._imp = imp
        self._neg = neg
        self._bang = bang
        self._one = one
        self._zero = zero
        self._top = top
        self._bot = bot

    @staticmethod
    def of(algebra: FiniteAlgebra) -> "TableView":
        """Wrap a complete algebra."""
        return TableView(
            size=algebra.size,
            meet=algebra.meet,
            join=algebra.join,
            mult=algebra.mult,
            imp=algebra.imp,
            neg=algebra.neg,
            bang=algebra.bang,
            one=algebra.one,
            zero=algebra.zero,
            top=algebra.top,
            bot=algebra.bot,
        )

    @staticmethod
    def _cell(table: Optional[Cells], a: int, b: int) -> int:
        if table is None:
            raise Unassigned()
        value = table[a][b]
        if value < 0:
            raise Unassigned()
        return value

    @staticmethod
    def _entry(table: Optional[Sequence[int]], a: int) -> int:
        if table is None:
            raise Unassigned()
        value = table[a]
        if value < 0:
            raise Unassigned()
        return value

    @staticmethod
    def _value(value: Optional[int]) -> int:
        if value is None:
            raise Unassigned()
        return value

    def meet(self, a: int, b: int) -> int:
        return TableView._cell(self._meet, a, b)

    def join(self, a: int, b: int) -> int:
        return TableView._cell(self._join, a, b)

    def mult(self, a: int, b: int) -> int:
        return TableView._cell(self._mult, a, b)

    def imp(self, a: int, b: int) -> int:
        return TableView._cell(self._imp, a, b)

    def neg(self, a: int) -> int:
        return TableView._entry(self._neg, a)

    def bang(self, a: int) -> int:
        return TableView._entry(self._bang, a)

    def leq(self, a: int, b: int) -> bool:
        return TableView._cell(self._meet, a, b) == a

    @property
    def one(self) -> int:
        return TableView._value(self._one)

    @property
    def zero(self) -> int:
        return TableView._value(self._zero)

    @property
    def top(self) -> int:
        return TableView._value(self._top)

    @property
    def bot(self) -> int:
        return TableView._value(self._bot)

    def has_bot(self) -> bool:
        return self._bot is not None

    def has_neg(self) -> bool:
        return self._neg is not None


class Condition:
    """Represent a law quantified over all tuples of elements."""

    #: Stable identifier reported in violations
    identifier: Final[str]

    #: Human-readable statement of the law
    statement: Final[str]

    #: Number of quantified elements
    arity: Final[int]

    #: Decide the law for the given view and elements
    holds: Final[Callable[..., bool]]

    def __init__(
        self,
        identifier: str,
        statement: str,
        arity: int,
        holds: Callable[..., bool],
    ) -> None:
        """Initialize with the given values."""
        self.identifier = identifier
        self.statement = statement
        self.arity = arity
        self.holds = holds

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.identifier!r})"


class Violation:
    """Record a law falsified by a witness."""

    def __init__(
        self, condition: str, witness: Tuple[int, ...], message: str = ""
    ) -> None:
        """Initialize with the given values."""
        self.condition = condition
        self.witness = witness
        self.message = message

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Violation):
            return NotImplemented
        return (self.condition, self.witness, self.message) == (
            other.condition,
            other.witness,
            other.message,
        )

    def __hash__(self) -> int:
        return hash((self.condition, self.witness, self.message))

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"{self.condition!r}, {self.witness!r}, {self.message!r})"
        )


class CheckReport:
    """Collect the violations found by a check."""

    #: Violations in the order of the checked conditions
    violations: Final[Tuple[Violation, ...]]

    #: Name of the first layer of conditions which failed, if any
    failed_layer: Final[Optional[str]]

    def __init__(
        self, violations: Sequence[Violation], failed_layer: Optional[str] = None
    ) -> None:
        """Initialize with the given values."""
        self.violations = tuple(violations)
        self.failed_layer = failed_layer

    @property
    def passed(self) -> bool:
        """Return True if there are no violations."""
        return len(self.violations) == 0

    @property
    def verdict(self) -> str:
        """Render the verdict as ``pass`` or ``fail``."""
        return "pass" if self.passed else "fail"

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"{list(self.violations)!r}, failed_layer={self.failed_layer!r})"
        )


def holds_at(condition: Condition, view: TableView, witness: Sequence[int]) -> bool:
    """Evaluate ``condition`` at ``witness``; a partial view raises Unassigned."""
    return bool(condition.holds(view, *witness))


def first_witness(condition: Condition, view: TableView) -> Optional[Tuple[int, ...]]:
    """Find the lexicographically first tuple falsifying ``condition``."""
    for witness in itertools.product(range(view.size), repeat=condition.arity):
        if not condition.holds(view, *witness):
            return witness
    return None


def refuted(conditions: Sequence[Condition], view: TableView) -> bool:
    """
    Check whether some condition already fails on the filled-in cells.

    Tuples touching empty cells are skipped.
    """
    for condition in conditions:
        for witness in itertools.product(range(view.size), repeat=condition.arity):
            try:
                if not condition.holds(view, *witness):
                    return True
            except Unassigned:
                pass
    return False


def _implies(premise: bool, conclusion: Callable[[], bool]) -> bool:
    return (not premise) or conclusion()


# fmt: off
SEMILATTICE_CONDITIONS: Final = (
    Condition("MEET-IDEMPOTENT", "a ∧ a = a", 1,
              lambda v, a: v.meet(a, a) == a),
    Condition("MEET-COMMUTATIVE", "a ∧ b = b ∧ a", 2,
              lambda v, a, b: v.meet(a, b) == v.meet(b, a)),
    Condition("MEET-ASSOCIATIVE", "(a ∧ b) ∧ c = a ∧ (b ∧ c)", 3,
              lambda v, a, b, c: v.meet(v.meet(a, b), c) == v.meet(a, v.meet(b, c))),
)

JOIN_CONDITIONS: Final = (
    Condition("JOIN-IDEMPOTENT", "a ∨ a = a", 1,
              lambda v, a: v.join(a, a) == a),
    Condition("JOIN-COMMUTATIVE", "a ∨ b = b ∨ a", 2,
              lambda v, a, b: v.join(a, b) == v.join(b, a)),
    Condition("JOIN-ASSOCIATIVE", "(a ∨ b) ∨ c = a ∨ (b ∨ c)", 3,
              lambda v, a, b, c: v.join(v.join(a, b), c) == v.join(a, v.join(b, c))),
    Condition("JOIN-AGREES-WITH-MEET", "a ∧ b = a iff a ∨ b = b", 2,
              lambda v, a, b: (v.meet(a, b) == a) == (v.join(a, b) == b)),
)

GS_CONDITIONS: Final = (
    Condition("L1", "1 → a = a", 1,
              lambda v, a: v.imp(v.one, a) == a),
    Condition("L2", "a → a ≥ 1", 1,
              lambda v, a: v.leq(v.one, v.imp(a, a))),
    Condition("L3", "(a → b) ∧ (a → c) = a → (b ∧ c)", 3,
              lambda v, a, b, c:
              v.meet(v.imp(a, b), v.imp(a, c)) == v.imp(a, v.meet(b, c))),
    Condition("L4", "a → b ≤ (c → a) → (c → b)", 3,
              lambda v, a, b, c:
              v.leq(v.imp(a, b), v.imp(v.imp(c, a), v.imp(c, b)))),
    Condition("L5", "a → (b → c) ≤ b → (a → c)", 3,
              lambda v, a, b, c:
              v.leq(v.imp(a, v.imp(b, c)), v.imp(b, v.imp(a, c)))),
    Condition("L6", "a → b ≥ 1 and b → a ≥ 1 implies a = b", 2,
              lambda v, a, b: _implies(
                  v.leq(v.one, v.imp(a, b)) and v.leq(v.one, v.imp(b, a)),
                  lambda: a == b)),
)

JOIN_LAW: Final = Condition(
    "GL-JOIN-LAW", "(a → c) ∧ (b → c) = (a ∨ b) → c", 3,
    lambda v, a, b, c: v.meet(v.imp(a, c), v.imp(b, c)) == v.imp(v.join(a, b), c))

L7_CONDITIONS: Final = (
    Condition("L7", "a ≤ ((a → b) ∧ 1) → b", 2,
              lambda v, a, b: v.leq(a, v.imp(v.meet(v.imp(a, b), v.one), b))),
)

MONOID_CONDITIONS: Final = (
    Condition("MULT-COMMUTATIVE", "a · b = b · a", 2,
              lambda v, a, b: v.mult(a, b) == v.mult(b, a)),
    Condition("MULT-ASSOCIATIVE", "(a · b) · c = a · (b · c)", 3,
              lambda v, a, b, c: v.mult(v.mult(a, b), c) == v.mult(a, v.mult(b, c))),
    Condition("MULT-UNIT", "1 · a = a", 1,
              lambda v, a: v.mult(v.one, a) == a),
)

RESIDUATION_CONDITIONS: Final = (
    Condition("RESIDUATION", "a · b ≤ c iff a ≤ b → c", 3,
              lambda v, a, b, c: v.leq(v.mult(a, b), c) == v.leq(a, v.imp(b, c))),
)

INVOLUTION_CONDITIONS: Final = (
    Condition("ZERO-INVOLUTIVE", "(a → 0) → 0 = a", 1,
              lambda v, a: v.imp(v.imp(a, v.zero), v.zero) == a),
    Condition("NEG-MISMATCH", "¬a = a → 0", 1,
              lambda v, a: not v.has_neg() or v.neg(a) == v.imp(a, v.zero)),
)

BOUNDS_CONDITIONS: Final = (
    Condition("TOP-IS-GREATEST", "a ≤ ⊤", 1,
              lambda v, a: v.leq(a, v.top)),
    Condition("BOT-IS-NEG-TOP", "⊥ = ⊤ → 0", 0,
              lambda v: not v.has_bot() or v.bot == v.imp(v.top, v.zero)),
)

MODALITY_CONDITIONS: Final = (
    Condition("G1", "!1 = 1", 0,
              lambda v: v.bang(v.one) == v.one),
    Condition("G2", "!a ≤ a ∧ 1", 1,
              lambda v, a: v.leq(v.bang(a), v.meet(a, v.one))),
    Condition("G3", "!a · !b = !(a ∧ b)", 2,
              lambda v, a, b: v.mult(v.bang(a), v.bang(b)) == v.bang(v.meet(a, b))),
    Condition("G4", "!!a = !a", 1,
              lambda v, a: v.bang(v.bang(a)) == v.bang(a)),
)

HEYTING_CONDITIONS: Final = (
    Condition("INTEGRAL", "a ≤ 1", 1,
              lambda v, a: v.leq(a, v.one)),
    Condition("IDEMPOTENT", "a · a = a", 1,
              lambda v, a: v.mult(a, a) == a),
    Condition("MULT-IS-MEET", "a · b = a ∧ b", 2,
              lambda v, a, b: v.mult(a, b) == v.meet(a, b)),
)

LR_CONDITIONS: Final = (
    Condition("LR-NEG-INVOLUTIVE", "¬¬a = a", 1,
              lambda v, a: v.neg(v.neg(a)) == a),
    Condition("LR-DE-MORGAN-MEET", "¬(a ∧ b) = ¬a ∨ ¬b", 2,
              lambda v, a, b: v.neg(v.meet(a, b)) == v.join(v.neg(a), v.neg(b))),
    Condition("LR-DE-MORGAN-JOIN", "¬(a ∨ b) = ¬a ∧ ¬b", 2,
              lambda v, a, b: v.neg(v.join(a, b)) == v.meet(v.neg(a), v.neg(b))),
    GS_CONDITIONS[2],
    GS_CONDITIONS[3],
    GS_CONDITIONS[4],
    JOIN_LAW,
    Condition("LR-CONTRAPOSITION", "a → ¬b = b → ¬a", 2,
              lambda v, a, b: v.imp(a, v.neg(b)) == v.imp(b, v.neg(a))),
    Condition("LR-EQUATION", "((a → a) ∧ (b → b)) → c ≤ c", 3,
              lambda v, a, b, c:
              v.leq(v.imp(v.meet(v.imp(a, a), v.imp(b, b)), c), c)),
)
# fmt: on


Preparation = Callable[
    [FiniteAlgebra], Tuple[Optional[FiniteAlgebra], Optional[Violation]]
]


def _prepare_residual(
    algebra: FiniteAlgebra,
) -> Tuple[Optional[FiniteAlgebra], Optional[Violation]]:
    """Derive the residual or compare it against the given one."""
    imp, error = residual_from_mult(algebra)
    if error is not None:
        return None, Violation("NO-RESIDUAL", error.witness, error.message)

    assert imp is not None
    if algebra.imp is None:
        return algebra.evolve(imp=imp), None

    for a, b in itertools.product(range(algebra.size), repeat=2):
        if algebra.imp[a][b] != imp[a][b]:
            return None, Violation(
                "IMP-MISMATCH",
                (a, b),
                f"The given {algebra.label(a)} → {algebra.label(b)} is "
                f"{algebra.label(algebra.imp[a][b])}, "
                f"but the residual is {algebra.label(imp[a][b])}",
            )

    return algebra, None


def _prepare_heyting(
    algebra: FiniteAlgebra,
) -> Tuple[Optional[FiniteAlgebra], Optional[Violation]]:
    """Take the meet as the multiplication if none is given."""
    if algebra.mult is None:
        return algebra.evolve(mult=algebra.meet), None
    return algebra, None


def _prepare_negation(
    algebra: FiniteAlgebra,
) -> Tuple[Optional[FiniteAlgebra], Optional[Violation]]:
    """Derive the negation from the zero if none is given."""
    if algebra.neg is None:
        return algebra.evolve(neg=neg_from_zero(algebra)), None
    return algebra, None


class Layer:
    """Group the conditions which are checked together."""

    def __init__(
        self,
        name: str,
        conditions: Sequence[Condition],
        tables: Sequence[str] = (),
        constants: Sequence[str] = (),
        prepare: Optional[Preparation] = None,
    ) -> None:
        """Initialize with the given values."""
        self.name = name
        self.conditions = tuple(conditions)

        #: Tables which must be present before the layer is checked
        self.tables = tuple(tables)

        #: Constants which must be present before the layer is checked
        self.constants = tuple(constants)

        #: Transform the algebra before the conditions are evaluated
        self.prepare = prepare


SEMILATTICE: Final = Layer("semilattice", SEMILATTICE_CONDITIONS, tables=["meet"])
LATTICE: Final = Layer(
    "lattice", SEMILATTICE_CONDITIONS + JOIN_CONDITIONS, tables=["meet", "join"]
)
GIRARD_SEMILATTICE: Final = Layer(
    "girard-semilattice", GS_CONDITIONS, tables=["imp"], constants=["one"]
)
GIRARD_LATTICE: Final = Layer("girard-lattice", [JOIN_LAW], tables=["join"])
L7: Final = Layer("l7", L7_CONDITIONS)
MONOID: Final = Layer("monoid", MONOID_CONDITIONS, tables=["mult"], constants=["one"])
RESIDUATION: Final = Layer(
    "residuation", RESIDUATION_CONDITIONS, prepare=_prepare_residual
)
INVOLUTION: Final = Layer("involution", INVOLUTION_CONDITIONS, constants=["zero"])
BOUNDS: Final = Layer("bounds", BOUNDS_CONDITIONS, constants=["top"])
MODALITY: Final = Layer("modality", MODALITY_CONDITIONS, tables=["bang"])
HEYTING: Final = Layer(
    "heyting", HEYTING_CONDITIONS, constants=["one"], prepare=_prepare_heyting
)
LR_LAYER: Final = Layer(
    "lr", LR_CONDITIONS, tables=["imp"], prepare=_prepare_negation
)

_CRL_LAYERS = (LATTICE, MONOID, RESIDUATION)

#: Layers of every profile, from the weakest to the strongest
LAYERS: Final = {
    Profile.POSET_LATTICE: (LATTICE,),
    Profile.GS: (SEMILATTICE, GIRARD_SEMILATTICE),
    Profile.GL: (LATTICE, GIRARD_SEMILATTICE, GIRARD_LATTICE),
    Profile.V_L7: (SEMILATTICE, GIRARD_SEMILATTICE, L7),
    Profile.CRL: _CRL_LAYERS,
    Profile.GIRARD: _CRL_LAYERS + (INVOLUTION,),
    Profile.BOUNDED_GIRARD: _CRL_LAYERS + (INVOLUTION, BOUNDS),
    Profile.GIRALE: _CRL_LAYERS + (INVOLUTION, MODALITY),
    Profile.BOUNDED_GIRALE: _CRL_LAYERS + (INVOLUTION, BOUNDS, MODALITY),
    Profile.LR: (LATTICE, LR_LAYER),
    Profile.HEYTING: (LATTICE, HEYTING, RESIDUATION),
}

assert all(profile in LAYERS for profile in Profile)


def conditions_of(profile: Profile) -> List[Condition]:
    """List all the conditions of ``profile`` in the order they are checked."""
    return [
        condition for layer in LAYERS[profile] for condition in layer.conditions
    ]


def missing_requirements(algebra: FiniteAlgebra, profile: Profile) -> Optional[Error]:
    """Report the first table or constant needed by ``profile`` which is absent."""
    for layer in LAYERS[profile]:
        for table in layer.tables:
            present = (
                algebra.binary(table) is not None
                if table in ("meet", "join", "mult", "imp")
                else algebra.unary(table) is not None
            )
            if not present:
                return Error(
                    "MISSING-TABLE",
                    f"The profile {profile.value} requires the table {table}",
                )

        for constant in layer.constants:
            if algebra.constant(constant) is None:
                return Error(
                    "MISSING-CONSTANT",
                    f"The profile {profile.value} requires the constant {constant}",
                )

        if layer is LR_LAYER and algebra.neg is None and algebra.zero is None:
            return Error(
                "MISSING-CONSTANT",
                f"The profile {profile.value} requires the table neg "
                f"or the constant zero",
            )

    return None


def _layers_with_algebra(
    algebra: FiniteAlgebra, layers: Sequence[Layer]
) -> Iterator[Tuple[Layer, Optional[FiniteAlgebra], Optional[Violation]]]:
    """Prepare the algebra for each layer in turn."""
    current = algebra  # type: Optional[FiniteAlgebra]
    for layer in layers:
        assert current is not None
        violation = None  # type: Optional[Violation]
        if layer.prepare is not None:
            current, violation = layer.prepare(current)

        yield layer, current, violation
        if current is None:
            return


def _evaluate_layers(
    algebra: FiniteAlgebra, layers: Sequence[Layer], exhaustive: bool
) -> CheckReport:
    for layer, prepared, violation in _layers_with_algebra(algebra, layers):
        if violation is not None:
            return CheckReport([violation], failed_layer=layer.name)

        assert prepared is not None
        view = TableView.of(prepared)
        violations = []  # type: List[Violation]
        for condition in layer.conditions:
            witness = first_witness(condition, view)
            if witness is not None:
                violations.append(
                    Violation(condition.identifier, witness, condition.statement)
                )
                if not exhaustive:
                    break

        if violations:
            return CheckReport(violations, failed_layer=layer.name)

    return CheckReport([])


@require(lambda algebra, profile: missing_requirements(algebra, profile) is None)
@ensure(lambda result: result.passed == (len(result.violations) == 0))
def check_profile(algebra: FiniteAlgebra, profile: Profile) -> CheckReport:
    """
    Evaluate every condition of ``profile`` over all element tuples.

    The layers are checked from the weakest up; the report lists the violations
    of the first failing layer, each with its lexicographically first witness.
    """
    return _evaluate_layers(algebra, LAYERS[profile], exhaustive=True)


@require(lambda algebra, profile: missing_requirements(algebra, profile) is None)
def passes_profile(algebra: FiniteAlgebra, profile: Profile) -> bool:
    """Decide ``profile`` stopping at the first violation."""
    return _evaluate_layers(algebra, LAYERS[profile], exhaustive=False).passed


def prepared_for(algebra: FiniteAlgebra, profile: Profile) -> FiniteAlgebra:
    """
    Fill in the tables ``profile`` derives, such as the residual.

    The algebra is returned unchanged if a derivation fails.
    """
    current = algebra
    for _, prepared, _ in _layers_with_algebra(algebra, LAYERS[profile]):
        if prepared is None:
            return algebra
        current = prepared
    return current


def _check_laws(algebra: FiniteAlgebra, conditions: Sequence[Condition]) -> CheckReport:
    view = TableView.of(algebra)
    violations = []  # type: List[Violation]
    for condition in conditions:
        witness = first_witness(condition, view)
        if witness is not None:
            violations.append(
                Violation(condition.identifier, witness, condition.statement)
            )
    return CheckReport(violations)


# fmt: off
CRL_LAWS: Final = (
    Condition("ADJUNCTION", "a · b ≤ c iff a ≤ b → c", 3,
              lambda v, a, b, c: v.leq(v.mult(a, b), c) == v.leq(a, v.imp(b, c))),
    Condition("MULT-DISTRIBUTES-OVER-JOIN", "a · (b ∨ c) = a · b ∨ a · c", 3,
              lambda v, a, b, c:
              v.mult(a, v.join(b, c)) == v.join(v.mult(a, b), v.mult(a, c))),
)

NEGATION_LAWS: Final = (
    Condition("NEG-INVOLUTIVE", "¬¬a = a", 1,
              lambda v, a: v.neg(v.neg(a)) == a),
    Condition("DE-MORGAN-JOIN", "¬(a ∨ b) = ¬a ∧ ¬b", 2,
              lambda v, a, b: v.neg(v.join(a, b)) == v.meet(v.neg(a), v.neg(b))),
    Condition("DE-MORGAN-MEET", "¬(a ∧ b) = ¬a ∨ ¬b", 2,
              lambda v, a, b: v.neg(v.meet(a, b)) == v.join(v.neg(a), v.neg(b))),
    Condition("NEG-ANTITONE", "a ≤ b implies ¬b ≤ ¬a", 2,
              lambda v, a, b: _implies(v.leq(a, b),
                                       lambda: v.leq(v.neg(b), v.neg(a)))),
    Condition("CONTRAPOSITION", "¬(a · ¬b) = a → b", 2,
              lambda v, a, b: v.neg(v.mult(a, v.neg(b))) == v.imp(a, b)),
)

RESIDUATION_LEMMA: Final = (
    Condition("RESIDUATION-LEMMA-1", "a ≤ b iff a → b ≥ 1", 2,
              lambda v, a, b: v.leq(a, b) == v.leq(v.one, v.imp(a, b))),
    Condition("RESIDUATION-LEMMA-2", "a ≤ (a → b) → b", 2,
              lambda v, a, b: v.leq(a, v.imp(v.imp(a, b), b))),
    Condition("RESIDUATION-LEMMA-3",
              "a ≤ b implies b → c ≤ a → c and c → a ≤ c → b", 3,
              lambda v, a, b, c: _implies(
                  v.leq(a, b),
                  lambda: v.leq(v.imp(b, c), v.imp(a, c))
                  and v.leq(v.imp(c, a), v.imp(c, b)))),
)

GIRALE_LEMMA: Final = (
    Condition("GIRALE-LEMMA-1", "a ≤ b implies !a ≤ !b", 2,
              lambda v, a, b: _implies(v.leq(a, b),
                                       lambda: v.leq(v.bang(a), v.bang(b)))),
    Condition("GIRALE-LEMMA-2", "b ≤ !a → b", 2,
              lambda v, a, b: v.leq(b, v.imp(v.bang(a), b))),
    Condition("GIRALE-LEMMA-3", "!a = !a · !a", 1,
              lambda v, a: v.bang(a) == v.mult(v.bang(a), v.bang(a))),
    Condition("GIRALE-LEMMA-4", "a · b ≤ c implies !a · !b ≤ !c", 3,
              lambda v, a, b, c: _implies(
                  v.leq(v.mult(a, b), c),
                  lambda: v.leq(v.mult(v.bang(a), v.bang(b)), v.bang(c)))),
    Condition("GIRALE-LEMMA-5", "a ≥ 1 implies !a = 1", 1,
              lambda v, a: _implies(v.leq(v.one, a), lambda: v.bang(a) == v.one)),
    Condition("GIRALE-LEMMA-6", "!(!a · !b) = !a · !b ≤ !(a · b)", 2,
              lambda v, a, b:
              v.bang(v.mult(v.bang(a), v.bang(b))) == v.mult(v.bang(a), v.bang(b))
              and v.leq(v.mult(v.bang(a), v.bang(b)), v.bang(v.mult(a, b)))),
    Condition("GIRALE-LEMMA-7", "!(a → b) ≤ !a → !b", 2,
              lambda v, a, b: v.leq(v.bang(v.imp(a, b)), v.imp(v.bang(a), v.bang(b)))),
    Condition("GIRALE-LEMMA-8", "!a → (!a → b) ≤ !a → b", 2,
              lambda v, a, b:
              v.leq(v.imp(v.bang(a), v.imp(v.bang(a), b)), v.imp(v.bang(a), b))),
)
# fmt: on


def _has(algebra: FiniteAlgebra, names: Sequence[str]) -> bool:
    return all(name in algebra.signature() for name in names)


@require(lambda algebra: _has(algebra, ["meet", "join", "mult", "imp"]))
def check_crl_laws(algebra: FiniteAlgebra) -> CheckReport:
    """Check the adjunction and the distributivity of · over ∨."""
    return _check_laws(algebra, CRL_LAWS)


@require(
    lambda algebra: _has(algebra, ["meet", "join", "mult", "imp"])
    and (algebra.neg is not None or algebra.zero is not None)
)
def check_negation_laws(algebra: FiniteAlgebra) -> CheckReport:
    """
    Check that the negation is involutive, De Morgan, antitone and contraposes.

    The given negation table is checked if present, otherwise ``a → 0``.
    """
    prepared, _ = _prepare_negation(algebra)
    assert prepared is not None
    return _check_laws(prepared, NEGATION_LAWS)


@require(lambda algebra: _has(algebra, ["meet", "imp", "one"]))
def check_residuation_lemma(algebra: FiniteAlgebra) -> CheckReport:
    """Check the residuation properties every algebra satisfying (L7) has."""
    return _check_laws(algebra, RESIDUATION_LEMMA)


@require(lambda algebra: _has(algebra, ["meet", "mult", "imp", "bang", "one"]))
def check_girale_lemma(algebra: FiniteAlgebra) -> CheckReport:
    """Check the eight derived properties of the modality in a girale."""
    return _check_laws(algebra, GIRALE_LEMMA)
