"""Check Hilbert-style derivations against the axiom schemata of linear logic."""

import abc
import enum
import pathlib
import re
from typing import (
    Dict,
    Final,
    FrozenSet,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import icontract
from icontract import require, ensure, DBC

from giralebench import syntax
from giralebench.algebra import FiniteAlgebra
from giralebench.common import Error, assert_never
from giralebench.profiles import (
    CheckReport,
    Profile,
    Violation,
    missing_requirements,
    passes_profile,
)
from giralebench.syntax import (
    BinaryFormula,
    Const,
    Formula,
    Meta,
    UnaryFormula,
    Var,
)


class AxiomSchema:
    """Represent an axiom schema over the metavariables ``$p``, ``$q`` and ``$r``."""

    identifier: Final[str]
    pattern: Final[Formula]

    def __init__(self, identifier: str, pattern: Formula) -> None:
        """Initialize with the given values."""
        self.identifier = identifier
        self.pattern = pattern

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.identifier!r}, {str(self.pattern)!r})"


def _schema(identifier: str, text: str) -> AxiomSchema:
    pattern, error = syntax.parse_formula(text)
    assert error is None, f"Invalid schema {identifier}: {error}"
    assert pattern is not None
    return AxiomSchema(identifier, pattern)


# fmt: off
SCHEMATA: Final = {
    schema.identifier: schema
    for schema in (
        _schema("HL1", "$p -> $p"),
        _schema("HL2", "($p -> $q) -> ($q -> $r) -> $p -> $r"),
        _schema("HL3", "($p -> $q -> $r) -> $q -> $p -> $r"),
        _schema("HL4", "~~$p -> $p"),
        _schema("HL5", "($p -> ~$q) -> $q -> ~$p"),
        _schema("HL6", "$p -> $q -> $p * $q"),
        _schema("HL7", "($p -> $q -> $r) -> $p * $q -> $r"),
        _schema("HL8", "1"),
        _schema("HL9", "1 -> $p -> $p"),
        _schema("HL10", "$p -> ~$p -> 0"),
        _schema("HL11", "~0"),
        _schema("HL12", "$p /\\ $q -> $p"),
        _schema("HL13", "$p /\\ $q -> $q"),
        _schema("HL14", "($p -> $q) /\\ ($p -> $r) -> $p -> $q /\\ $r"),
        _schema("HL15", "$p -> $p \\/ $q"),
        _schema("HL16", "$q -> $p \\/ $q"),
        _schema("HL17", "($p -> $r) /\\ ($q -> $r) -> $p \\/ $q -> $r"),
        _schema("HL18", "$p -> T"),
        _schema("HL19", "F -> $p"),
        _schema("HL20", "$q -> !$p -> $q"),
        _schema("HL21", "(!$p -> !$p -> $q) -> !$p -> $q"),
        _schema("HL22", "!($p -> $q) -> !$p -> !$q"),
        _schema("HL23", "!$p -> $p"),
        _schema("HL24", "!$p -> !!$p"),
        _schema("MINGLE", "$p -> $p -> $p"),
    )
}  # type: Mapping[str, AxiomSchema]
# fmt: on


class Rule(enum.Enum):
    """Enumerate the inference rules."""

    MP = "mp"
    ADJ = "adj"
    NEC = "nec"


def _ids(*numbers: int) -> Tuple[str, ...]:
    return tuple(f"HL{number}" for number in numbers)


class System:
    """Represent a Hilbert system as a selection of schemata and rules."""

    identifier: Final[str]
    axioms: Final[Tuple[str, ...]]
    rules: Final[FrozenSet[Rule]]

    @require(lambda axioms: all(axiom in SCHEMATA for axiom in axioms))
    def __init__(
        self, identifier: str, axioms: Sequence[str], rules: Sequence[Rule]
    ) -> None:
        """Initialize with the given values."""
        self.identifier = identifier
        self.axioms = tuple(axioms)
        self.rules = frozenset(rules)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.identifier!r})"


_MULTIPLICATIVE_ADDITIVE = _ids(*range(1, 20))
_EXPONENTIAL = _ids(*range(20, 25))
_INTUITIONISTIC = _ids(1, 2, 3, 6, 7, 8, 9, *range(12, 20))
_RELEVANT = _ids(*range(1, 8), *range(12, 20))

#: Predefined systems by their identifiers
SYSTEMS: Final = {
    system.identifier: system
    for system in (
        System("MALL", _MULTIPLICATIVE_ADDITIVE, [Rule.MP, Rule.ADJ]),
        System("LL", _MULTIPLICATIVE_ADDITIVE + _EXPONENTIAL, list(Rule)),
        System("LR", _RELEVANT, [Rule.MP, Rule.ADJ]),
        System("LRM", _RELEVANT + ("MINGLE",), [Rule.MP, Rule.ADJ]),
        System("ILL", _INTUITIONISTIC + _EXPONENTIAL, list(Rule)),
        System(
            "ILN", _INTUITIONISTIC + _EXPONENTIAL + _ids(5, 10, 11), list(Rule)
        ),
        System("ILL0", _INTUITIONISTIC, [Rule.MP, Rule.ADJ]),
        System("ILN0", _INTUITIONISTIC + _ids(5, 10, 11), [Rule.MP, Rule.ADJ]),
    )
}  # type: Mapping[str, System]

#: Profile whose finite algebras every theorem of a system holds in
MATCHING_PROFILE: Final = {
    "MALL": Profile.BOUNDED_GIRARD,
    "LL": Profile.BOUNDED_GIRALE,
}  # type: Mapping[str, Profile]


class Justification(DBC):
    """Represent an abstract reason for a derivation step."""

    @abc.abstractmethod
    def __str__(self) -> str:
        raise NotImplementedError()


class ByAxiom(Justification):
    """Justify a step as an instance of an axiom schema."""

    def __init__(self, axiom: str) -> None:
        """Initialize with the given values."""
        self.axiom = axiom

    def __str__(self) -> str:
        return f"axiom {self.axiom}"


class ByHypothesis(Justification):
    """Justify a step by the hypothesis with the 1-based ``index``."""

    def __init__(self, index: int) -> None:
        """Initialize with the given values."""
        self.index = index

    def __str__(self) -> str:
        return f"hyp {self.index}"


class ByModusPonens(Justification):
    """Derive ``ψ`` from the step ``minor`` (``φ``) and ``major`` (``φ -> ψ``)."""

    def __init__(self, minor: int, major: int) -> None:
        """Initialize with the given values."""
        self.minor = minor
        self.major = major

    def __str__(self) -> str:
        return f"mp {self.minor} {self.major}"


class ByAdjunction(Justification):
    """Derive ``φ /\\ ψ`` from the steps ``left`` and ``right``."""

    def __init__(self, left: int, right: int) -> None:
        """Initialize with the given values."""
        self.left = left
        self.right = right

    def __str__(self) -> str:
        return f"adj {self.left} {self.right}"


class ByNecessitation(Justification):
    """Derive ``!φ`` from the step ``premise``."""

    def __init__(self, premise: int) -> None:
        """Initialize with the given values."""
        self.premise = premise

    def __str__(self) -> str:
        return f"nec {self.premise}"


AnyJustification = Union[
    ByAxiom, ByHypothesis, ByModusPonens, ByAdjunction, ByNecessitation
]


class Step:
    """Represent a justified formula of a derivation."""

    def __init__(self, formula: Formula, justification: AnyJustification) -> None:
        """Initialize with the given values."""
        self.formula = formula
        self.justification = justification

    def __str__(self) -> str:
        return f"{self.formula} by {self.justification}"


class Derivation:
    """Represent a sequence of justified steps from the hypotheses."""

    def __init__(
        self,
        name: str,
        hypotheses: Sequence[Formula],
        steps: Sequence[Step],
        system: Optional[str] = None,
    ) -> None:
        """Initialize with the given values."""
        self.name = name
        self.hypotheses = tuple(hypotheses)
        self.steps = tuple(steps)

        #: Identifier of the system the derivation is meant for, if stated
        self.system = system

    def conclusion(self) -> Optional[Formula]:
        """Return the formula of the last step, if any."""
        return self.steps[-1].formula if self.steps else None


def match_schema(
    formula: Formula, schema: AxiomSchema
) -> Optional[Dict[str, Formula]]:
    """
    Find the substitution of the metavariables turning the pattern into ``formula``.

    Every occurrence of a metavariable must match the same formula.
    """
    substitution = dict()  # type: Dict[str, Formula]

    stack = [(schema.pattern, formula)]  # type: List[Tuple[Formula, Formula]]
    while stack:
        pattern, target = stack.pop()

        if isinstance(pattern, Meta):
            bound = substitution.get(pattern.name, None)
            if bound is None:
                substitution[pattern.name] = target
            elif bound != target:
                return None

        elif isinstance(pattern, (Var, Const)):
            if pattern != target:
                return None

        elif isinstance(pattern, UnaryFormula):
            if type(pattern) is not type(target):
                return None
            assert isinstance(target, UnaryFormula)
            stack.append((pattern.operand, target.operand))

        elif isinstance(pattern, BinaryFormula):
            if type(pattern) is not type(target):
                return None
            assert isinstance(target, BinaryFormula)
            stack.append((pattern.right, target.right))
            stack.append((pattern.left, target.left))

        else:
            raise AssertionError(f"Unexpected pattern: {pattern!r}")

    return substitution


def _bad(step: int, reason: str) -> CheckReport:
    return CheckReport([Violation("BAD-STEP", (step,), reason)])


def _earlier(index: int, step: int) -> bool:
    return 1 <= index < step


def check_derivation(derivation: Derivation, system: System) -> CheckReport:
    """
    Check every step of ``derivation`` against the axioms and rules of ``system``.

    The report names the first bad step. Necessitation is accepted only on
    steps derived without hypotheses.
    """
    # categorical[k] is True if the step k + 1 does not depend on any hypothesis
    categorical = []  # type: List[bool]

    for number, step in enumerate(derivation.steps, start=1):
        formula = step.formula
        justification = step.justification

        if any(isinstance(sub, Meta) for sub in syntax.subformulas(formula)):
            return _bad(number, "A step must not contain metavariables")

        if isinstance(justification, ByAxiom):
            if justification.axiom not in system.axioms:
                return _bad(
                    number,
                    f"The axiom {justification.axiom} is not in {system.identifier}",
                )
            if match_schema(formula, SCHEMATA[justification.axiom]) is None:
                return _bad(
                    number,
                    f"{formula} is not an instance of {justification.axiom}",
                )
            categorical.append(True)

        elif isinstance(justification, ByHypothesis):
            if not 1 <= justification.index <= len(derivation.hypotheses):
                return _bad(
                    number, f"There is no hypothesis {justification.index}"
                )
            if derivation.hypotheses[justification.index - 1] != formula:
                return _bad(
                    number,
                    f"The hypothesis {justification.index} is "
                    f"{derivation.hypotheses[justification.index - 1]}, not {formula}",
                )
            categorical.append(False)

        elif isinstance(justification, ByModusPonens):
            if Rule.MP not in system.rules:
                return _bad(number, f"{system.identifier} has no modus ponens")
            if not (
                _earlier(justification.minor, number)
                and _earlier(justification.major, number)
            ):
                return _bad(number, "Modus ponens must refer to earlier steps")

            minor = derivation.steps[justification.minor - 1].formula
            major = derivation.steps[justification.major - 1].formula
            if not (
                isinstance(major, syntax.Imp)
                and major.left == minor
                and major.right == formula
            ):
                return _bad(
                    number,
                    f"{formula} does not follow by modus ponens "
                    f"from {minor} and {major}",
                )
            categorical.append(
                categorical[justification.minor - 1]
                and categorical[justification.major - 1]
            )

        elif isinstance(justification, ByAdjunction):
            if Rule.ADJ not in system.rules:
                return _bad(number, f"{system.identifier} has no adjunction")
            if not (
                _earlier(justification.left, number)
                and _earlier(justification.right, number)
            ):
                return _bad(number, "Adjunction must refer to earlier steps")

            left = derivation.steps[justification.left - 1].formula
            right = derivation.steps[justification.right - 1].formula
            if formula != syntax.Meet(left, right):
                return _bad(
                    number,
                    f"{formula} does not follow by adjunction from {left} and {right}",
                )
            categorical.append(
                categorical[justification.left - 1]
                and categorical[justification.right - 1]
            )

        elif isinstance(justification, ByNecessitation):
            if Rule.NEC not in system.rules:
                return _bad(number, f"{system.identifier} has no necessitation")
            if not _earlier(justification.premise, number):
                return _bad(number, "Necessitation must refer to an earlier step")

            premise = derivation.steps[justification.premise - 1].formula
            if formula != syntax.Bang(premise):
                return _bad(
                    number,
                    f"{formula} does not follow by necessitation from {premise}",
                )
            if not categorical[justification.premise - 1]:
                return _bad(
                    number,
                    "Necessitation applies only to steps derived without hypotheses",
                )
            categorical.append(True)

        else:
            assert_never(justification)

    return CheckReport([])


def unmatched_algebras(system: System, corpus: Sequence[FiniteAlgebra]) -> List[int]:
    """
    List the indices of the algebras outside the profile matching ``system``.

    Systems without a matching profile accept every algebra.
    """
    profile = MATCHING_PROFILE.get(system.identifier, None)
    if profile is None:
        return []

    return [
        i
        for i, algebra in enumerate(corpus)
        if missing_requirements(algebra, profile) is not None
        or not passes_profile(algebra, profile)
    ]


@require(
    lambda system, corpus: len(unmatched_algebras(system, corpus)) == 0,
    enabled=icontract.SLOW,
)
def soundness_scan(
    derivation: Derivation, system: System, corpus: Sequence[FiniteAlgebra]
) -> CheckReport:
    """
    Check that the conclusion is a semantic consequence of the hypotheses.

    Every algebra of ``corpus`` is tried; the witness is the index of the
    algebra in the corpus. The derivation itself is not re-checked against
    ``system``, which only restricts the corpus.
    """
    conclusion = derivation.conclusion()
    if conclusion is None:
        return CheckReport([])

    violations = []  # type: List[Violation]
    for i, algebra in enumerate(corpus):
        if not syntax.semantic_consequence(
            derivation.hypotheses, conclusion, algebra
        ):
            violations.append(
                Violation(
                    "UNSOUND",
                    (i,),
                    f"{conclusion} does not follow from the hypotheses "
                    f"in {algebra.name}",
                )
            )
    return CheckReport(violations)


# region Text format

_STEP_RE = re.compile(r"^step\s+(?P<number>\d+)\s*:\s*(?P<formula>.*)\s+by\s+(?P<why>.*)$")


def _parse_justification(text: str) -> Optional[AnyJustification]:
    parts = text.split()
    if len(parts) == 2 and parts[0] == "axiom":
        return ByAxiom(parts[1])

    if not all(part.isdigit() for part in parts[1:]):
        return None

    arguments = [int(part) for part in parts[1:]]
    if parts[0] == "hyp" and len(arguments) == 1:
        return ByHypothesis(arguments[0])
    if parts[0] == "mp" and len(arguments) == 2:
        return ByModusPonens(arguments[0], arguments[1])
    if parts[0] == "adj" and len(arguments) == 2:
        return ByAdjunction(arguments[0], arguments[1])
    if parts[0] == "nec" and len(arguments) == 1:
        return ByNecessitation(arguments[0])

    return None


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def parse_derivation(text: str) -> Tuple[Optional[Derivation], Optional[Error]]:
    """Parse a derivation in the line-oriented text format."""
    name = None  # type: Optional[str]
    system = None  # type: Optional[str]
    hypotheses = []  # type: List[Formula]
    steps = []  # type: List[Step]

    offset = 0
    for number, raw in enumerate(text.splitlines(keepends=True), start=1):
        line_offset = offset
        offset += len(raw.encode("utf-8"))

        line = raw.split("#", 1)[0].strip()
        if line == "":
            continue

        def fail(message: str) -> Error:
            return Error(
                "SYNTAX-ERROR", f"Line {number}: {message}", offset=line_offset
            )

        key = line.split()[0]
        rest = line[len(key) :].strip()

        if key == "derivation":
            if rest == "" or len(rest.split()) != 1:
                return None, fail("Expected 'derivation <name>'")
            name = rest

        elif key == "system":
            if rest not in SYSTEMS:
                return None, fail(f"Unknown system {rest!r}")
            system = rest

        elif key == "hyp":
            formula, error = syntax.parse_formula(rest)
            if error is not None:
                return None, fail(str(error))
            assert formula is not None
            hypotheses.append(formula)

        elif key == "step":
            match = _STEP_RE.match(line)
            if match is None:
                return None, fail(
                    "Expected 'step <k>: <formula> by <justification>'"
                )
            if int(match.group("number")) != len(steps) + 1:
                return None, fail(
                    f"Expected the step {len(steps) + 1}, "
                    f"got {match.group('number')}"
                )

            formula, error = syntax.parse_formula(match.group("formula"))
            if error is not None:
                return None, fail(str(error))
            assert formula is not None

            justification = _parse_justification(match.group("why"))
            if justification is None:
                return None, fail(f"Invalid justification {match.group('why')!r}")

            if isinstance(justification, ByAxiom) and (
                justification.axiom not in SCHEMATA
            ):
                return None, fail(f"Unknown axiom {justification.axiom!r}")

            steps.append(Step(formula, justification))

        else:
            return None, fail(f"Unknown key {key!r}")

    if name is None:
        return None, Error("SYNTAX-ERROR", "The derivation name is missing", offset=0)

    return Derivation(name, hypotheses, steps, system=system), None


def dump_derivation(derivation: Derivation) -> str:
    """Serialize ``derivation`` in the text format."""
    lines = [f"derivation {derivation.name}"]
    if derivation.system is not None:
        lines.append(f"system {derivation.system}")
    for hypothesis in derivation.hypotheses:
        lines.append(f"hyp {hypothesis}")
    for number, step in enumerate(derivation.steps, start=1):
        lines.append(f"step {number}: {step}")
    return "\n".join(lines) + "\n"


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def load_derivation(
    path: pathlib.Path,
) -> Tuple[Optional[Derivation], Optional[Error]]:
    """Read and parse the derivation stored at ``path``."""
    try:
        text = path.read_text(encoding="utf-8")
    except Exception as exception:
        return None, Error("INPUT-ERROR", f"Failed to load {path}: {exception}")

    return parse_derivation(text)


# endregion
