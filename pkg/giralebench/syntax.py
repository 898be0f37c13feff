"""Parse, print and evaluate formulas and equations over finite algebras."""

import abc
import enum
import itertools
import re
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from icontract import require, ensure, DBC

from giralebench.algebra import FiniteAlgebra
from giralebench.common import Error, assert_never


class ConstantKind(enum.Enum):
    """Enumerate the logical constants by their surface symbol."""

    ONE = "1"
    ZERO = "0"
    TOP = "T"
    BOT = "F"


class Formula(DBC):
    """Represent an abstract formula of the linear logic signature."""

    @abc.abstractmethod
    def _key(self) -> Tuple[object, ...]:
        raise NotImplementedError()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Formula):
            return NotImplemented
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((type(self).__name__,) + self._key())

    def __str__(self) -> str:
        return print_formula(self)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({', '.join(map(repr, self._key()))})"


class Var(Formula):
    """Represent an object variable."""

    def __init__(self, name: str) -> None:
        """Initialize with the given values."""
        self.name = name

    def _key(self) -> Tuple[object, ...]:
        return (self.name,)


class Meta(Formula):
    """Represent a metavariable of an axiom schema, written ``$name``."""

    def __init__(self, name: str) -> None:
        """Initialize with the given values."""
        self.name = name

    def _key(self) -> Tuple[object, ...]:
        return (self.name,)


class Const(Formula):
    """Represent one of the constants 1, 0, ⊤ and ⊥."""

    def __init__(self, kind: ConstantKind) -> None:
        """Initialize with the given values."""
        self.kind = kind

    def _key(self) -> Tuple[object, ...]:
        return (self.kind,)


class UnaryFormula(Formula):
    """Represent a formula with a prefix connective."""

    #: Surface symbol of the connective
    symbol = ""

    def __init__(self, operand: Formula) -> None:
        """Initialize with the given values."""
        self.operand = operand

    def _key(self) -> Tuple[object, ...]:
        return (self.operand,)


class Neg(UnaryFormula):
    """Represent the linear negation ``~p``."""

    symbol = "~"


class Bang(UnaryFormula):
    """Represent the exponential ``!p``."""

    symbol = "!"


class Quest(UnaryFormula):
    """Represent the exponential ``?p``, defined as ``~!~p``."""

    symbol = "?"


class BinaryFormula(Formula):
    """Represent a formula with an infix connective."""

    #: Surface symbol of the connective
    symbol = ""

    def __init__(self, left: Formula, right: Formula) -> None:
        """Initialize with the given values."""
        self.left = left
        self.right = right

    def _key(self) -> Tuple[object, ...]:
        return (self.left, self.right)


class Mult(BinaryFormula):
    """Represent the multiplicative conjunction ``p * q``."""

    symbol = "*"


class Par(BinaryFormula):
    """Represent the multiplicative disjunction ``p + q``, defined as ``~p -> q``."""

    symbol = "+"


class Imp(BinaryFormula):
    """Represent the linear implication ``p -> q``."""

    symbol = "->"


class Meet(BinaryFormula):
    """Represent the additive conjunction ``p /\\ q``."""

    symbol = "/\\"


class Join(BinaryFormula):
    """Represent the additive disjunction ``p \\/ q``."""

    symbol = "\\/"


class Equation:
    """Represent an equation between two terms."""

    def __init__(self, lhs: Formula, rhs: Formula) -> None:
        """Initialize with the given values."""
        self.lhs = lhs
        self.rhs = rhs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Equation):
            return NotImplemented
        return self.lhs == other.lhs and self.rhs == other.rhs

    def __hash__(self) -> int:
        return hash((self.lhs, self.rhs))

    def __str__(self) -> str:
        return f"{print_formula(self.lhs)} = {print_formula(self.rhs)}"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.lhs!r}, {self.rhs!r})"


class Quasiequation:
    """Represent an implication from a conjunction of equations to an equation."""

    def __init__(self, premises: Sequence[Equation], conclusion: Equation) -> None:
        """Initialize with the given values."""
        self.premises = tuple(premises)
        self.conclusion = conclusion

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quasiequation):
            return NotImplemented
        return (self.premises, self.conclusion) == (other.premises, other.conclusion)

    def __hash__(self) -> int:
        return hash((self.premises, self.conclusion))

    def __str__(self) -> str:
        return (
            " & ".join(str(premise) for premise in self.premises)
            + f" => {self.conclusion}"
        )

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({list(self.premises)!r}, {self.conclusion!r})"
        )


Sentence = Union[Formula, Equation, Quasiequation]

Assignment = Mapping[str, int]

# region Printing

_PRECEDENCE = {
    Imp: 1,
    Join: 2,
    Meet: 3,
    Par: 4,
    Mult: 5,
}  # type: Dict[type, int]

_UNARY_PRECEDENCE = 6
_ATOM_PRECEDENCE = 7


def _precedence(formula: Formula) -> int:
    if isinstance(formula, BinaryFormula):
        return _PRECEDENCE[type(formula)]
    if isinstance(formula, UnaryFormula):
        return _UNARY_PRECEDENCE
    return _ATOM_PRECEDENCE


def print_formula(formula: Formula) -> str:
    """
    Render ``formula`` with the minimal number of parentheses.

    >>> print_formula(Imp(Var("p"), Imp(Var("q"), Mult(Var("p"), Var("q")))))
    'p -> q -> p * q'
    """
    if isinstance(formula, Var):
        return formula.name

    if isinstance(formula, Meta):
        return f"${formula.name}"

    if isinstance(formula, Const):
        return formula.kind.value

    if isinstance(formula, UnaryFormula):
        operand = print_formula(formula.operand)
        if _precedence(formula.operand) < _UNARY_PRECEDENCE:
            operand = f"({operand})"
        return f"{formula.symbol}{operand}"

    if isinstance(formula, BinaryFormula):
        mine = _precedence(formula)
        left = print_formula(formula.left)
        right = print_formula(formula.right)

        if isinstance(formula, Imp):
            # -> is right-associative
            left_parens = _precedence(formula.left) <= mine
            right_parens = _precedence(formula.right) < mine
        else:
            left_parens = _precedence(formula.left) < mine
            right_parens = _precedence(formula.right) <= mine

        if left_parens:
            left = f"({left})"
        if right_parens:
            right = f"({right})"

        return f"{left} {formula.symbol} {right}"

    raise AssertionError(f"Unexpected formula: {formula!r}")


# endregion

# region Parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<symbol>->|=>|/\\|\\/|[*+~!?()=&])"
    r"|(?P<meta>\$[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<digit>[01]))"
)


class _Token:
    def __init__(self, text: str, offset: int) -> None:
        self.text = text
        self.offset = offset


class _ParseFailure(Exception):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(message)
        self.message = message
        self.offset = offset


def _tokenize(text: str) -> List[_Token]:
    tokens = []  # type: List[_Token]
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break

        match = _TOKEN_RE.match(text, position)
        if match is None or match.end() == position:
            start = position + len(text[position:]) - len(text[position:].lstrip())
            raise _ParseFailure(f"Unexpected character {text[start]!r}", start)

        start = match.end() - len(match.group(0).lstrip())
        tokens.append(_Token(match.group(0).strip(), start))
        position = match.end()

    return tokens


class _Parser:
    """Parse by recursive descent; the precedences are encoded in the methods."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Optional[str]:
        if self.index < len(self.tokens):
            return self.tokens[self.index].text
        return None

    def offset(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index].offset
        return len(self.text)

    def fail(self, message: str) -> _ParseFailure:
        return _ParseFailure(message, self.offset())

    def expect(self, text: str) -> None:
        if self.peek() != text:
            found = self.peek()
            raise self.fail(
                f"Expected {text!r}, "
                + ("but reached the end" if found is None else f"got {found!r}")
            )
        self.index += 1

    def at_end(self) -> bool:
        return self.index == len(self.tokens)

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.index += 1
            return Imp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        result = self.conjunction()
        while self.peek() == "\\/":
            self.index += 1
            result = Join(result, self.conjunction())
        return result

    def conjunction(self) -> Formula:
        result = self.par()
        while self.peek() == "/\\":
            self.index += 1
            result = Meet(result, self.par())
        return result

    def par(self) -> Formula:
        result = self.product()
        while self.peek() == "+":
            self.index += 1
            result = Par(result, self.product())
        return result

    def product(self) -> Formula:
        result = self.unary()
        while self.peek() == "*":
            self.index += 1
            result = Mult(result, self.unary())
        return result

    def unary(self) -> Formula:
        token = self.peek()
        if token == "~":
            self.index += 1
            return Neg(self.unary())
        if token == "!":
            self.index += 1
            return Bang(self.unary())
        if token == "?":
            self.index += 1
            return Quest(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        token = self.peek()
        if token is None:
            raise self.fail("Expected a formula, but reached the end")

        if token == "(":
            self.index += 1
            result = self.formula()
            self.expect(")")
            return result

        for kind in ConstantKind:
            if token == kind.value:
                self.index += 1
                return Const(kind)

        if token.startswith("$"):
            self.index += 1
            return Meta(token[1:])

        if re.match(r"^[A-Za-z_]", token):
            self.index += 1
            return Var(token)

        raise self.fail(f"Expected a formula, got {token!r}")

    def equation(self) -> Equation:
        lhs = self.formula()
        self.expect("=")
        rhs = self.formula()
        return Equation(lhs, rhs)

    def quasiequation(self) -> Quasiequation:
        premises = [self.equation()]
        while self.peek() == "&":
            self.index += 1
            premises.append(self.equation())
        self.expect("=>")
        conclusion = self.equation()
        return Quasiequation(premises, conclusion)


def _to_error(text: str, failure: _ParseFailure) -> Error:
    return Error(
        "SYNTAX-ERROR",
        failure.message,
        offset=len(text[: failure.offset].encode("utf-8")),
    )


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def parse_formula(text: str) -> Tuple[Optional[Formula], Optional[Error]]:
    """
    Parse a formula.

    >>> formula, _ = parse_formula("~p -> q")
    >>> formula
    Imp(Neg(Var('p')), Var('q'))
    """
    try:
        parser = _Parser(text)
        result = parser.formula()
        if not parser.at_end():
            raise parser.fail(f"Unexpected {parser.peek()!r}")
    except _ParseFailure as failure:
        return None, _to_error(text, failure)

    return result, None


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def parse_equation(text: str) -> Tuple[Optional[Equation], Optional[Error]]:
    """Parse an equation ``formula = formula``."""
    try:
        parser = _Parser(text)
        result = parser.equation()
        if not parser.at_end():
            raise parser.fail(f"Unexpected {parser.peek()!r}")
    except _ParseFailure as failure:
        return None, _to_error(text, failure)

    return result, None


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def parse_quasiequation(
    text: str,
) -> Tuple[Optional[Quasiequation], Optional[Error]]:
    """Parse a quasiequation ``equation & … & equation => equation``."""
    try:
        parser = _Parser(text)
        result = parser.quasiequation()
        if not parser.at_end():
            raise parser.fail(f"Unexpected {parser.peek()!r}")
    except _ParseFailure as failure:
        return None, _to_error(text, failure)

    return result, None


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def parse_sentence(text: str) -> Tuple[Optional[Sentence], Optional[Error]]:
    """Parse a quasiequation, an equation or a formula, whichever fits."""
    if "=>" in text:
        return parse_quasiequation(text)

    if "=" in text:
        return parse_equation(text)

    return parse_formula(text)


# endregion

# region Structure


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Iterate over ``formula`` and all its subformulas in pre-order."""
    yield formula
    if isinstance(formula, UnaryFormula):
        yield from subformulas(formula.operand)
    elif isinstance(formula, BinaryFormula):
        yield from subformulas(formula.left)
        yield from subformulas(formula.right)


def _formulas_of(sentence: Sentence) -> List[Formula]:
    if isinstance(sentence, Formula):
        return [sentence]
    if isinstance(sentence, Equation):
        return [sentence.lhs, sentence.rhs]
    if isinstance(sentence, Quasiequation):
        result = []  # type: List[Formula]
        for equation in sentence.premises + (sentence.conclusion,):
            result.extend([equation.lhs, equation.rhs])
        return result

    assert_never(sentence)
    raise AssertionError("Unreachable")


def variables(sentence: Sentence) -> List[str]:
    """List the object variables of ``sentence`` in lexicographic order."""
    names = set()  # type: Set[str]
    for formula in _formulas_of(sentence):
        for sub in subformulas(formula):
            if isinstance(sub, Var):
                names.add(sub.name)
    return sorted(names)


def connectives(formula: Formula) -> FrozenSet[str]:
    """Collect the names of the connectives and constants occurring in ``formula``."""
    result = set()  # type: Set[str]
    for sub in subformulas(formula):
        if isinstance(sub, Const):
            result.add(sub.kind.name.lower())
        elif isinstance(sub, (UnaryFormula, BinaryFormula)):
            result.add(type(sub).__name__.lower())
    return frozenset(result)


def expand_defined(formula: Formula) -> Formula:
    """
    Rewrite the defined connectives: ``p + q`` to ``~p -> q``, ``?p`` to ``~!~p``.

    >>> print_formula(expand_defined(Quest(Const(ConstantKind.ONE))))
    '~!~1'
    """
    if isinstance(formula, (Var, Meta, Const)):
        return formula

    if isinstance(formula, Quest):
        return Neg(Bang(Neg(expand_defined(formula.operand))))

    if isinstance(formula, UnaryFormula):
        return type(formula)(expand_defined(formula.operand))

    if isinstance(formula, Par):
        return Imp(Neg(expand_defined(formula.left)), expand_defined(formula.right))

    if isinstance(formula, BinaryFormula):
        return type(formula)(
            expand_defined(formula.left), expand_defined(formula.right)
        )

    raise AssertionError(f"Unexpected formula: {formula!r}")


def substitute(formula: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Replace the metavariables by the formulas of ``mapping``."""
    if isinstance(formula, Meta):
        return mapping.get(formula.name, formula)

    if isinstance(formula, (Var, Const)):
        return formula

    if isinstance(formula, UnaryFormula):
        return type(formula)(substitute(formula.operand, mapping))

    if isinstance(formula, BinaryFormula):
        return type(formula)(
            substitute(formula.left, mapping), substitute(formula.right, mapping)
        )

    raise AssertionError(f"Unexpected formula: {formula!r}")


def rename_variables(formula: Formula, mapping: Mapping[str, str]) -> Formula:
    """Rename the object variables according to ``mapping``."""
    if isinstance(formula, Var):
        return Var(mapping.get(formula.name, formula.name))

    if isinstance(formula, (Meta, Const)):
        return formula

    if isinstance(formula, UnaryFormula):
        return type(formula)(rename_variables(formula.operand, mapping))

    if isinstance(formula, BinaryFormula):
        return type(formula)(
            rename_variables(formula.left, mapping),
            rename_variables(formula.right, mapping),
        )

    raise AssertionError(f"Unexpected formula: {formula!r}")


def metas_to_variables(formula: Formula) -> Formula:
    """Read every metavariable ``$p`` as the object variable ``p``."""
    names = {
        sub.name for sub in subformulas(formula) if isinstance(sub, Meta)
    }  # type: Set[str]
    return substitute(formula, {name: Var(name) for name in names})


def tau(formula: Formula) -> Equation:
    """
    Translate a formula into its defining equation ``f /\\ 1 = 1``.

    >>> str(tau(Var("p")))
    'p /\\\\ 1 = 1'
    """
    return Equation(Meet(formula, Const(ConstantKind.ONE)), Const(ConstantKind.ONE))


def rho(equation: Equation) -> Tuple[Formula, Formula]:
    """Translate an equation into the pair ``(lhs -> rhs, rhs -> lhs)``."""
    return Imp(equation.lhs, equation.rhs), Imp(equation.rhs, equation.lhs)


# endregion

# region Evaluation

_CONSTANT_NAMES = {
    ConstantKind.ONE: "one",
    ConstantKind.ZERO: "zero",
    ConstantKind.TOP: "top",
    ConstantKind.BOT: "bot",
}

_BINARY_TABLE_NAMES = {
    Mult: "mult",
    Imp: "imp",
    Meet: "meet",
    Join: "join",
}  # type: Dict[type, str]


def _missing_in(formula: Formula, algebra: FiniteAlgebra) -> Optional[Error]:
    for sub in subformulas(expand_defined(formula)):
        if isinstance(sub, Meta):
            return Error(
                "UNBOUND-VARIABLE",
                f"The metavariable ${sub.name} can not be evaluated",
            )

        if isinstance(sub, Const):
            name = _CONSTANT_NAMES[sub.kind]
            if algebra.constant(name) is None:
                return Error(
                    "MISSING-CONSTANT", f"The algebra {algebra.name} lacks {name}"
                )

        elif isinstance(sub, Neg):
            if algebra.neg is None and (algebra.imp is None or algebra.zero is None):
                return Error(
                    "MISSING-TABLE",
                    f"The algebra {algebra.name} lacks neg (and imp with zero)",
                )

        elif isinstance(sub, Bang):
            if algebra.bang is None:
                return Error("MISSING-TABLE", f"The algebra {algebra.name} lacks bang")

        elif isinstance(sub, BinaryFormula):
            name = _BINARY_TABLE_NAMES[type(sub)]
            if algebra.binary(name) is None:
                return Error(
                    "MISSING-TABLE", f"The algebra {algebra.name} lacks {name}"
                )

    return None


def missing_for_formula(
    sentence: Sentence,
    algebra: FiniteAlgebra,
    assignment: Optional[Assignment] = None,
    designation: bool = False,
) -> Optional[Error]:
    """
    Report what prevents evaluating ``sentence`` in ``algebra``, if anything.

    With ``assignment`` given, every variable must be bound. With ``designation``
    set, the order and the constant one are required as well.
    """
    for formula in _formulas_of(sentence):
        error = _missing_in(formula, algebra)
        if error is not None:
            return error

    if assignment is not None:
        for name in variables(sentence):
            if name not in assignment:
                return Error(
                    "UNBOUND-VARIABLE", f"The variable {name} is not assigned"
                )
            if not 0 <= assignment[name] < algebra.size:
                return Error(
                    "UNBOUND-VARIABLE",
                    f"The variable {name} is assigned outside of the carrier",
                )

    if designation:
        if algebra.meet is None:
            return Error("MISSING-TABLE", f"The algebra {algebra.name} lacks meet")
        if algebra.one is None:
            return Error("MISSING-CONSTANT", f"The algebra {algebra.name} lacks one")

    return None


Compiled = Callable[[Sequence[int]], int]


def _compile(
    formula: Formula, algebra: FiniteAlgebra, slots: Mapping[str, int]
) -> Compiled:
    """Turn ``formula`` into a function of the values of the variable slots."""
    if isinstance(formula, Var):
        slot = slots[formula.name]
        return lambda values: values[slot]

    if isinstance(formula, Const):
        value = algebra.constant(_CONSTANT_NAMES[formula.kind])
        assert value is not None
        return lambda values: value

    if isinstance(formula, Neg):
        operand = _compile(formula.operand, algebra, slots)
        if algebra.neg is not None:
            neg = algebra.neg
            return lambda values: neg[operand(values)]

        imp = algebra.imp
        zero = algebra.zero
        assert imp is not None and zero is not None
        return lambda values: imp[operand(values)][zero]

    if isinstance(formula, Bang):
        operand = _compile(formula.operand, algebra, slots)
        bang = algebra.bang
        assert bang is not None
        return lambda values: bang[operand(values)]

    if isinstance(formula, BinaryFormula):
        table = algebra.binary(_BINARY_TABLE_NAMES[type(formula)])
        assert table is not None
        left = _compile(formula.left, algebra, slots)
        right = _compile(formula.right, algebra, slots)
        return lambda values: table[left(values)][right(values)]

    raise AssertionError(f"Unexpected formula after expansion: {formula!r}")


def compile_formula(
    formula: Formula, algebra: FiniteAlgebra, names: Sequence[str]
) -> Compiled:
    """Compile ``formula`` so it evaluates the variables ``names`` positionally."""
    slots = {name: i for i, name in enumerate(names)}
    return _compile(expand_defined(formula), algebra, slots)


@require(
    lambda formula, algebra, assignment: missing_for_formula(
        formula, algebra, assignment
    )
    is None
)
def evaluate(formula: Formula, algebra: FiniteAlgebra, assignment: Assignment) -> int:
    """Evaluate ``formula`` in ``algebra`` under ``assignment``."""
    names = variables(formula)
    compiled = compile_formula(formula, algebra, names)
    return compiled([assignment[name] for name in names])


@require(
    lambda formula, algebra, assignment: missing_for_formula(
        formula, algebra, assignment, designation=True
    )
    is None
)
def designated(formula: Formula, algebra: FiniteAlgebra, assignment: Assignment) -> bool:
    """Check that the value of ``formula`` lies above 1."""
    assert algebra.one is not None
    return algebra.leq(algebra.one, evaluate(formula, algebra, assignment))


def assignments(names: Sequence[str], size: int) -> Iterator[Tuple[int, ...]]:
    """Enumerate the values of ``names`` in lexicographic order."""
    return itertools.product(range(size), repeat=len(names))


class _Holds:
    """Decide a sentence under an assignment of positional variable values."""

    def __init__(
        self, sentence: Sentence, algebra: FiniteAlgebra, names: Sequence[str]
    ) -> None:
        self.checks = []  # type: List[Callable[[Sequence[int]], bool]]
        self.premises = []  # type: List[Callable[[Sequence[int]], bool]]

        if isinstance(sentence, Formula):
            compiled = compile_formula(sentence, algebra, names)
            one = algebra.one
            meet = algebra.meet
            assert one is not None and meet is not None
            self.checks.append(lambda values: meet[one][compiled(values)] == one)

        elif isinstance(sentence, Equation):
            self.checks.append(_equation_check(sentence, algebra, names))

        elif isinstance(sentence, Quasiequation):
            self.premises = [
                _equation_check(premise, algebra, names)
                for premise in sentence.premises
            ]
            self.checks.append(_equation_check(sentence.conclusion, algebra, names))

        else:
            assert_never(sentence)

    def __call__(self, values: Sequence[int]) -> bool:
        if not all(premise(values) for premise in self.premises):
            return True
        return all(check(values) for check in self.checks)


def _equation_check(
    equation: Equation, algebra: FiniteAlgebra, names: Sequence[str]
) -> Callable[[Sequence[int]], bool]:
    lhs = compile_formula(equation.lhs, algebra, names)
    rhs = compile_formula(equation.rhs, algebra, names)
    return lambda values: lhs(values) == rhs(values)


@require(
    lambda sentence, algebra: missing_for_formula(
        sentence, algebra, designation=isinstance(sentence, Formula)
    )
    is None
)
def find_falsifying(
    sentence: Sentence, algebra: FiniteAlgebra
) -> Optional[Dict[str, int]]:
    """
    Find the first assignment falsifying ``sentence``, if any.

    A formula is falsified when its value is not designated.
    """
    names = variables(sentence)
    holds = _Holds(sentence, algebra, names)
    for values in assignments(names, algebra.size):
        if not holds(values):
            return dict(zip(names, values))
    return None


@require(
    lambda formula, algebra: missing_for_formula(formula, algebra, designation=True)
    is None
)
def validates(algebra: FiniteAlgebra, formula: Formula) -> bool:
    """Check that ``formula`` is designated under every assignment."""
    return find_falsifying(formula, algebra) is None


@require(lambda algebra, sentence: missing_for_formula(sentence, algebra) is None)
def satisfies(algebra: FiniteAlgebra, sentence: Union[Equation, Quasiequation]) -> bool:
    """Check that the equation or quasiequation holds under every assignment."""
    return find_falsifying(sentence, algebra) is None


@require(
    lambda premises, conclusion, algebra: all(
        missing_for_formula(formula, algebra, designation=True) is None
        for formula in list(premises) + [conclusion]
    )
)
def semantic_consequence(
    premises: Sequence[Formula], conclusion: Formula, algebra: FiniteAlgebra
) -> bool:
    """Check that ``conclusion`` is designated whenever all the premises are."""
    names = sorted(
        set(variables(conclusion)).union(
            *(variables(premise) for premise in premises)
        )
    )
    one = algebra.one
    meet = algebra.meet
    assert one is not None and meet is not None

    compiled_premises = [compile_formula(premise, algebra, names) for premise in premises]
    compiled_conclusion = compile_formula(conclusion, algebra, names)

    for values in assignments(names, algebra.size):
        if all(meet[one][premise(values)] == one for premise in compiled_premises):
            if meet[one][compiled_conclusion(values)] != one:
                return False
    return True


# endregion
