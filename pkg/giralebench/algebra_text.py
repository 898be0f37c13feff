"""Read and write algebras in the line-oriented text format."""

import pathlib
import re
from typing import Dict, List, Optional, Tuple

from icontract import ensure

from giralebench.algebra import (
    BINARY_TABLES,
    CONSTANTS,
    UNARY_TABLES,
    FiniteAlgebra,
)
from giralebench.common import Error

_LABEL_RE = re.compile(r"^[^\s#]+$")


class _Line:
    """Represent a non-empty line stripped of its comment."""

    def __init__(self, offset: int, number: int, tokens: List[str]) -> None:
        """Initialize with the given values."""
        self.offset = offset
        self.number = number
        self.tokens = tokens


def _tokenize(text: str) -> List[_Line]:
    lines = []  # type: List[_Line]
    offset = 0
    for number, raw in enumerate(text.splitlines(keepends=True), start=1):
        content = raw.split("#", 1)[0]
        tokens = content.split()
        if tokens:
            lines.append(_Line(offset=offset, number=number, tokens=tokens))
        offset += len(raw.encode("utf-8"))
    return lines


def _error(line: _Line, message: str) -> Error:
    return Error("SYNTAX-ERROR", f"Line {line.number}: {message}", offset=line.offset)


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def parse_algebra(text: str) -> Tuple[Optional[FiniteAlgebra], Optional[Error]]:
    """
    Parse an algebra from ``text``.

    >>> algebra, error = parse_algebra(
    ...     "algebra two\\nsize 2\\nelements b t\\n"
    ...     "table meet\\nb b\\nb t\\nconst one = t\\n"
    ... )
    >>> error is None
    True
    >>> algebra.meet, algebra.one
    (((0, 0), (0, 1)), 1)
    """
    lines = _tokenize(text)

    name = None  # type: Optional[str]
    size = None  # type: Optional[int]
    labels = None  # type: Optional[List[str]]
    binaries = dict()  # type: Dict[str, Tuple[Tuple[int, ...], ...]]
    unaries = dict()  # type: Dict[str, Tuple[int, ...]]
    constants = dict()  # type: Dict[str, int]

    def resolve(line: _Line, label: str) -> Tuple[Optional[int], Optional[Error]]:
        assert labels is not None
        try:
            return labels.index(label), None
        except ValueError:
            return None, _error(line, f"Unknown element {label!r}")

    i = 0
    while i < len(lines):
        line = lines[i]
        key = line.tokens[0]
        arguments = line.tokens[1:]

        if key == "algebra":
            if len(arguments) != 1:
                return None, _error(line, "Expected 'algebra <name>'")
            name = arguments[0]
            i += 1

        elif key == "size":
            if len(arguments) != 1 or not arguments[0].isdigit():
                return None, _error(line, "Expected 'size <n>'")
            size = int(arguments[0])
            if size < 1:
                return None, _error(line, "The size must be positive")
            i += 1

        elif key == "elements":
            if size is None:
                return None, _error(line, "The size must precede the elements")
            if len(arguments) != size:
                return None, _error(
                    line, f"Expected {size} element labels, got {len(arguments)}"
                )
            if len(set(arguments)) != len(arguments):
                return None, _error(line, "The element labels must be distinct")
            if not all(_LABEL_RE.match(label) for label in arguments):
                return None, _error(line, "Invalid element label")
            labels = list(arguments)
            i += 1

        elif key == "const":
            if labels is None:
                return None, _error(line, "The elements must precede the constants")
            if len(arguments) != 3 or arguments[1] != "=":
                return None, _error(line, "Expected 'const <name> = <label>'")
            if arguments[0] not in CONSTANTS:
                return None, _error(line, f"Unknown constant {arguments[0]!r}")
            if arguments[0] in constants:
                return None, _error(line, f"Duplicate constant {arguments[0]!r}")

            value, error = resolve(line, arguments[2])
            if error is not None:
                return None, error
            assert value is not None
            constants[arguments[0]] = value
            i += 1

        elif key == "table":
            if labels is None:
                return None, _error(line, "The elements must precede the tables")
            if len(arguments) != 1:
                return None, _error(line, "Expected 'table <name>'")

            table_name = arguments[0]
            if table_name in binaries or table_name in unaries:
                return None, _error(line, f"Duplicate table {table_name!r}")

            if table_name in BINARY_TABLES:
                row_count = len(labels)
            elif table_name in UNARY_TABLES:
                row_count = 1
            else:
                return None, _error(line, f"Unknown table {table_name!r}")

            rows = []  # type: List[Tuple[int, ...]]
            for row_line in lines[i + 1 : i + 1 + row_count]:
                if len(row_line.tokens) != len(labels):
                    return None, _error(
                        row_line,
                        f"Expected {len(labels)} entries in a row "
                        f"of the table {table_name}",
                    )
                row = []  # type: List[int]
                for label in row_line.tokens:
                    value, error = resolve(row_line, label)
                    if error is not None:
                        return None, error
                    assert value is not None
                    row.append(value)
                rows.append(tuple(row))

            if len(rows) != row_count:
                return None, _error(
                    line, f"Expected {row_count} rows for the table {table_name}"
                )

            if table_name in BINARY_TABLES:
                binaries[table_name] = tuple(rows)
            else:
                unaries[table_name] = rows[0]

            i += 1 + row_count

        else:
            return None, _error(line, f"Unknown key {key!r}")

    if name is None:
        return None, Error("SYNTAX-ERROR", "The algebra name is missing", offset=0)
    if size is None or labels is None:
        return None, Error("SYNTAX-ERROR", "The elements are missing", offset=0)

    return (
        FiniteAlgebra(
            name=name,
            size=size,
            element_names=labels,
            meet=binaries.get("meet", None),
            join=binaries.get("join", None),
            mult=binaries.get("mult", None),
            imp=binaries.get("imp", None),
            neg=unaries.get("neg", None),
            bang=unaries.get("bang", None),
            one=constants.get("one", None),
            zero=constants.get("zero", None),
            top=constants.get("top", None),
            bot=constants.get("bot", None),
        ),
        None,
    )


def dump_algebra(algebra: FiniteAlgebra) -> str:
    """Serialize ``algebra`` in the text format."""
    lines = [
        f"algebra {algebra.name}",
        f"size {algebra.size}",
        "elements " + " ".join(algebra.element_names),
    ]

    for name in CONSTANTS:
        value = algebra.constant(name)
        if value is not None:
            lines.append(f"const {name} = {algebra.label(value)}")

    for name in BINARY_TABLES:
        table = algebra.binary(name)
        if table is not None:
            lines.append(f"table {name}")
            for row in table:
                lines.append(" ".join(algebra.label(value) for value in row))

    for name in UNARY_TABLES:
        unary = algebra.unary(name)
        if unary is not None:
            lines.append(f"table {name}")
            lines.append(" ".join(algebra.label(value) for value in unary))

    return "\n".join(lines) + "\n"


@ensure(lambda result: (result[0] is not None) ^ (result[1] is not None))
def load_algebra(
    path: pathlib.Path,
) -> Tuple[Optional[FiniteAlgebra], Optional[Error]]:
    """Read and parse the algebra stored at ``path``."""
    try:
        text = path.read_text(encoding="utf-8")
    except Exception as exception:
        return None, Error("INPUT-ERROR", f"Failed to load {path}: {exception}")

    return parse_algebra(text)
