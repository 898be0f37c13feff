"""Render the results of checks and searches as text or JSON."""

import json
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

from giralebench.algebra import FiniteAlgebra
from giralebench.common import Error
from giralebench.profiles import CheckReport
from giralebench.search import SearchResult

Labeler = Callable[[int], str]

#: A JSON-serializable report
Document = Dict[str, Any]


def element_labeler(algebra: FiniteAlgebra) -> Labeler:
    """Label witnesses by the element names of ``algebra``."""
    return algebra.label


def number_labeler(start: int = 0) -> Labeler:
    """Label witnesses by numbers, e.g., steps of a derivation counted from 1."""
    return lambda value: str(value + start)


def check_document(
    report: CheckReport, labeler: Labeler, extra: Optional[Mapping[str, Any]] = None
) -> Document:
    """Convert the check report to a JSON-serializable document."""
    document = {
        "verdict": report.verdict,
        "violations": [
            {
                "condition": violation.condition,
                "witness": [labeler(value) for value in violation.witness],
                "message": violation.message,
            }
            for violation in report.violations
        ],
    }  # type: Document

    if report.failed_layer is not None:
        document["failed_layer"] = report.failed_layer

    if extra is not None:
        document.update(extra)

    return document


def render_check(report: CheckReport, labeler: Labeler) -> str:
    """Render the check report as text, one violation per line."""
    lines = [report.verdict]
    if report.failed_layer is not None:
        lines.append(f"failed layer: {report.failed_layer}")

    for violation in report.violations:
        witness = ", ".join(labeler(value) for value in violation.witness)
        line = f"  {violation.condition} at ({witness})"
        if violation.message:
            line += f": {violation.message}"
        lines.append(line)

    return "\n".join(lines) + "\n"


def subsets_document(algebra: FiniteAlgebra, subsets: Sequence[Sequence[int]]) -> List[List[str]]:
    """Label the members of every subset."""
    return [[algebra.label(a) for a in subset] for subset in subsets]


def render_subsets(algebra: FiniteAlgebra, subsets: Sequence[Sequence[int]]) -> str:
    """Render every subset on its own line in braces."""
    return "".join(
        "{" + ", ".join(algebra.label(a) for a in subset) + "}\n"
        for subset in subsets
    )


def search_document(result: SearchResult, show_time: bool = False) -> Document:
    """Convert the search result to a JSON-serializable document."""
    document = {
        "verdict": "fail" if result.counterexample is not None else "pass",
        "violations": [],
        "count": result.count,
        "exhausted": result.exhausted,
        "models": [model.name for model in result.models],
    }  # type: Document

    if result.counterexample is not None:
        assert result.assignment is not None
        counterexample = result.counterexample
        document["counterexample"] = counterexample.name
        document["assignment"] = {
            name: counterexample.label(value)
            for name, value in sorted(result.assignment.items())
        }

    if show_time:
        document["elapsed"] = round(result.elapsed, 3)

    return document


def render_search(result: SearchResult, show_time: bool = False) -> str:
    """Render the search result as text."""
    lines = [
        f"models: {result.count}",
        f"exhausted: {'yes' if result.exhausted else 'no'}",
    ]

    if result.counterexample is not None:
        assert result.assignment is not None
        counterexample = result.counterexample
        assignment = ", ".join(
            f"{name} = {counterexample.label(value)}"
            for name, value in sorted(result.assignment.items())
        )
        lines.append(f"counterexample: {counterexample.name} with {assignment}")

    if show_time:
        lines.append(f"elapsed: {result.elapsed:.3f} s")

    return "\n".join(lines) + "\n"


def error_document(error: Error) -> Document:
    """Convert the error to a JSON-serializable document."""
    document = {
        "verdict": "error",
        "code": error.code,
        "message": error.message,
        "witness": list(error.witness),
    }  # type: Document
    if error.offset is not None:
        document["offset"] = error.offset
    return document


def dump_json(document: Mapping[str, Any]) -> str:
    """Serialize the document deterministically."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
