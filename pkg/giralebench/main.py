"""Check finite models of Linear Logic algebras."""

import argparse
import contextlib
import pathlib
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import giralebench
from giralebench import (
    algebra_text,
    congruence,
    constructions,
    hilbert,
    profiles,
    report,
    search,
    syntax,
)
from giralebench.algebra import FiniteAlgebra, reduct, with_derived_tables
from giralebench.common import Error
from giralebench.profiles import CheckReport, Profile, Violation

assert giralebench.__doc__ == __doc__

#: Exit code of a passed check or of a successful command
EXIT_PASS = 0

#: Exit code of a failed check or of a found counterexample
EXIT_FAIL = 1

#: Exit code of a usage or input error
EXIT_ERROR = 2


class _Output:
    """Bundle the output streams and the rendering options."""

    def __init__(
        self, stdout: TextIO, stderr: TextIO, as_json: bool, verbose: bool
    ) -> None:
        """Initialize with the given values."""
        self.stdout = stdout
        self.stderr = stderr
        self.as_json = as_json
        self.verbose = verbose

    def write(self, text: str) -> None:
        self.stdout.write(text)

    def progress(self, message: str) -> None:
        if self.verbose:
            print(message, file=self.stderr)

    def fail(self, error: Error) -> int:
        print(str(error), file=self.stderr)
        if self.as_json:
            self.write(report.dump_json(report.error_document(error)))
        return EXIT_ERROR

    def check(
        self,
        check_report: CheckReport,
        labeler: report.Labeler,
        extra: Optional[Dict[str, object]] = None,
    ) -> int:
        if self.as_json:
            self.write(
                report.dump_json(report.check_document(check_report, labeler, extra))
            )
        else:
            self.write(report.render_check(check_report, labeler))
        return EXIT_PASS if check_report.passed else EXIT_FAIL


def _read_text(path: str, stdin: TextIO) -> Tuple[Optional[str], Optional[Error]]:
    if path == "-":
        return stdin.read(), None
    try:
        return pathlib.Path(path).read_text(encoding="utf-8"), None
    except Exception as exception:
        return None, Error("INPUT-ERROR", f"Failed to read {path}: {exception}")


def _load_algebra(
    path: str, stdin: TextIO
) -> Tuple[Optional[FiniteAlgebra], Optional[Error]]:
    if path != "-":
        return algebra_text.load_algebra(pathlib.Path(path))

    text, error = _read_text(path, stdin)
    if error is not None:
        return None, error
    assert text is not None
    return algebra_text.parse_algebra(text)


def _missing_tables(
    algebra: FiniteAlgebra, names: Sequence[str]
) -> Optional[Error]:
    signature = algebra.signature()
    for name in names:
        if name not in signature:
            code = "MISSING-CONSTANT" if name in ("one", "zero", "top", "bot") else (
                "MISSING-TABLE"
            )
            return Error(code, f"The algebra {algebra.name} lacks {name}")
    return None


def _profile_gate(algebra: FiniteAlgebra, profile: Profile) -> Optional[CheckReport]:
    """Return the failing report if the algebra does not pass ``profile``."""
    check_report = profiles.check_profile(algebra, profile)
    return None if check_report.passed else check_report


def _parse_subset(
    algebra: FiniteAlgebra, text: str
) -> Tuple[Optional[List[int]], Optional[Error]]:
    result = []  # type: List[int]
    for label in text.split(","):
        label = label.strip()
        if label == "":
            continue
        index = algebra.index_of(label)
        if index is None:
            return None, Error("INPUT-ERROR", f"Unknown element {label!r}")
        result.append(index)
    return result, None


# region Commands


def _run_check(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    profile = Profile(args.profile)
    error = profiles.missing_requirements(algebra, profile)
    if error is not None:
        return out.fail(error)

    out.progress(f"Checking {algebra.name} against the profile {profile.value}")
    return out.check(
        profiles.check_profile(algebra, profile),
        report.element_labeler(algebra),
        {"profile": profile.value, "algebra": algebra.name},
    )


def _run_gen(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    if args.n < 1:
        return out.fail(Error("INPUT-ERROR", f"Expected n ≥ 1, got {args.n}"))
    out.write(
        algebra_text.dump_algebra(
            constructions.gen_gn(args.n, amend_neg=not args.verbatim_neg)
        )
    )
    return EXIT_PASS


def _run_eval(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    sentence, error = syntax.parse_sentence(args.expression)
    if error is not None:
        return out.fail(error)
    assert sentence is not None

    is_formula = isinstance(sentence, syntax.Formula)
    error = syntax.missing_for_formula(sentence, algebra, designation=is_formula)
    if error is not None:
        return out.fail(error)

    names = syntax.variables(sentence)

    if args.all:
        if not isinstance(sentence, syntax.Formula):
            return out.fail(
                Error("INPUT-ERROR", "Only formulas can be tabulated with --all")
            )
        compiled = syntax.compile_formula(sentence, algebra, names)
        rows = []  # type: List[Dict[str, object]]
        lines = []  # type: List[str]
        for values in syntax.assignments(names, algebra.size):
            value = compiled(values)
            assert algebra.one is not None
            is_designated = algebra.leq(algebra.one, value)
            rows.append(
                {
                    "assignment": {
                        name: algebra.label(v) for name, v in zip(names, values)
                    },
                    "value": algebra.label(value),
                    "designated": is_designated,
                }
            )
            bound = " ".join(
                f"{name}={algebra.label(v)}" for name, v in zip(names, values)
            )
            lines.append(
                f"{bound}{': ' if bound else ''}{algebra.label(value)}"
                f"{'' if is_designated else ' (not designated)'}"
            )

        if out.as_json:
            out.write(
                report.dump_json(
                    {"verdict": "pass", "violations": [], "values": rows}
                )
            )
        else:
            out.write("".join(line + "\n" for line in lines))
        return EXIT_PASS

    falsifying = syntax.find_falsifying(sentence, algebra)
    violations = []  # type: List[Violation]
    if falsifying is not None:
        violations.append(
            Violation(
                "FALSIFIED",
                tuple(falsifying[name] for name in names),
                ", ".join(names),
            )
        )
    return out.check(
        CheckReport(violations),
        report.element_labeler(algebra),
        {"expression": str(sentence), "variables": names},
    )


def _run_derive(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    text, error = _read_text(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert text is not None

    derivation, error = hilbert.parse_derivation(text)
    if error is not None:
        return out.fail(error)
    assert derivation is not None

    system_id = args.system if args.system is not None else derivation.system
    if system_id is None:
        return out.fail(
            Error("INPUT-ERROR", "The system is neither given nor stated in the file")
        )
    if system_id not in hilbert.SYSTEMS:
        return out.fail(Error("INPUT-ERROR", f"Unknown system {system_id!r}"))

    check_report = hilbert.check_derivation(derivation, hilbert.SYSTEMS[system_id])
    if not check_report.passed or not args.corpus:
        return out.check(
            check_report, report.number_labeler(), {"system": system_id}
        )

    conclusion = derivation.conclusion()
    formulas = list(derivation.hypotheses)
    if conclusion is not None:
        formulas.append(conclusion)

    corpus = []  # type: List[FiniteAlgebra]
    for path in args.corpus:
        algebra, error = _load_algebra(path, stdin)
        if error is not None:
            return out.fail(error)
        assert algebra is not None

        for formula in formulas:
            error = syntax.missing_for_formula(formula, algebra, designation=True)
            if error is not None:
                return out.fail(error)
        corpus.append(algebra)

    system = hilbert.SYSTEMS[system_id]
    unmatched = hilbert.unmatched_algebras(system, corpus)
    if len(unmatched) > 0:
        profile = hilbert.MATCHING_PROFILE[system_id]
        return out.fail(
            Error(
                "PROFILE-FAIL",
                f"The algebra {corpus[unmatched[0]].name} does not pass "
                f"the profile {profile.value} matching {system_id}",
            )
        )

    out.progress(f"Scanning {len(corpus)} algebra(s) for soundness")
    return out.check(
        hilbert.soundness_scan(derivation, system, corpus),
        lambda i: corpus[i].name,
        {"system": system_id},
    )


def _run_filters(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    error = _missing_tables(algebra, ["meet", "imp", "one"])
    if error is not None:
        return out.fail(error)

    filters, error = congruence.all_filters(algebra, size_limit=args.size_limit)
    if error is not None:
        return out.fail(error)
    assert filters is not None

    subsets = [f.sorted_members() for f in filters.elements]
    if out.as_json:
        out.write(
            report.dump_json(
                {
                    "verdict": "pass",
                    "violations": [],
                    "count": len(subsets),
                    "filters": report.subsets_document(algebra, subsets),
                }
            )
        )
    else:
        out.write(report.render_subsets(algebra, subsets))
    return EXIT_PASS


def _run_con(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    error = _missing_tables(algebra, ["meet", "imp", "one"])
    if error is not None:
        return out.fail(error)

    congruences, error = congruence.all_congruences(
        algebra, size_limit=args.size_limit
    )
    if error is not None:
        return out.fail(error)
    assert congruences is not None

    check_report = congruence.check_con_fil_iso(algebra, size_limit=args.size_limit)
    blocks = [
        [[algebra.label(a) for a in block] for block in c.blocks()]
        for c in congruences.elements
    ]

    if out.as_json:
        return out.check(
            check_report,
            report.element_labeler(algebra),
            {"count": len(blocks), "congruences": blocks},
        )

    for rendered in blocks:
        out.write(" | ".join(" ".join(block) for block in rendered) + "\n")
    return out.check(check_report, report.element_labeler(algebra))


def _run_edpc(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    error = _missing_tables(algebra, ["meet", "imp", "one", "bang"])
    if error is not None:
        return out.fail(error)

    return out.check(congruence.edpc_check(algebra), report.element_labeler(algebra))


def _run_heyt(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    error = _missing_tables(algebra, ["meet", "join", "imp", "bang", "one"])
    if error is not None:
        return out.fail(error)

    heyting, error = constructions.heyt(algebra)
    if error is not None:
        return out.check(
            CheckReport([Violation(error.code, error.witness, error.message)]),
            report.element_labeler(algebra),
        )
    assert heyting is not None

    if args.check:
        check_report = constructions.heyt_con_iso(algebra)
        return out.check(
            check_report,
            report.element_labeler(algebra),
            {"boolean": constructions.boolean_girale_check(algebra)},
        )

    out.write(algebra_text.dump_algebra(heyting))
    return EXIT_PASS


def _run_complete(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    if args.kind == "frame":
        error = _missing_tables(algebra, ["meet", "imp", "one"])
        if error is not None:
            return out.fail(error)

        size_limit = (
            args.size_limit
            if args.size_limit is not None
            else constructions.FRAME_SIZE_LIMIT
        )
        if algebra.size <= size_limit:
            gate = _profile_gate(reduct(algebra, ["meet", "imp", "one"]), Profile.V_L7)
            if gate is not None:
                return out.check(gate, report.element_labeler(algebra))
        completion, error = constructions.frame_completion(algebra, size_limit)

    elif args.kind == "phase":
        algebra = with_derived_tables(algebra)
        error = profiles.missing_requirements(algebra, Profile.GIRARD)
        if error is not None:
            return out.fail(error)
        error = _missing_tables(algebra, ["imp"])
        if error is not None:
            return out.fail(error)

        size_limit = (
            args.size_limit
            if args.size_limit is not None
            else constructions.PHASE_SIZE_LIMIT
        )
        if algebra.size <= size_limit:
            gate = _profile_gate(algebra, Profile.GIRARD)
            if gate is not None:
                return out.check(gate, report.element_labeler(algebra))
        completion, error = constructions.phase_completion(algebra, size_limit)

    else:
        raise AssertionError(f"Unexpected completion: {args.kind}")

    if error is not None:
        return out.fail(error)
    assert completion is not None

    out.progress(
        f"The completion of {algebra.name} has {completion.algebra.size} elements"
    )
    out.write(algebra_text.dump_algebra(completion.algebra))
    return EXIT_PASS


def _run_conservativity(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    algebra = with_derived_tables(algebra)
    error = profiles.missing_requirements(algebra, Profile.GIRARD) or _missing_tables(
        algebra, ["imp"]
    )
    if error is not None:
        return out.fail(error)

    gate = _profile_gate(algebra, Profile.GIRARD)
    if gate is not None:
        return out.check(gate, report.element_labeler(algebra))

    size_limit = (
        args.size_limit
        if args.size_limit is not None
        else constructions.PHASE_SIZE_LIMIT
    )
    return out.check(
        constructions.conservativity_check(algebra, size_limit),
        report.element_labeler(algebra),
    )


def _run_induce(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    error = _missing_tables(algebra, ["meet", "mult", "one"])
    if error is not None:
        return out.fail(error)

    if args.subset is None:
        subsets = constructions.rc_heyting_subsets(algebra)
        if out.as_json:
            out.write(
                report.dump_json(
                    {
                        "verdict": "pass",
                        "violations": [],
                        "count": len(subsets),
                        "subsets": report.subsets_document(
                            algebra, [sorted(subset) for subset in subsets]
                        ),
                    }
                )
            )
        else:
            out.write(
                report.render_subsets(algebra, [sorted(subset) for subset in subsets])
            )
        return EXIT_PASS

    subset, error = _parse_subset(algebra, args.subset)
    if error is not None:
        return out.fail(error)
    assert subset is not None

    induced, error = constructions.induce_modality(algebra, subset)
    if error is not None:
        return out.check(
            CheckReport([Violation(error.code, error.witness, error.message)]),
            report.element_labeler(algebra),
        )
    assert induced is not None

    out.write(algebra_text.dump_algebra(induced))
    return EXIT_PASS


def _run_search(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    profile = Profile(args.profile)

    goal = None  # type: Optional[syntax.Sentence]
    if args.falsify is not None:
        goal, error = syntax.parse_sentence(args.falsify)
        if error is not None:
            return out.fail(error)

    if args.size < 1 or args.min_size < 1 or args.min_size > args.size:
        return out.fail(
            Error("INPUT-ERROR", "Expected 1 ≤ --min-size ≤ --size")
        )

    spec = search.SearchSpec(
        profile, max_size=args.size, min_size=args.min_size, goal=goal, limit=args.limit
    )

    out.progress(
        f"Enumerating {profile.value} models of sizes {args.min_size} to {args.size}"
    )
    if goal is not None:
        result, error = search.find_countermodel(spec)
    else:
        result, error = search.enumerate_models(spec)

    if error is not None:
        return out.fail(error)
    assert result is not None

    if out.as_json:
        out.write(report.dump_json(report.search_document(result, args.show_time)))
    else:
        out.write(report.render_search(result, args.show_time))

    if args.dump:
        for model in result.models:
            out.write("\n" + algebra_text.dump_algebra(model))

    return EXIT_FAIL if result.counterexample is not None else EXIT_PASS


def _run_translate(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    if args.tau is not None:
        formula, error = syntax.parse_formula(args.tau)
        if error is not None:
            return out.fail(error)
        assert formula is not None
        out.write(f"{syntax.tau(formula)}\n")
        return EXIT_PASS

    equation, error = syntax.parse_equation(args.rho)
    if error is not None:
        return out.fail(error)
    assert equation is not None
    forward, backward = syntax.rho(equation)
    out.write(f"{forward}\n{backward}\n")
    return EXIT_PASS


def _run_repair(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    if args.n < 1:
        return out.fail(Error("INPUT-ERROR", f"Expected n ≥ 1, got {args.n}"))

    base = constructions.gen_gn(args.n)

    def resolve(label: str) -> Optional[int]:
        return base.index_of(label)

    free_mult = []  # type: List[Tuple[int, int]]
    for row in args.free_row:
        a = resolve(row)
        if a is None:
            return out.fail(Error("INPUT-ERROR", f"Unknown element {row!r}"))
        free_mult.extend((a, b) for b in range(base.size))

    for cell in args.free_cell:
        parts = cell.split(",")
        indices = [resolve(part.strip()) for part in parts]
        if len(parts) != 2 or any(index is None for index in indices):
            return out.fail(Error("INPUT-ERROR", f"Invalid cell {cell!r}"))
        first, second = indices
        assert first is not None and second is not None
        free_mult.append((first, second))

    free_neg = []  # type: List[int]
    for label in args.free_neg:
        a = resolve(label)
        if a is None:
            return out.fail(Error("INPUT-ERROR", f"Unknown element {label!r}"))
        free_neg.append(a)

    size_limit = (
        args.size_limit
        if args.size_limit is not None
        else constructions.REPAIR_SIZE_LIMIT
    )
    found, error = constructions.repair_search(
        args.n, constructions.FrozenCells(free_mult, free_neg), size_limit
    )
    if error is not None:
        return out.fail(error)
    assert found is not None

    if out.as_json:
        out.write(
            report.dump_json(
                {
                    "verdict": "pass",
                    "violations": [],
                    "count": len(found),
                    "algebras": [algebra_text.dump_algebra(a) for a in found],
                }
            )
        )
    else:
        out.write(f"completions: {len(found)}\n")
        for algebra in found:
            out.write("\n" + algebra_text.dump_algebra(algebra))
    return EXIT_PASS


_SUITES = {
    "crl": (profiles.check_crl_laws, ["meet", "join", "mult", "imp"]),
    "negation": (profiles.check_negation_laws, ["meet", "join", "mult", "imp"]),
    "residuation": (profiles.check_residuation_lemma, ["meet", "imp", "one"]),
    "girale": (
        profiles.check_girale_lemma,
        ["meet", "mult", "imp", "bang", "one"],
    ),
}  # type: Dict[str, Tuple[Callable[[FiniteAlgebra], CheckReport], List[str]]]


def _run_lemmas(args: argparse.Namespace, out: _Output, stdin: TextIO) -> int:
    algebra, error = _load_algebra(args.path, stdin)
    if error is not None:
        return out.fail(error)
    assert algebra is not None

    check, needed = _SUITES[args.suite]
    error = _missing_tables(algebra, needed)
    if error is None and args.suite == "negation":
        if algebra.neg is None and algebra.zero is None:
            error = Error("MISSING-CONSTANT", f"The algebra {algebra.name} lacks zero")
    if error is not None:
        return out.fail(error)

    return out.check(check(algebra), report.element_labeler(algebra))


_COMMANDS = {
    "check": _run_check,
    "gen": _run_gen,
    "eval": _run_eval,
    "derive": _run_derive,
    "filters": _run_filters,
    "con": _run_con,
    "edpc": _run_edpc,
    "heyt": _run_heyt,
    "complete": _run_complete,
    "conservativity": _run_conservativity,
    "induce": _run_induce,
    "search": _run_search,
    "translate": _run_translate,
    "repair": _run_repair,
    "lemmas": _run_lemmas,
}  # type: Dict[str, Callable[[argparse.Namespace, _Output, TextIO], int]]


# endregion


def _make_parser(prog: str) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", help="Emit a JSON report", action="store_true")
    common.add_argument(
        "--verbose", help="Report the progress to stderr", action="store_true"
    )
    common.add_argument(
        "--show-time", help="Report the wall time to stderr", action="store_true"
    )

    limited = argparse.ArgumentParser(add_help=False)
    limited.add_argument(
        "--size-limit",
        help="Override the largest algebra the command supports",
        type=int,
        default=None,
    )

    parser = argparse.ArgumentParser(prog=prog, description=__doc__)
    parser.add_argument(
        "--version", help="Show the version and exit", action="store_true"
    )
    subparsers = parser.add_subparsers(dest="command")

    def path_argument(subparser: argparse.ArgumentParser) -> None:
        subparser.add_argument(
            "path", help="Path to the algebra file, '-' for stdin", nargs="?", default="-"
        )

    check = subparsers.add_parser(
        "check", help="Check an algebra against a profile", parents=[common]
    )
    path_argument(check)
    check.add_argument(
        "--profile", required=True, choices=[profile.value for profile in Profile]
    )

    gen = subparsers.add_parser("gen", help="Generate an algebra", parents=[common])
    gen.add_argument("family", choices=["gn"])
    gen.add_argument("n", type=int)
    gen.add_argument(
        "--verbatim-neg",
        help="Use ¬1 = ⊥ instead of the involutive ¬1 = 0",
        action="store_true",
    )

    evaluation = subparsers.add_parser(
        "eval", help="Evaluate a formula or an equation", parents=[common]
    )
    path_argument(evaluation)
    evaluation.add_argument("-e", "--expression", required=True)
    evaluation.add_argument(
        "--all", help="Tabulate the formula over all assignments", action="store_true"
    )

    derive = subparsers.add_parser(
        "derive", help="Check a Hilbert-style derivation", parents=[common]
    )
    derive.add_argument("path", help="Path to the derivation file, '-' for stdin")
    derive.add_argument("--system", choices=sorted(hilbert.SYSTEMS), default=None)
    derive.add_argument(
        "--corpus",
        help="Algebras to scan the conclusion for soundness",
        nargs="*",
        default=[],
    )

    for name, text in (
        ("filters", "List all the filters"),
        ("con", "List all the congruences and check Con ≅ Fil"),
    ):
        subparser = subparsers.add_parser(name, help=text, parents=[common, limited])
        path_argument(subparser)
        subparser.set_defaults(size_limit_default=congruence.SIZE_LIMIT)

    edpc = subparsers.add_parser(
        "edpc", help="Check the definability of principal congruences", parents=[common]
    )
    path_argument(edpc)

    heyt = subparsers.add_parser(
        "heyt", help="Construct the Heyting algebra of the modality", parents=[common]
    )
    path_argument(heyt)
    heyt.add_argument(
        "--check",
        help="Check the correspondence of the filters instead",
        action="store_true",
    )

    complete = subparsers.add_parser(
        "complete", help="Construct a completion", parents=[common, limited]
    )
    complete.add_argument("kind", choices=["frame", "phase"])
    path_argument(complete)

    conservativity = subparsers.add_parser(
        "conservativity",
        help="Check the embedding into a girale over the closed sets",
        parents=[common, limited],
    )
    path_argument(conservativity)

    induce = subparsers.add_parser(
        "induce",
        help="Induce a modality from a Heyting subset, or list the subsets",
        parents=[common],
    )
    path_argument(induce)
    induce.add_argument("--subset", help="Comma-separated element labels")

    search_parser = subparsers.add_parser(
        "search", help="Enumerate small models", parents=[common]
    )
    search_parser.add_argument(
        "--profile", required=True, choices=[profile.value for profile in Profile]
    )
    search_parser.add_argument("--size", required=True, type=int)
    search_parser.add_argument("--min-size", type=int, default=1)
    search_parser.add_argument("--falsify", help="Sentence to find a countermodel for")
    search_parser.add_argument("--limit", type=int, default=None)
    search_parser.add_argument(
        "--dump", help="Print every model in the text format", action="store_true"
    )

    translate = subparsers.add_parser(
        "translate", help="Translate between formulas and equations", parents=[common]
    )
    group = translate.add_mutually_exclusive_group(required=True)
    group.add_argument("--tau", help="Formula to translate into an equation")
    group.add_argument("--rho", help="Equation to translate into formulas")

    repair = subparsers.add_parser(
        "repair",
        help="Search the completions of G_n with some cells set free",
        parents=[common, limited],
    )
    repair.add_argument("n", type=int)
    repair.add_argument("--free-row", action="append", default=[])
    repair.add_argument(
        "--free-cell", help="Two labels separated by a comma", action="append", default=[]
    )
    repair.add_argument("--free-neg", action="append", default=[])

    lemmas = subparsers.add_parser(
        "lemmas", help="Check a suite of derived laws", parents=[common]
    )
    path_argument(lemmas)
    lemmas.add_argument("--suite", choices=sorted(_SUITES), required=True)

    return parser


def main(
    prog: str,
    argv: Optional[Sequence[str]] = None,
    stdin: TextIO = sys.stdin,
    stdout: TextIO = sys.stdout,
    stderr: TextIO = sys.stderr,
) -> int:
    """
    Execute the main routine.

    :param prog: name of the program to be displayed in the help
    :param argv: arguments, by default from the command line
    :param stdin: stream read for the path ``-``
    :param stdout: stream of the reports
    :param stderr: stream of the diagnostics
    :return: exit code
    """
    parser = _make_parser(prog)

    # The module ``argparse`` is not flexible enough to understand special options such
    # as ``--version`` so we manually hard-wire.
    arguments = list(argv) if argv is not None else sys.argv[1:]
    if "--version" in arguments and "--help" not in arguments:
        print(giralebench.__version__, file=stdout)
        return EXIT_PASS

    try:
        # argparse writes usage, help and errors to the global streams
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(arguments)
    except SystemExit as exception:
        return EXIT_PASS if exception.code == 0 else EXIT_ERROR

    if args.command is None:
        parser.print_usage(file=stderr)
        return EXIT_ERROR

    if not hasattr(args, "size_limit"):
        args.size_limit = None
    elif args.size_limit is None and hasattr(args, "size_limit_default"):
        args.size_limit = args.size_limit_default

    out = _Output(stdout, stderr, as_json=args.json, verbose=args.verbose)

    tic = time.perf_counter()
    exit_code = _COMMANDS[args.command](args, out, stdin)
    if args.show_time and args.command != "search":
        print(f"elapsed: {time.perf_counter() - tic:.3f} s", file=stderr)

    return exit_code


def entry_point() -> int:
    """Provide an entry point for a console script."""
    return main(prog="girale-workbench")


if __name__ == "__main__":
    sys.exit(main(prog="girale-workbench"))
