#!/usr/bin/env python3

"""Check that the distribution and giralebench/__init__.py are in sync."""

import os
import pathlib
import subprocess
import sys
from typing import List, Optional

import giralebench
import giralebench.main

#: Map the classifiers of the distribution to the expected status in __init__.py
STATUS_MAP = {
    "Development Status :: 1 - Planning": "Planning",
    "Development Status :: 2 - Pre-Alpha": "Pre-Alpha",
    "Development Status :: 3 - Alpha": "Alpha",
    "Development Status :: 4 - Beta": "Beta",
    "Development Status :: 5 - Production/Stable": "Production/Stable",
    "Development Status :: 6 - Mature": "Mature",
    "Development Status :: 7 - Inactive": "Inactive",
}


def _query(setup_py_pth: pathlib.Path, field: str) -> str:
    return subprocess.check_output(
        [sys.executable, str(setup_py_pth), f"--{field}"], encoding="utf-8"
    ).strip()


def main() -> int:
    """Execute the main routine."""
    repo_root = pathlib.Path(os.path.realpath(__file__)).parent.parent

    setup_py_pth = repo_root / "setup.py"
    if not setup_py_pth.exists():
        raise RuntimeError(f"Could not find the setup.py: {setup_py_pth}")

    errors = []  # type: List[str]

    expected = {
        "version": giralebench.__version__,
        "author": giralebench.__author__,
        "license": giralebench.__license__,
        "description": giralebench.__doc__,
    }
    for field, in_init in expected.items():
        in_setup = _query(setup_py_pth, field)
        if in_setup != in_init:
            errors.append(
                f"The {field} in the setup.py is {in_setup!r}, "
                f"while the {field} in giralebench/__init__.py is {in_init!r}"
            )

    status_classifier = None  # type: Optional[str]
    for classifier in _query(setup_py_pth, "classifiers").splitlines():
        if classifier in STATUS_MAP:
            status_classifier = classifier
            break

    if status_classifier is None:
        errors.append(
            "Expected a status classifier in setup.py "
            "(e.g., 'Development Status :: 3 - Alpha'), but found none."
        )
    elif STATUS_MAP[status_classifier] != giralebench.__status__:
        errors.append(
            f"Expected status {STATUS_MAP[status_classifier]} "
            f"according to setup.py in giralebench/__init__.py, "
            f"but found: {giralebench.__status__}"
        )

    # NOTE (mristin, 2023-04-02):
    # The console script refers to the entry point by name, so a rename would only
    # surface after the installation.
    if not callable(getattr(giralebench.main, "entry_point", None)):
        errors.append("Expected giralebench.main.entry_point for the console script")

    for error in errors:
        print(error, file=sys.stderr)

    return -1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
