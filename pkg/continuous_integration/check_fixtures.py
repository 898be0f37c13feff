#!/usr/bin/env python3

"""Check that the algebras and derivations in the test data parse as intended."""

import os
import pathlib
import sys

from giralebench import algebra_text, hilbert


def main() -> int:
    """Execute the main routine."""
    repo_root = pathlib.Path(os.path.realpath(__file__)).parent.parent
    test_data_dir = repo_root / "tests" / "test_data"
    if not test_data_dir.exists():
        raise RuntimeError(f"Could not find the test data: {test_data_dir}")

    success = True

    # NOTE (mristin, 2023-04-02):
    # Fixtures prefixed with ``broken_`` are expected to fail parsing.
    for pth in sorted((test_data_dir / "algebras").glob("*.alg")):
        _, error = algebra_text.load_algebra(pth)
        expected_broken = pth.name.startswith("broken_")

        if error is not None and not expected_broken:
            print(f"Failed to parse {pth}: {error}", file=sys.stderr)
            success = False
        elif error is None and expected_broken:
            print(f"Expected {pth} to fail parsing, but it parsed", file=sys.stderr)
            success = False

    for pth in sorted((test_data_dir / "derivations").glob("*.proof")):
        derivation, error = hilbert.load_derivation(pth)
        if error is not None:
            print(f"Failed to parse {pth}: {error}", file=sys.stderr)
            success = False
            continue

        assert derivation is not None
        if derivation.system is None:
            print(f"The derivation {pth} does not state its system", file=sys.stderr)
            success = False

    if not success:
        return -1

    return 0


if __name__ == "__main__":
    sys.exit(main())
