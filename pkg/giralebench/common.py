"""Provide common functions and data structures used throughout the program."""

from typing import NoReturn, Optional, Tuple


def assert_never(value: NoReturn) -> NoReturn:
    """
    Signal to mypy to perform an exhaustive matching.

    Please see the following page for more details:
    https://hakibenita.com/python-mypy-exhaustive-checking
    """
    assert False, f"Unhandled value: {value} ({type(value).__name__})"


class Error:
    """
    Represent an expected failure returned as a value.

    The ``code`` is stable and machine-readable (e.g., ``NO-RESIDUAL``), while
    the ``message`` is meant for humans.
    """

    def __init__(
        self,
        code: str,
        message: str,
        witness: Tuple[int, ...] = (),
        offset: Optional[int] = None,
    ) -> None:
        """Initialize with the given values."""
        self.code = code
        self.message = message

        #: Element indices falsifying the violated condition, if any
        self.witness = witness

        #: Byte offset in the parsed text, set only for syntax errors
        self.offset = offset

    def __str__(self) -> str:
        if self.offset is not None:
            return f"{self.code} at offset {self.offset}: {self.message}"

        return f"{self.code}: {self.message}"

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"{self.code!r}, {self.message!r}, {self.witness!r}, {self.offset!r})"
        )
