"""Exception types.

Every error carries an ``exit_code`` so the command-line front end can map
failures to distinct nonzero statuses.
"""

from __future__ import annotations


class LexShellError(ValueError):
    exit_code = 10


class EmptyInput(LexShellError):
    exit_code = 11


class EmptyFacet(LexShellError):
    exit_code = 12


class DimensionOutOfRange(LexShellError):
    exit_code = 13


class UnknownVertex(LexShellError):
    exit_code = 14


class NotPure(LexShellError):
    exit_code = 15


class NotABijection(LexShellError):
    exit_code = 16


class DomainMismatch(LexShellError):
    exit_code = 17


class InvalidDimensions(LexShellError):
    exit_code = 18


class InvalidOrder(LexShellError):
    exit_code = 19


class NotAPermutation(LexShellError):
    exit_code = 20


class InvalidCertificate(LexShellError):
    exit_code = 21


class NotAShelling(LexShellError):
    exit_code = 22


class Duplicate(LexShellError):
    exit_code = 23


class UnknownExample(LexShellError):
    exit_code = 24


class DimensionTooSmall(LexShellError):
    exit_code = 25


class BoundExceeded(LexShellError):
    exit_code = 26


class TooManyFacets(LexShellError):
    exit_code = 27


class ParseError(LexShellError):
    exit_code = 28

    def __init__(self, message: str, line: int | None = None, token: str | None = None):
        if line is not None:
            message = f"line {line}: {message}"
            if token is not None:
                message += f" (offending token {token!r})"
        super().__init__(message)
        self.line = line
        self.token = token


class Inconclusive(LexShellError):
    """A bounded search ran out of its node budget before reaching an answer."""

    exit_code = 29

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget
