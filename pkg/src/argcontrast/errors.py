from __future__ import annotations


class ArgumentationError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ArgumentationError):
    """Malformed input: bad names, undeclared arguments, invalid theories."""


class UnknownArgumentError(InputError, KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown argument {self.name!r}"


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class PreconditionError(ArgumentationError):
    """A query was asked about an item whose status does not permit it."""


class ApplicabilityError(PreconditionError):
    """Fact and foils violate the conditions for a contrastive explanation."""

    def __init__(self, report):
        self.report = report
        details = "; ".join(f"{v.condition}: {v.detail}" for v in report.violations)
        super().__init__(f"contrastive explanation not applicable ({details})")
