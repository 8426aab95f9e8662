"""Exception hierarchy.  Each class carries the process exit code the CLI uses."""

from __future__ import annotations


class CsfError(Exception):
    exit_code = 1


class GraphFormatError(CsfError):
    exit_code = 3


class ExprParseError(CsfError):
    exit_code = 4

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownAlphabetError(CsfError):
    exit_code = 5


class UnboundedAlphabetError(CsfError):
    exit_code = 6


class CapacityError(CsfError):
    exit_code = 7


class SymFuncFormatError(CsfError):
    exit_code = 8
