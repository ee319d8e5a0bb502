from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Sequence

__all__ = [
    'UltraShiftError',
    'UsageError', 'UniverseMismatch', 'IndexOutOfUniverse',
    'ParseError', 'PresentationError',
    'UnknownEdge',
    'CharacterizationInapplicable', 'NotInShift',
    'OutsideDomain', 'DefinitionInapplicable',
    'TrackedSetTooSmall', 'NonRegularVertex', 'TailNotSupported',
    'NotFinitelyGenerated', 'NotStabilized',
]


class UltraShiftError(Exception):
    """Base class of every error raised by this package."""

    def __init__(self, message: str) -> None:
        super().__init__(message)

        self.message = message


class UsageError(UltraShiftError, ValueError):
    """The arguments do not satisfy the precondition of an operation."""

class UniverseMismatch(UsageError):
    pass

class IndexOutOfUniverse(UsageError):
    pass

class ParseError(UsageError):
    """Malformed text. `line` and `column` are 1-based when known."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None) -> None:
        if line is not None:
            message = f'line {line}' + ('' if column is None else f', column {column}') + f': {message}'

        super().__init__(message)

        self.line = line
        self.column = column

class PresentationError(UsageError):
    """A presentation violates a structural invariant."""

class NotInShift(UsageError):
    """A word lies outside the edge shift it is evaluated against."""


class UnknownEdge(UltraShiftError, LookupError):
    def __init__(self, edge: int) -> None:
        super().__init__(f'e{edge} is not an edge of the ultragraph')

        self.edge = edge


class CharacterizationInapplicable(UltraShiftError):
    """Some range consists of sinks only, so membership has no finite characterization."""

class OutsideDomain(UltraShiftError):
    pass

class DefinitionInapplicable(UltraShiftError):
    pass


class TrackedSetTooSmall(UltraShiftError):
    pass

class NonRegularVertex(UltraShiftError, ValueError):
    pass

class TailNotSupported(UltraShiftError):
    pass

class NotFinitelyGenerated(UltraShiftError):
    pass

class NotStabilized(UltraShiftError):
    def __init__(self, message: str, candidates: Sequence[object]) -> None:
        super().__init__(message)

        self.candidates = tuple(candidates)
