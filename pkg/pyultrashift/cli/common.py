from __future__ import annotations

from collections.abc import Callable
import functools
import sys
from typing import TypeVar

import click

from ..errors import ParseError, UltraShiftError, UsageError
from ..presentation import load_forbidden, load_presentation
from ..pyultrashift import ForbiddenSet, GroupWord, UltragraphPresentation, Word

__all__ = [
    'EXIT_FALSE', 'EXIT_USAGE', 'EXIT_NOT_CONJUGATE', 'EXIT_OPERATION',
    'PRESENTATION', 'FORBIDDEN', 'WORD', 'GROUP_WORD',
    'handle_errors', 'echo_lines',
]

EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_NOT_CONJUGATE = 3
EXIT_OPERATION = 4


class PresentationType(click.ParamType):
    name = 'presentation'

    def convert(self, value: object, param: click.Parameter | None, ctx: click.Context | None) -> UltragraphPresentation:
        if isinstance(value, UltragraphPresentation):
            return value

        try:
            return load_presentation(str(value))
        except UsageError as e:
            self.fail(f'{value}: {e.message}', param, ctx)

class ForbiddenType(click.ParamType):
    name = 'forbidden'

    def convert(self, value: object, param: click.Parameter | None, ctx: click.Context | None) -> ForbiddenSet:
        if isinstance(value, ForbiddenSet):
            return value

        try:
            return load_forbidden(str(value))
        except UsageError as e:
            self.fail(f'{value}: {e.message}', param, ctx)

class WordType(click.ParamType):
    name = 'word'

    def convert(self, value: object, param: click.Parameter | None, ctx: click.Context | None) -> Word:
        if isinstance(value, Word):
            return value

        try:
            return Word.parse(str(value))
        except ParseError as e:
            self.fail(e.message, param, ctx)

class GroupWordType(click.ParamType):
    name = 'groupword'

    def convert(self, value: object, param: click.Parameter | None, ctx: click.Context | None) -> GroupWord:
        if isinstance(value, GroupWord):
            return value

        try:
            return GroupWord.parse(str(value))
        except ParseError as e:
            self.fail(e.message, param, ctx)

PRESENTATION = PresentationType()
FORBIDDEN = ForbiddenType()
WORD = WordType()
GROUP_WORD = GroupWordType()


F = TypeVar('F', bound=Callable[..., object])

def handle_errors(fn: F) -> F:
    """Maps library errors to exit codes: usage errors exit 2 and any other error exits 4."""
    @functools.wraps(fn)
    def wrapper(*args: object, **kwargs: object) -> object:
        try:
            return fn(*args, **kwargs)
        except UsageError as e:
            click.echo(f'Error: {e.message}', err=True)
            sys.exit(EXIT_USAGE)
        except UltraShiftError as e:
            click.echo(f'Error: {e.message}', err=True)
            sys.exit(EXIT_OPERATION)

    return wrapper  # type: ignore[return-value]

def echo_lines(lines: list[str]) -> None:
    for line in lines:
        click.echo(line)
