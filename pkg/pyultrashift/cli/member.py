from __future__ import annotations

import sys

import click

from ..pyultrashift import UltragraphPresentation, Word, edge_shift_membership
from .common import EXIT_FALSE, PRESENTATION, WORD, handle_errors

__all__ = ['member']

@click.argument('presentation', type=PRESENTATION)
@click.argument('word', type=WORD)
@handle_errors
def member(presentation: UltragraphPresentation, word: Word):
    """
    Decide whether WORD lies in the edge shift of the ultragraph in PRESENTATION.

    WORD is `@` for the empty sequence, a finite word such as `e1.e3`,
    or an eventually periodic word such as `e1.(e3.e4)*`.
    Exits with status 1 when WORD is not a member.
    """
    result = edge_shift_membership(presentation, word)

    click.echo(f'{"member" if result.member else "not-member"}: {result.reason}')
    if not result.member:
        sys.exit(EXIT_FALSE)
