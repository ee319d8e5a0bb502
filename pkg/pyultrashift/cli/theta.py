from __future__ import annotations

import click

from ..pyultrashift import GroupWord, UltragraphPresentation, Word, theta as _theta
from .common import GROUP_WORD, PRESENTATION, WORD, handle_errors

__all__ = ['theta']

@click.argument('presentation', type=PRESENTATION)
@click.argument('group_word', metavar='GROUPWORD', type=GROUP_WORD)
@click.argument('word', type=WORD)
@handle_errors
def theta(presentation: UltragraphPresentation, group_word: GroupWord, word: Word):
    """
    Apply the partial action of GROUPWORD to WORD in the edge shift of PRESENTATION.

    GROUPWORD is written like `e1.~e2` (`~` marks an inverse letter) or `0` for the neutral element.
    Words outside the domain exit with status 4.
    """
    click.echo(_theta(presentation, group_word, word).render())
