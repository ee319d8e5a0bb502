from __future__ import annotations

import sys

import click

from ..pyultrashift import ALPHABET, ForbiddenSet, Universe, Word, in_XF
from .common import EXIT_FALSE, FORBIDDEN, WORD, handle_errors

__all__ = ['xf_member']

@click.argument('word', type=WORD)
@click.option('--forbid', 'forbidden', type=FORBIDDEN, required=True,
              help='File listing the forbidden words, such as `forbid { e1.e1; e1.e2 }`.')
@click.option('--alphabet-size', type=click.IntRange(min=1), default=None,
              help='Use the letters 1..N instead of every positive integer. (Default: infinite)')
@handle_errors
def xf_member(
    word: Word,
    *,
    forbidden: ForbiddenSet,
    alphabet_size: int | None,
):
    """
    Decide whether WORD lies in the shift space that forbids the words listed in the file given to `--forbid`.

    Exits with status 1 when WORD is not a member.
    """
    alphabet = ALPHABET if alphabet_size is None else Universe(start=ALPHABET.start, size=alphabet_size)

    if in_XF(forbidden, alphabet, word):
        click.echo('member')
    else:
        click.echo('not-member')
        sys.exit(EXIT_FALSE)
