from __future__ import annotations

import click

from ..pyultrashift import Word, shift as _shift
from .common import WORD, handle_errors

__all__ = ['shift']

@click.argument('word', type=WORD)
@handle_errors
def shift(word: Word):
    """Drop the first letter of WORD. The empty sequence `@` is fixed."""
    click.echo(_shift(word).render())
