from __future__ import annotations

import click

from ..pyultrashift import FinitelyForbidden, UltragraphPresentation, edge_shift_forbidden_set
from .common import PRESENTATION, handle_errors

__all__ = ['forbidden']

@click.argument('presentation', type=PRESENTATION)
@handle_errors
def forbidden(presentation: UltragraphPresentation):
    """
    Print the forbidden words of length 2 of the edge shift of PRESENTATION
    when there are finitely many, i.e. when it is a shift of finite type.
    """
    result = edge_shift_forbidden_set(presentation)

    if isinstance(result, FinitelyForbidden):
        click.echo(result.forbidden.render())
    else:
        click.echo(f'not-sft: {result.reason}')
