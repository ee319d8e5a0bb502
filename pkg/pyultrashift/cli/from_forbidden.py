from __future__ import annotations

import click

from ..presentation import render_presentation
from ..pyultrashift import ForbiddenSet, ultragraph_from_one_step
from .common import FORBIDDEN, handle_errors

__all__ = ['from_forbidden']

@click.argument('forbidden', type=FORBIDDEN)
@handle_errors
def from_forbidden(forbidden: ForbiddenSet):
    """
    Print a presentation of an ultragraph whose edge shift is the 1-step shift
    forbidding the words of length 2 listed in FORBIDDEN.
    """
    click.echo(render_presentation(ultragraph_from_one_step(forbidden)), nl=False)
