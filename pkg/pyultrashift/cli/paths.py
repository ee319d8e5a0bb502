from __future__ import annotations

import click

from ..pyultrashift import UltragraphPresentation, enumerate_paths
from .common import PRESENTATION, handle_errors

__all__ = ['paths']

@click.argument('presentation', type=PRESENTATION)
@click.option('--len', 'length', type=click.IntRange(min=1), required=True,
              help='Number of edges in each path.')
@click.option('--max-edge', type=click.IntRange(min=0), required=True,
              help='Largest edge index that may appear in a path.')
@handle_errors
def paths(
    presentation: UltragraphPresentation,
    *,
    length: int,
    max_edge: int,
):
    """List the paths of the ultragraph in PRESENTATION, one per line in lexicographic order."""
    for path in enumerate_paths(presentation, length, max_edge):
        click.echo(path.render())
