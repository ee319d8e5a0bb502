from __future__ import annotations

import click

from ..pyultrashift import UltragraphPresentation, boundary_matrix, k_theory
from .common import PRESENTATION, echo_lines, handle_errors

__all__ = ['ktheory']

@click.argument('presentation', type=PRESENTATION)
@click.option('--n', 'n', type=click.IntRange(min=2), default=None,
              help='First truncation to try. (Default: number of exceptional edges + 2)')
@click.option('--n-max', type=click.IntRange(min=4), default=16,
              help='Largest truncation to try before giving up. (Default: 16)')
@click.option('--emit-matrix', is_flag=True, default=False,
              help='Also print the boundary matrix at the truncation where the groups stabilized. (Default: off)')
@click.option('--threads', '-t', type=click.IntRange(min=1), default=1,
              help='Number of threads used to compute the truncations in parallel. (Default: 1)')
@handle_errors
def ktheory(
    presentation: UltragraphPresentation,
    *,
    n: int | None,
    n_max: int,
    emit_matrix: bool,
    threads: int,
):
    """
    Compute K0 and K1 of the C*-algebra of the ultragraph in PRESENTATION.

    The boundary map is truncated at three consecutive sizes;
    the result is reported once all three agree.
    """
    groups = k_theory(presentation, n=n, n_max=n_max, threads=threads)

    if emit_matrix:
        matrix = boundary_matrix(presentation, groups.n)
        echo_lines([f'boundary matrix (n={groups.n}):', matrix.render(), ''])

    echo_lines(groups.lines())
