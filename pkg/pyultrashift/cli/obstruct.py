from __future__ import annotations

import sys

import click

from ..pyultrashift import NotConjugate, UltragraphPresentation, obstruction
from .common import EXIT_NOT_CONJUGATE, PRESENTATION, echo_lines, handle_errors

__all__ = ['obstruct']

@click.argument('presentation1', metavar='A', type=PRESENTATION)
@click.argument('presentation2', metavar='B', type=PRESENTATION)
@click.option('--n-max', type=click.IntRange(min=4), default=16,
              help='Largest truncation to try when computing K-theory. (Default: 16)')
@click.option('--threads', '-t', type=click.IntRange(min=1), default=1,
              help='Number of threads used to handle both presentations in parallel. (Default: 1)')
@handle_errors
def obstruct(
    presentation1: UltragraphPresentation,
    presentation2: UltragraphPresentation,
    *,
    n_max: int,
    threads: int,
):
    """
    Look for an invariant showing that the edge shifts of A and B are not conjugate.

    Exits with status 3 when one is found and with status 0 otherwise.
    Conjugacy itself is never claimed.
    """
    report = obstruction(presentation1, presentation2, n_max=n_max, threads=threads)

    echo_lines(report.lines())
    if isinstance(report.verdict, NotConjugate):
        sys.exit(EXIT_NOT_CONJUGATE)
