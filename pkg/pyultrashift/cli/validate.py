from __future__ import annotations

import click

from ..pyultrashift import UltragraphPresentation, validate_hypotheses
from .common import PRESENTATION, echo_lines, handle_errors

__all__ = ['validate']

@click.argument('presentation', type=PRESENTATION)
@handle_errors
def validate(presentation: UltragraphPresentation):
    """
    Check that PRESENTATION is well-formed and report which structural hypotheses it satisfies.

    Malformed files exit with status 2.
    """
    report = validate_hypotheses(presentation)

    echo_lines([
        'valid',
        *report.lines(),
        f'eligible: {"yes" if report.eligible else "no"}',
    ])
