from __future__ import annotations

import click

from ..pyultrashift import (
    Satisfied,
    UltragraphPresentation,
    UnknownUpTo,
    Violated,
    check_condition_L,
    classify,
    validate_hypotheses,
)
from .common import PRESENTATION, echo_lines, handle_errors

__all__ = ['info']

def _render_condition_L(G: UltragraphPresentation, max_loop_len: int) -> str:
    result = check_condition_L(G, max_loop_len)
    if isinstance(result, Satisfied):
        return f'satisfied ({result.reason})'
    if isinstance(result, Violated):
        return 'violated (loop without exit: ' + '.'.join(f'e{e}' for e in result.loop) + ')'

    assert isinstance(result, UnknownUpTo)
    return f'unknown (no loop without exit up to length {result.max_loop_len})'

@click.argument('presentation', type=PRESENTATION)
@click.option('--max-loop-len', type=click.IntRange(min=1), default=8,
              help='Longest loop examined when checking condition (L) on infinitely many edges. (Default: 8)')
@handle_errors
def info(
    presentation: UltragraphPresentation,
    *,
    max_loop_len: int,
):
    """
    Describe the ultragraph in PRESENTATION: its shape, the sets of sinks,
    emitters and regular vertices, the structural hypotheses and condition (L).
    """
    G = presentation
    classification = classify(G)

    echo_lines([
        f'vertices: {G.vertices}',
        f'edges: {"finitely many" if G.has_finitely_many_edges else "infinitely many"}',
        f'graph: {"yes" if classification.is_graph else "no"}',
        f'bouquet: {"yes" if classification.is_bouquet else "no"}',
        f'sinks: {classification.sinks.render("v")}',
        f'emitters: {classification.emitters.render("v")}',
        f'infinite emitters: {G.infinite_emitters().render("v")}',
        f'regular vertices: {classification.regular_vertices.render("v")}',
        *validate_hypotheses(G).lines(),
        f'condition (L): {_render_condition_L(G, max_loop_len)}',
    ])
