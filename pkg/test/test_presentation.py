from __future__ import annotations

from pathlib import Path

from hypothesis import given
import pytest

from pyultrashift.errors import ParseError, PresentationError, UsageError
from pyultrashift.presentation import (
    load_forbidden,
    load_presentation,
    parse_forbidden,
    parse_presentation,
    render_presentation,
)
from pyultrashift.pyultrashift import ForbiddenSet, IndexSet, UltragraphPresentation, Universe

from .pyultrashift.utils import PRESENTATIONS, SKIP_TWO, st_presentation


@pytest.mark.parametrize('path', sorted(PRESENTATIONS.glob('*.ug')), ids=lambda p: p.stem)
def test_samples_round_trip(path: Path):
    G = load_presentation(path)
    text = render_presentation(G)

    assert render_presentation(parse_presentation(text)) == text

@given(st_presentation())
def test_round_trip(G: UltragraphPresentation):
    H = parse_presentation(render_presentation(G))

    assert H.vertices == G.vertices
    for e in G.edges(12):
        assert H.source(e) == G.source(e)
        assert H.range(e) == G.range(e)
    assert H.edges(12) == G.edges(12)

def test_render():
    assert render_presentation(SKIP_TWO) == '\n'.join([
        'vertices = infinite',
        'edge 1 source=v1 range=cofinite(v1,v2)',
        'tail start=2 source=identity range=all',
        '',
    ])

def test_parse():
    G = parse_presentation('\n'.join([
        '# three vertices',
        'vertices = finite(3)',
        '',
        'edge e1 source=v1   range=finite(v2,v3)  # trailing comment',
        'edge 2 source=2 range=all',
        '   edge 3 source=v3 range=finite(v1)',
    ]))

    universe = Universe(start=1, size=3)
    assert G.vertices == universe
    assert G.range(1) == IndexSet.finite([2, 3], universe)
    assert G.range(2) == IndexSet.all(universe)
    assert G.source(3) == 3
    assert G.has_finitely_many_edges

def test_parse_tails():
    G = parse_presentation('\n'.join([
        'vertices = infinite',
        'tail start=1 step=2 source=constant(v1) range=all',
        'tail start=2 step=2 source=identity(v2) range=uppertail(0)',
    ]))

    assert G.source(5) == 1
    assert G.source(6) == 4
    assert G.range(6) == IndexSet.at_least(4, G.vertices)


@pytest.mark.parametrize(('text', 'line', 'column'), [
    ('vertices = infinite\nedge 1 source=v1 rang=all', 2, 18),
    ('vertices = infinite\nfoo bar', 2, 1),
    ('vertices = finite(x)', 1, None),
    ('edge 1 source=v1', 1, None),
    ('edge 1 source=x1 range=all', 1, 15),
    ('vertices = finite(2)\nedge 1 source=v1 range=finite(v3)', 2, 24),
    ('tail start=2 source=identity range=uppertail(x)', 1, 36),
    ('tail start=2 source=bogus range=all', 1, 21),
    ('tail start=2 source=identity source=identity range=all', 1, 30),
    ('edge 1 source=v1 range=all\nvertices = infinite', 2, None),
    ('vertices = infinite\nvertices = infinite', 2, None),
])
def test_parse_errors(text: str, line: int, column: int | None):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)

    assert info.value.line == line
    assert info.value.column == column

def test_structural_errors():
    with pytest.raises(PresentationError, match='line 3: duplicate edge index e1'):
        parse_presentation('vertices = infinite\nedge 1 source=v1 range=all\nedge 1 source=v2 range=all')
    with pytest.raises(PresentationError, match='empty range'):
        parse_presentation('edge 1 source=v1 range=none')
    with pytest.raises(PresentationError, match='must start after every exceptional edge'):
        parse_presentation('edge 4 source=v1 range=all\ntail start=2 source=identity range=all')


def test_load():
    assert load_presentation(PRESENTATIONS / 'skip_two.ug') == SKIP_TWO
    assert load_forbidden(PRESENTATIONS / 'skip_two.fb') == ForbiddenSet.of([(1, 1), (1, 2)])
    assert parse_forbidden('forbid { }') == ForbiddenSet()

    with pytest.raises(UsageError):
        load_presentation(PRESENTATIONS / 'missing.ug')
    with pytest.raises(UsageError):
        load_forbidden(PRESENTATIONS / 'missing.fb')
