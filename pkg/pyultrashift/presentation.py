from __future__ import annotations

from pathlib import Path
import re

from .errors import ParseError, PresentationError, UsageError
from .logger import get_logger
from .pyultrashift.shiftspace import ForbiddenSet
from .pyultrashift.ultragraph import (
    VERTEX_UNIVERSE,
    ConstantRange,
    ConstantVertex,
    ExceptionalEdge,
    Identity,
    RangeRule,
    SourceRule,
    Successor,
    TailRule,
    UltragraphPresentation,
    UpperTail,
)
from .pyultrashift.vertexset import IndexSet, Universe

__all__ = [
    'parse_presentation', 'render_presentation', 'load_presentation',
    'parse_forbidden', 'load_forbidden',
]

logger = get_logger()

_FIELD_PATTERN = re.compile(r'(\w+)\s*=\s*(\w+\s*\([^)]*\)|\S+)')
_VERTICES_PATTERN = re.compile(r'^vertices\s*=\s*(.+)$')
_FINITE_PATTERN = re.compile(r'^finite\s*\(\s*(\d+)\s*\)$')
_CALL_PATTERN = re.compile(r'^(\w+)\s*(?:\(\s*([^)]*?)\s*\))?$')
_VERTEX_PATTERN = re.compile(r'^v?(\d+)$')
_EDGE_PATTERN = re.compile(r'^e?(\d+)$')
_NUMBER_PATTERN = re.compile(r'^(\d+)$')


class _Line:
    """One meaningful line of a presentation file, for error reporting."""

    def __init__(self, number: int, text: str) -> None:
        super().__init__()

        self.number = number
        self.text = text

    def error(self, message: str, *, column: int | None = None) -> ParseError:
        return ParseError(message, line=self.number, column=column)

    def fields(self, offset: int, allowed: tuple[str, ...], required: tuple[str, ...]) -> dict[str, tuple[str, int]]:
        """Parses `key=value` pairs from `offset` onwards, keeping the 1-based column of each value."""
        rest = self.text[offset:]
        found: dict[str, tuple[str, int]] = {}
        position = 0

        for match in _FIELD_PATTERN.finditer(rest):
            skipped = rest[position:match.start()]
            if skipped.strip():
                raise self.error(f'unexpected {skipped.strip()!r}', column=offset + position + 1)
            position = match.end()

            key, value = match.groups()
            column = offset + match.start(2) + 1
            if key not in allowed:
                raise self.error(f'unknown field {key!r}', column=offset + match.start(1) + 1)
            if key in found:
                raise self.error(f'field {key!r} given twice', column=offset + match.start(1) + 1)

            found[key] = (value, column)

        if rest[position:].strip():
            raise self.error(f'unexpected {rest[position:].strip()!r}', column=offset + position + 1)

        missing = [key for key in required if key not in found]
        if missing:
            raise self.error(f'missing field {missing[0]!r}')

        return found


def _int(line: _Line, pattern: re.Pattern[str], value: str, column: int, what: str) -> int:
    match = pattern.match(value.strip())
    if match is None:
        raise line.error(f'expected {what}, but got {value!r}', column=column)

    return int(match.group(1))

def _parse_universe(line: _Line, value: str) -> Universe:
    value = value.strip()
    if value == 'infinite':
        return VERTEX_UNIVERSE

    match = _FINITE_PATTERN.match(value)
    if match is None:
        raise line.error(f'expected infinite or finite(N), but got {value!r}')

    return Universe(start=VERTEX_UNIVERSE.start, size=int(match.group(1)))

def _parse_set(line: _Line, value: str, column: int, vertices: Universe) -> IndexSet:
    try:
        return IndexSet.parse(value, vertices, prefix='v')
    except ParseError as e:
        raise line.error(e.message, column=column) from e

def _parse_source(line: _Line, value: str, column: int) -> SourceRule:
    match = _CALL_PATTERN.match(value.strip())
    if match is not None:
        name, argument = match.groups()
        if name == 'identity':
            if argument is None:
                return Identity()
            return Identity(_int(line, _VERTEX_PATTERN, argument, column, 'a vertex such as v2'))
        if name == 'constant' and argument is not None:
            return ConstantVertex(_int(line, _VERTEX_PATTERN, argument, column, 'a vertex such as v2'))

    raise line.error(f'expected identity, identity(v<i>) or constant(v<i>), but got {value!r}', column=column)

def _parse_tail_range(line: _Line, value: str, column: int, vertices: Universe) -> RangeRule:
    match = _CALL_PATTERN.match(value.strip())
    if match is not None:
        name, argument = match.groups()
        if name in ('uppertail', 'next'):
            if argument is None or not argument.isdigit():
                raise line.error(f'expected {name}(<offset>), but got {value!r}', column=column)
            return UpperTail(int(argument)) if name == 'uppertail' else Successor(int(argument))

    return ConstantRange(_parse_set(line, value, column, vertices))

def _parse_edge(line: _Line, vertices: Universe) -> ExceptionalEdge:
    match = re.match(r'^edge\s+(\S+)', line.text)
    assert match is not None

    edge = _int(line, _EDGE_PATTERN, match.group(1), match.start(1) + 1, 'an edge index such as 3 or e3')
    fields = line.fields(match.end(), ('source', 'range'), ('source', 'range'))

    source, source_column = fields['source']
    target, target_column = fields['range']

    return ExceptionalEdge(
        edge,
        _int(line, _VERTEX_PATTERN, source, source_column, 'a vertex such as v2'),
        _parse_set(line, target, target_column, vertices),
    )

def _parse_tail(line: _Line, vertices: Universe) -> TailRule:
    fields = line.fields(len('tail'), ('start', 'step', 'source', 'range'), ('start', 'source', 'range'))

    start = _int(line, _EDGE_PATTERN, *fields['start'], 'an edge index')
    step = _int(line, _NUMBER_PATTERN, *fields['step'], 'a positive step') if 'step' in fields else 1

    return TailRule(
        start,
        _parse_source(line, *fields['source']),
        _parse_tail_range(line, *fields['range'], vertices),
        step,
    )


def parse_presentation(text: str) -> UltragraphPresentation:
    """
    Parses the line-oriented presentation format::

        vertices = infinite | finite(N)
        edge <k> source=v<i> range=<set>
        tail start=<k> [step=<d>] source=identity[(v<i>)]|constant(v<i>) range=<set>|uppertail(<c>)|next(<c>)

    where `<set>` is `all`, `none`, `finite(v..)` or `cofinite(v..)`. `#` starts a comment.
    Syntax errors carry the line and column; structural errors name the violated invariant.
    """
    vertices: Universe | None = None
    edges: dict[int, ExceptionalEdge] = {}
    tails: list[TailRule] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split('#', 1)[0].rstrip()
        if not body.strip():
            continue

        indent = len(body) - len(body.lstrip())
        line = _Line(number, body.strip())
        keyword = line.text.split(maxsplit=1)[0].split('=', 1)[0]

        if keyword == 'vertices':
            if vertices is not None:
                raise line.error('vertices declared twice')
            if edges or tails:
                raise line.error('vertices must be declared before any edge or tail')

            match = _VERTICES_PATTERN.match(line.text)
            if match is None:
                raise line.error('expected vertices = infinite | finite(N)')
            vertices = _parse_universe(line, match.group(1))
        elif keyword == 'edge':
            x = _parse_edge(line, vertices or VERTEX_UNIVERSE)
            if x.edge in edges:
                msg = f'line {number}: duplicate edge index e{x.edge}'
                raise PresentationError(msg)
            edges[x.edge] = x
        elif keyword == 'tail':
            tails.append(_parse_tail(line, vertices or VERTEX_UNIVERSE))
        else:
            raise line.error(f'expected vertices, edge or tail, but got {keyword!r}', column=indent + 1)

        logger.debug('Parsed line %d: %s', number, line.text)

    return UltragraphPresentation(vertices or VERTEX_UNIVERSE, tuple(edges.values()), tuple(tails))

def render_presentation(G: UltragraphPresentation) -> str:
    return G.render()

def load_presentation(path: str | Path) -> UltragraphPresentation:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        msg = f'Cannot read {path}: {e.strerror}'
        raise UsageError(msg) from e

    return parse_presentation(text)


def parse_forbidden(text: str) -> ForbiddenSet:
    return ForbiddenSet.parse(text)

def load_forbidden(path: str | Path) -> ForbiddenSet:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        msg = f'Cannot read {path}: {e.strerror}'
        raise UsageError(msg) from e

    return parse_forbidden(text)
