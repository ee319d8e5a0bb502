from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
import functools
from heapq import merge
import math
from typing import Union

from ..errors import PresentationError, UniverseMismatch, UnknownEdge
from ..logger import get_logger
from .vertexset import INFINITE_UNIVERSE, Cardinality, IndexSet, Universe, intersect, is_empty

__all__ = [
    'VERTEX_UNIVERSE',
    'Identity', 'ConstantVertex', 'SourceRule',
    'ConstantRange', 'UpperTail', 'Successor', 'RangeRule',
    'TailRule', 'ExceptionalEdge', 'UltragraphPresentation',
    'EdgeFrame', 'EdgeSet',
    'HypothesisReport', 'validate_hypotheses',
    'Classification', 'classify',
    'Satisfied', 'Violated', 'UnknownUpTo', 'ConditionL', 'check_condition_L',
]

logger = get_logger()

VERTEX_UNIVERSE = Universe(start=1)
"""The default vertex universe `{v1, v2, ...}`."""

_POSITIONS = INFINITE_UNIVERSE


@dataclass(frozen=True)
class Identity:
    """The `p`-th edge of the tail leaves `v_{first + p}`; `first` defaults to the tail start."""

    first: int | None = None

@dataclass(frozen=True)
class ConstantVertex:
    vertex: int

SourceRule = Union[Identity, ConstantVertex]


@dataclass(frozen=True)
class ConstantRange:
    vertices: IndexSet

@dataclass(frozen=True)
class UpperTail:
    """`r(e) = {v_j : j >= k + offset}` where `s(e) = v_k`."""

    offset: int = 0

@dataclass(frozen=True)
class Successor:
    """`r(e) = {v_{k + offset}}` where `s(e) = v_k`."""

    offset: int = 1

RangeRule = Union[ConstantRange, UpperTail, Successor]


@dataclass(frozen=True)
class TailRule:
    """A uniform family of edges `start, start + step, start + 2 * step, ...`."""

    start: int
    source_rule: SourceRule
    range_rule: RangeRule
    step: int = 1

    @property
    def is_identity(self) -> bool:
        return isinstance(self.source_rule, Identity)

    @property
    def first_vertex(self) -> int | None:
        """The source of the first edge of an identity tail."""
        rule = self.source_rule
        if isinstance(rule, Identity):
            return self.start if rule.first is None else rule.first

        return None

    def covers(self, e: int) -> bool:
        return e >= self.start and (e - self.start) % self.step == 0

    def position(self, e: int) -> int:
        return (e - self.start) // self.step

    def edge_at(self, p: int) -> int:
        return self.start + p * self.step

    def source_at(self, p: int) -> int:
        rule = self.source_rule
        if isinstance(rule, ConstantVertex):
            return rule.vertex

        first = self.first_vertex
        assert first is not None
        return first + p

    def range_at(self, p: int, vertices: Universe) -> IndexSet:
        rule = self.range_rule
        if isinstance(rule, ConstantRange):
            return rule.vertices

        k = self.source_at(p)
        if isinstance(rule, UpperTail):
            return IndexSet.at_least(k + rule.offset, vertices)

        return IndexSet.singleton(k + rule.offset, vertices)

    def render(self) -> str:
        parts = [f'tail start={self.start}']
        if self.step != 1:
            parts.append(f'step={self.step}')

        source = self.source_rule
        if isinstance(source, ConstantVertex):
            parts.append(f'source=constant(v{source.vertex})')
        elif source.first is None or source.first == self.start:
            parts.append('source=identity')
        else:
            parts.append(f'source=identity(v{source.first})')

        target = self.range_rule
        if isinstance(target, ConstantRange):
            parts.append(f'range={target.vertices.render("v")}')
        elif isinstance(target, UpperTail):
            parts.append(f'range=uppertail({target.offset})')
        else:
            parts.append(f'range=next({target.offset})')

        return ' '.join(parts)


@dataclass(frozen=True)
class ExceptionalEdge:
    edge: int
    source: int
    range: IndexSet

    def render(self) -> str:
        return f'edge {self.edge} source=v{self.source} range={self.range.render("v")}'


@dataclass(frozen=True)
class EdgeFrame:
    """How the edge indices of a presentation split into exceptional edges and tail families."""

    exceptional: tuple[int, ...]
    progressions: tuple[tuple[int, int], ...]

    def family_of(self, e: int) -> int | None:
        for i, (start, step) in enumerate(self.progressions):
            if e >= start and (e - start) % step == 0:
                return i

        return None

    def has_edge(self, e: int) -> bool:
        return e in self.exceptional or self.family_of(e) is not None


@dataclass(frozen=True)
class EdgeSet:
    """
    A subset of the edges of a presentation.

    The exceptional part is listed explicitly and each tail family contributes a
    finite or cofinite set of positions, so unions, intersections and
    complements stay within this representation.
    """

    frame: EdgeFrame
    exceptional: tuple[int, ...]
    families: tuple[IndexSet, ...]

    def __post_init__(self) -> None:
        if len(self.families) != len(self.frame.progressions):
            msg = 'An edge set needs one position set per tail family'
            raise ValueError(msg)
        if not set(self.exceptional) <= set(self.frame.exceptional):
            msg = f'Not exceptional edges of this frame: {self.exceptional}'
            raise ValueError(msg)

    @classmethod
    def everything(cls, frame: EdgeFrame) -> EdgeSet:
        return cls(frame, frame.exceptional, tuple(IndexSet.all(_POSITIONS) for _ in frame.progressions))

    @classmethod
    def nothing(cls, frame: EdgeFrame) -> EdgeSet:
        return cls(frame, (), tuple(IndexSet.none(_POSITIONS) for _ in frame.progressions))

    @classmethod
    def of(cls, frame: EdgeFrame, edges: Iterable[int]) -> EdgeSet:
        exceptional: set[int] = set()
        positions: list[set[int]] = [set() for _ in frame.progressions]

        for e in edges:
            family = frame.family_of(e)
            if family is None:
                if e not in frame.exceptional:
                    raise UnknownEdge(e)
                exceptional.add(e)
            else:
                start, step = frame.progressions[family]
                positions[family].add((e - start) // step)

        return cls(
            frame,
            tuple(sorted(exceptional)),
            tuple(IndexSet.finite(p, _POSITIONS) for p in positions),
        )

    def _check_frame(self, other: EdgeSet) -> None:
        if self.frame != other.frame:
            msg = 'Cannot combine edge sets of different presentations'
            raise UniverseMismatch(msg)

    def __or__(self, other: EdgeSet) -> EdgeSet:
        self._check_frame(other)
        return EdgeSet(
            self.frame,
            tuple(sorted(set(self.exceptional) | set(other.exceptional))),
            tuple(a | b for a, b in zip(self.families, other.families)),
        )

    def __and__(self, other: EdgeSet) -> EdgeSet:
        self._check_frame(other)
        return EdgeSet(
            self.frame,
            tuple(sorted(set(self.exceptional) & set(other.exceptional))),
            tuple(a & b for a, b in zip(self.families, other.families)),
        )

    def __invert__(self) -> EdgeSet:
        return EdgeSet(
            self.frame,
            tuple(e for e in self.frame.exceptional if e not in self.exceptional),
            tuple(~f for f in self.families),
        )

    def __sub__(self, other: EdgeSet) -> EdgeSet:
        return self & ~other

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, int):
            return False

        family = self.frame.family_of(e)
        if family is None:
            return e in self.exceptional

        start, step = self.frame.progressions[family]
        return (e - start) // step in self.families[family]

    @property
    def is_empty(self) -> bool:
        return not self.exceptional and all(is_empty(f) for f in self.families)

    @property
    def is_finite(self) -> bool:
        return all(f.is_finite for f in self.families)

    @property
    def is_infinite(self) -> bool:
        return not self.is_finite

    @property
    def is_cofinite(self) -> bool:
        """Whether only finitely many edges are left out."""
        return all(f.is_cofinite for f in self.families)

    def finite_cardinality(self) -> Cardinality:
        if not self.is_finite:
            return 'infinite'

        return len(self.exceptional) + sum(len(f.support) for f in self.families)

    def members_below(self, stop: int) -> tuple[int, ...]:
        """The members with index smaller than `stop`, in increasing order."""
        streams: list[Iterable[int]] = [[e for e in self.exceptional if e < stop]]
        for (start, step), positions in zip(self.frame.progressions, self.families):
            position_stop = max(0, -((start - stop) // step))
            streams.append([start + p * step for p in positions.members_below(position_stop)])

        return tuple(merge(*streams))

    def members(self) -> tuple[int, ...]:
        if not self.is_finite:
            msg = f'Cannot enumerate the infinite edge set {self}'
            raise ValueError(msg)

        edges = list(self.exceptional)
        for (start, step), positions in zip(self.frame.progressions, self.families):
            edges.extend(start + p * step for p in positions.members())

        return tuple(sorted(edges))

    def render(self, prefix: str = 'e') -> str:
        if self.is_finite:
            members = self.members()
            return 'none' if not members else 'finite(' + ','.join(f'{prefix}{e}' for e in members) + ')'
        if self.is_cofinite:
            left_out = (~self).members()
            return 'all' if not left_out else 'cofinite(' + ','.join(f'{prefix}{e}' for e in left_out) + ')'

        parts = ['finite(' + ','.join(f'{prefix}{e}' for e in self.exceptional) + ')']
        for (start, step), positions in zip(self.frame.progressions, self.families):
            parts.append(f'tail[{start}+{step}p: p in {positions}]')

        return ' | '.join(parts)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class UltragraphPresentation:
    """
    A finite description of an ultragraph `(G0, G1, r, s)`.

    The edge set consists of the exceptional edges together with every
    edge covered by a tail family. Vertices are indexed from the start of
    `vertices` (1 by default).
    """

    vertices: Universe = VERTEX_UNIVERSE
    exceptional_edges: tuple[ExceptionalEdge, ...] = ()
    tails: tuple[TailRule, ...] = ()
    _by_edge: dict[int, ExceptionalEdge] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'exceptional_edges', tuple(sorted(self.exceptional_edges, key=lambda x: x.edge)))
        object.__setattr__(self, 'tails', tuple(sorted(self.tails, key=lambda t: t.start)))
        object.__setattr__(self, '_by_edge', {x.edge: x for x in self.exceptional_edges})

        self._validate()

    def _validate(self) -> None:
        vertices = self.vertices

        if len(self._by_edge) != len(self.exceptional_edges):
            counts = Counter(x.edge for x in self.exceptional_edges)
            duplicates = sorted(e for e, n in counts.items() if n > 1)
            msg = f'duplicate edge index: {", ".join(f"e{e}" for e in duplicates)}'
            raise PresentationError(msg)

        for x in self.exceptional_edges:
            if x.edge < 0:
                msg = f'edge index must be non-negative, not {x.edge}'
                raise PresentationError(msg)
            if x.source not in vertices:
                msg = f'source v{x.source} of e{x.edge} is not a vertex'
                raise PresentationError(msg)
            self._check_range(x.range, f'e{x.edge}')

        last_exceptional = max(self._by_edge, default=-1)

        for tail in self.tails:
            where = f'tail starting at e{tail.start}'

            if tail.step < 1:
                msg = f'{where}: step must be positive'
                raise PresentationError(msg)
            if tail.start <= last_exceptional:
                msg = f'{where}: must start after every exceptional edge (e{last_exceptional})'
                raise PresentationError(msg)

            source = tail.source_rule
            if isinstance(source, ConstantVertex):
                if source.vertex not in vertices:
                    msg = f'{where}: constant source v{source.vertex} is not a vertex'
                    raise PresentationError(msg)
            else:
                if vertices.is_finite:
                    msg = f'{where}: an identity source needs infinitely many vertices'
                    raise PresentationError(msg)
                first = tail.first_vertex
                assert first is not None
                if first not in vertices:
                    msg = f'{where}: first source v{first} is not a vertex'
                    raise PresentationError(msg)

            target = tail.range_rule
            if isinstance(target, ConstantRange):
                self._check_range(target.vertices, where)
            else:
                if not tail.is_identity:
                    msg = f'{where}: edge-dependent ranges need an identity source'
                    raise PresentationError(msg)
                if target.offset < 0:
                    msg = f'{where}: range offset must be non-negative'
                    raise PresentationError(msg)

        for i, a in enumerate(self.tails):
            for b in self.tails[i + 1:]:
                if (a.start - b.start) % math.gcd(a.step, b.step) == 0:
                    msg = f'tails starting at e{a.start} and e{b.start} share edges'
                    raise PresentationError(msg)

    def _check_range(self, r: IndexSet, where: str) -> None:
        if r.universe != self.vertices:
            msg = f'{where}: range is not a set of vertices of this ultragraph'
            raise PresentationError(msg)
        if is_empty(r):
            msg = f'{where}: empty range'
            raise PresentationError(msg)

    @functools.cached_property
    def frame(self) -> EdgeFrame:
        return EdgeFrame(
            tuple(x.edge for x in self.exceptional_edges),
            tuple((t.start, t.step) for t in self.tails),
        )

    @property
    def has_finitely_many_edges(self) -> bool:
        return not self.tails

    def has_edge(self, e: int) -> bool:
        return self.frame.has_edge(e)

    def _locate(self, e: int) -> ExceptionalEdge | tuple[TailRule, int]:
        if e in self._by_edge:
            return self._by_edge[e]

        family = self.frame.family_of(e)
        if family is None:
            raise UnknownEdge(e)

        tail = self.tails[family]
        return tail, tail.position(e)

    def source(self, e: int) -> int:
        """The vertex `s(e)`."""
        found = self._locate(e)
        if isinstance(found, ExceptionalEdge):
            return found.source

        tail, p = found
        return tail.source_at(p)

    def range(self, e: int) -> IndexSet:
        """The vertex set `r(e)`."""
        found = self._locate(e)
        if isinstance(found, ExceptionalEdge):
            return found.range

        tail, p = found
        return tail.range_at(p, self.vertices)

    def all_edges(self) -> EdgeSet:
        return EdgeSet.everything(self.frame)

    def edge_set(self, edges: Iterable[int]) -> EdgeSet:
        return EdgeSet.of(self.frame, edges)

    def edges(self, max_edge_index: int) -> tuple[int, ...]:
        """The edges with index at most `max_edge_index`, in increasing order."""
        return self.all_edges().members_below(max_edge_index + 1)

    def iter_edges(self) -> Iterator[int]:
        """All edges in increasing order; infinite when there are tails."""
        if not self.tails:
            yield from self.frame.exceptional
            return

        everything = self.all_edges()
        e = 0
        while True:
            if e in everything:
                yield e
            e += 1

    def largest_explicit_edge(self) -> int:
        """The largest edge index written down explicitly, i.e. an exceptional edge or a tail start."""
        return max([*self._by_edge, *(t.start for t in self.tails)], default=0)

    def source_preimage(self, vertices: IndexSet) -> EdgeSet:
        """The edges whose source lies in `vertices`."""
        if vertices.universe != self.vertices:
            msg = 'The vertex set is not over the vertices of this ultragraph'
            raise UniverseMismatch(msg)

        exceptional = tuple(x.edge for x in self.exceptional_edges if x.source in vertices)

        families: list[IndexSet] = []
        for tail in self.tails:
            source = tail.source_rule
            if isinstance(source, ConstantVertex):
                hit = source.vertex in vertices
                families.append(IndexSet.all(_POSITIONS) if hit else IndexSet.none(_POSITIONS))
            else:
                first = tail.first_vertex
                assert first is not None
                families.append(vertices.translate(-first, _POSITIONS))

        return EdgeSet(self.frame, exceptional, tuple(families))

    def vertex_set(self, members: Iterable[int]) -> IndexSet:
        return IndexSet.finite(members, self.vertices)

    def emitters(self) -> IndexSet:
        """The vertices with at least one outgoing edge."""
        result = self.vertex_set(x.source for x in self.exceptional_edges)

        for tail in self.tails:
            source = tail.source_rule
            if isinstance(source, ConstantVertex):
                result = result | IndexSet.singleton(source.vertex, self.vertices)
            else:
                first = tail.first_vertex
                assert first is not None
                result = result | IndexSet.at_least(first, self.vertices)

        return result

    def sinks(self) -> IndexSet:
        return ~self.emitters()

    def infinite_emitters(self) -> IndexSet:
        return self.vertex_set(
            t.source_rule.vertex for t in self.tails if isinstance(t.source_rule, ConstantVertex)
        )

    def regular_vertices(self) -> IndexSet:
        """The vertices `v` with `0 < |s^-1(v)| < infinity`."""
        return self.emitters() - self.infinite_emitters()

    def render(self) -> str:
        lines = [f'vertices = {self.vertices}']
        lines.extend(x.render() for x in self.exceptional_edges)
        lines.extend(t.render() for t in self.tails)

        return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class HypothesisReport:
    """
    The structural hypotheses on a presentation.

    - `h1`: there are infinitely many edges.
    - `h2`: `s^-1(r(e))` misses only finitely many edges, for every edge `e`.
    - `h3`: `s^-1(v)` is finite or cofinite, for every vertex `v`.
    - `h4`: there are no sinks.
    - `h5`: every range contains a vertex that is not a sink.

    The `*_witnesses` fields name offending edges (`h2`, `h5`) or vertices (`h3`);
    for a tail family its first edge stands in for the whole family.
    """

    h1: bool
    h2: bool
    h3: bool
    h4: bool
    h5: bool
    h2_witnesses: tuple[int, ...] = ()
    h3_witnesses: tuple[int, ...] = ()
    sinks: str = 'none'
    h5_witnesses: tuple[int, ...] = ()

    @property
    def eligible(self) -> bool:
        """Whether the hypotheses needed for the partial-action picture (H1 to H4) hold."""
        return self.h1 and self.h2 and self.h3 and self.h4

    def failed(self) -> tuple[str, ...]:
        flags = {'H1': self.h1, 'H2': self.h2, 'H3': self.h3, 'H4': self.h4, 'H5': self.h5}
        return tuple(name for name, ok in flags.items() if not ok)

    def lines(self) -> list[str]:
        def verdict(ok: bool, detail: str = '') -> str:
            return 'yes' if ok else 'no' + (f' ({detail})' if detail else '')

        return [
            f'H1 infinitely many edges: {verdict(self.h1)}',
            f'H2 s^-1(r(e))^C finite for every edge: {verdict(self.h2, _edges(self.h2_witnesses))}',
            f'H3 s^-1(v) finite or cofinite: {verdict(self.h3, _vertices(self.h3_witnesses))}',
            f'H4 no sinks: {verdict(self.h4, "sinks " + self.sinks)}',
            f'H5 every range meets a non-sink: {verdict(self.h5, _edges(self.h5_witnesses))}',
        ]


def _edges(edges: Sequence[int]) -> str:
    return ', '.join(f'e{e}' for e in edges)

def _vertices(vertices: Sequence[int]) -> str:
    return ', '.join(f'v{v}' for v in vertices)


def _tail_h2(G: UltragraphPresentation, tail: TailRule) -> bool:
    rule = tail.range_rule
    if isinstance(rule, ConstantRange):
        return G.source_preimage(rule.vertices).is_cofinite
    if isinstance(rule, UpperTail):
        # ranges shrink past any constant source vertex eventually
        return all(t.is_identity for t in G.tails)

    return False

def _tail_h5(G: UltragraphPresentation, tail: TailRule, emitters: IndexSet) -> bool:
    rule = tail.range_rule
    if isinstance(rule, ConstantRange):
        return not is_empty(intersect(rule.vertices, emitters))
    if isinstance(rule, UpperTail):
        return emitters.is_cofinite

    first = tail.first_vertex
    assert first is not None
    return is_empty(intersect(~emitters, IndexSet.at_least(first + rule.offset, G.vertices)))

@functools.lru_cache(maxsize=256)
def validate_hypotheses(G: UltragraphPresentation) -> HypothesisReport:
    emitters = G.emitters()
    sinks = ~emitters

    h2_witnesses = [
        x.edge for x in G.exceptional_edges
        if not G.source_preimage(x.range).is_cofinite
    ] + [t.start for t in G.tails if not _tail_h2(G, t)]

    h3_witnesses = sorted({
        t.source_rule.vertex
        for t in G.tails
        if isinstance(t.source_rule, ConstantVertex)
        and any(u.source_rule != t.source_rule for u in G.tails)
    })

    h5_witnesses = [
        x.edge for x in G.exceptional_edges
        if is_empty(intersect(x.range, emitters))
    ] + [t.start for t in G.tails if not _tail_h5(G, t, emitters)]

    report = HypothesisReport(
        h1=bool(G.tails),
        h2=not h2_witnesses,
        h3=not h3_witnesses,
        h4=is_empty(sinks),
        h5=not h5_witnesses,
        h2_witnesses=tuple(sorted(h2_witnesses)),
        h3_witnesses=tuple(h3_witnesses),
        sinks=sinks.render('v'),
        h5_witnesses=tuple(sorted(h5_witnesses)),
    )
    logger.debug('Hypotheses: %s', report)

    return report


@dataclass(frozen=True)
class Classification:
    is_graph: bool
    is_bouquet: bool
    sinks: IndexSet
    regular_vertices: IndexSet
    emitters: IndexSet

def _is_singleton(r: IndexSet) -> bool:
    return r.is_finite and len(r.support) == 1

@functools.lru_cache(maxsize=256)
def classify(G: UltragraphPresentation) -> Classification:
    is_graph = all(_is_singleton(x.range) for x in G.exceptional_edges) and all(
        isinstance(t.range_rule, Successor)
        or (isinstance(t.range_rule, ConstantRange) and _is_singleton(t.range_rule.vertices))
        for t in G.tails
    )

    emitters = G.emitters()

    is_bouquet = False
    if is_graph and emitters.is_finite and len(emitters.support) == 1:
        (v,) = emitters.support
        loop = IndexSet.singleton(v, G.vertices)
        is_bouquet = all(x.range == loop for x in G.exceptional_edges) and all(
            isinstance(t.range_rule, ConstantRange) and t.range_rule.vertices == loop
            for t in G.tails
        )

    return Classification(
        is_graph=is_graph,
        is_bouquet=is_bouquet,
        sinks=~emitters,
        regular_vertices=G.regular_vertices(),
        emitters=emitters,
    )


@dataclass(frozen=True)
class Satisfied:
    reason: str

@dataclass(frozen=True)
class Violated:
    loop: tuple[int, ...]

@dataclass(frozen=True)
class UnknownUpTo:
    max_loop_len: int

ConditionL = Union[Satisfied, Violated, UnknownUpTo]


def _forced_successor(G: UltragraphPresentation, e: int, sinks: IndexSet) -> int | None:
    """
    The only edge that may follow `e` along a loop without an exit, if any.

    A loop through `e` has no exit at `e` exactly when `r(e)` has no sink and
    `s^-1(r(e))` consists of the next edge alone.
    """
    r = G.range(e)
    if not is_empty(intersect(r, sinks)):
        return None

    followers = G.source_preimage(r)
    if followers.finite_cardinality() != 1:
        return None

    (f,) = followers.members()
    return f

def _rotate(loop: Sequence[int]) -> tuple[int, ...]:
    i = loop.index(min(loop))
    return tuple(loop[i:]) + tuple(loop[:i])

def check_condition_L(
    G: UltragraphPresentation,
    max_loop_len: int = 8,
    *,
    max_edge_index: int | None = None,
) -> ConditionL:
    """
    Checks whether every loop of `G` has an exit.

    Infinitely many edges together with H2 suffice. Otherwise a loop without
    an exit is a cycle of the forced-successor map. On a finite presentation
    all cycles are examined; on an infinite one, walks of length up to
    `max_loop_len` from the edges with index at most `max_edge_index` are.
    """
    if max_loop_len < 1:
        msg = '`max_loop_len` must be a positive integer'
        raise ValueError(msg)

    report = validate_hypotheses(G)
    if report.h1 and report.h2:
        return Satisfied('H1 and H2 hold')

    sinks = G.sinks()

    if G.has_finitely_many_edges:
        candidates = G.frame.exceptional
        budget = len(candidates)
    else:
        if max_edge_index is None:
            max_edge_index = G.largest_explicit_edge() + max_loop_len
        candidates = G.edges(max_edge_index)
        budget = max_loop_len

    for start in candidates:
        walk = [start]

        for _ in range(budget):
            nxt = _forced_successor(G, walk[-1], sinks)
            if nxt is None:
                break
            if nxt in walk:
                loop = walk[walk.index(nxt):]
                logger.info('Loop without exit: %s', '.'.join(f'e{e}' for e in loop))
                return Violated(_rotate(loop))

            walk.append(nxt)

    if G.has_finitely_many_edges:
        return Satisfied('every loop has an exit')

    return UnknownUpTo(max_loop_len)
