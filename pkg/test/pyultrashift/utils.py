from __future__ import annotations

from itertools import combinations
from math import gcd
from pathlib import Path
from typing import AbstractSet, Iterator, Sequence

from hypothesis import note, strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from pyultrashift.linalg import IntMatrix
from pyultrashift.presentation import load_presentation
from pyultrashift.pyultrashift import (
    VERTEX_UNIVERSE,
    ConstantRange,
    ConstantVertex,
    ExceptionalEdge,
    GroupWord,
    Identity,
    IndexSet,
    Successor,
    TailRule,
    UltragraphPresentation,
    Universe,
    Word,
    enumerate_paths,
    in_edge_shift,
    infinite_continuation,
    reduce,
)

__all__ = [
    'PRESENTATIONS', 'load_sample',
    'SKIP_TWO', 'BOUQUET', 'UPPER_TAIL', 'SPLIT_SOURCE', 'DOUBLE_SKIP', 'SUCCESSOR',
    'SINGLE_LOOP', 'LOOP_EXIT',
    'st_universe', 'st_index_set', 'window', 'as_bits',
    'st_presentation', 'st_graph_presentation',
    'st_int_matrix', 'minor_gcd_invariant_factors',
    'sample_points', 'sample_paths', 'st_point', 'st_group_word',
    'assert_sets_equal',
]

PRESENTATIONS = Path(__file__).resolve().parents[2] / 'presentations'

def load_sample(name: str) -> UltragraphPresentation:
    return load_presentation(PRESENTATIONS / f'{name}.ug')

SKIP_TWO = load_sample('skip_two')
BOUQUET = load_sample('bouquet')
UPPER_TAIL = load_sample('upper_tail')
SPLIT_SOURCE = load_sample('split_source')
DOUBLE_SKIP = load_sample('double_skip')
SUCCESSOR = load_sample('successor')
SINGLE_LOOP = load_sample('single_loop')
LOOP_EXIT = load_sample('loop_exit')


# Every generated support lies below `start + _SPAN`
_SPAN = 10

def st_universe() -> st.SearchStrategy[Universe]:
    starts = st.integers(min_value=0, max_value=3)
    return st.one_of(
        starts.map(lambda start: Universe(start=start)),
        st.builds(Universe, start=starts, size=st.integers(min_value=0, max_value=_SPAN)),
    )

def st_index_set(universe: Universe, *, nonempty: bool = False) -> st.SearchStrategy[IndexSet]:
    stop = universe.start + _SPAN if universe.stop is None else universe.stop
    indices = st.lists(st.integers(min_value=universe.start, max_value=max(universe.start, stop - 1)), max_size=6) \
        .map(lambda xs: [i for i in xs if i in universe])

    sets = st.one_of(
        indices.map(lambda xs: IndexSet.finite(xs, universe)),
        indices.map(lambda xs: IndexSet.cofinite(xs, universe)),
    )
    if nonempty:
        sets = sets.filter(lambda a: a.kind == 'cofinite' or bool(a.support))

    return sets

def window(universe: Universe) -> range:
    """A block of indices that also reaches past every generated support."""
    stop = universe.start + 2 * _SPAN if universe.stop is None else universe.stop
    return range(universe.start, stop)

def as_bits(a: IndexSet) -> frozenset[int]:
    """The members of `a` within :func:`window`, computed from the raw representation."""
    support = set(a.support)
    return frozenset(i for i in window(a.universe) if (i in support) == (a.kind == 'finite'))

def assert_sets_equal(actual: IndexSet, expected: AbstractSet[int], *, infinite: bool):
    note(f'actual={actual}, expected={sorted(expected)}')

    assert as_bits(actual) == expected, 'Incorrect members'
    assert actual.is_cofinite == infinite, 'Incorrect kind'


def _st_vertex(max_vertex: int) -> st.SearchStrategy[int]:
    return st.integers(min_value=VERTEX_UNIVERSE.start, max_value=max_vertex)

def _st_range() -> st.SearchStrategy[IndexSet]:
    return st_index_set(VERTEX_UNIVERSE, nonempty=True)

@st.composite
def st_presentation(draw: st.DrawFn, *, max_exceptional: int = 3) -> UltragraphPresentation:
    """Exceptional edges followed by one identity tail with a constant range."""
    k = draw(st.integers(min_value=0, max_value=max_exceptional))

    exceptional = tuple(
        ExceptionalEdge(e, draw(_st_vertex(4)), draw(_st_range()))
        for e in range(1, k + 1)
    )
    tail = TailRule(k + 1, Identity(draw(st.one_of(st.none(), _st_vertex(4)))), ConstantRange(draw(_st_range())))

    G = UltragraphPresentation(VERTEX_UNIVERSE, exceptional, (tail,))
    note(G.render())

    return G

@st.composite
def st_graph_presentation(draw: st.DrawFn) -> UltragraphPresentation:
    """Graphs with infinitely many edges: every range is a single vertex."""
    k = draw(st.integers(min_value=0, max_value=3))

    def singleton() -> IndexSet:
        return IndexSet.singleton(draw(_st_vertex(4)), VERTEX_UNIVERSE)

    exceptional = tuple(ExceptionalEdge(e, draw(_st_vertex(4)), singleton()) for e in range(1, k + 1))

    shape = draw(st.sampled_from(['bouquet', 'constant', 'identity', 'successor']))
    if shape == 'bouquet':
        v = draw(_st_vertex(4))
        loop = IndexSet.singleton(v, VERTEX_UNIVERSE)
        exceptional = tuple(ExceptionalEdge(x.edge, v, loop) for x in exceptional)
        tail = TailRule(k + 1, ConstantVertex(v), ConstantRange(loop))
    elif shape == 'constant':
        tail = TailRule(k + 1, ConstantVertex(draw(_st_vertex(4))), ConstantRange(singleton()))
    elif shape == 'identity':
        tail = TailRule(k + 1, Identity(), ConstantRange(singleton()))
    else:
        tail = TailRule(k + 1, Identity(), Successor(draw(st.integers(min_value=0, max_value=2))))

    G = UltragraphPresentation(VERTEX_UNIVERSE, exceptional, (tail,))
    note(G.render())

    return G


def st_int_matrix(
    *,
    min_size: int = 0,
    max_rows: int = 6,
    max_cols: int = 6,
    max_abs: int = 9,
) -> st.SearchStrategy[IntMatrix]:
    entries = st.integers(min_value=-max_abs, max_value=max_abs)

    @st.composite
    def build(draw: st.DrawFn) -> IntMatrix:
        m = draw(st.integers(min_value=min_size, max_value=max_rows))
        n = draw(st.integers(min_value=min_size, max_value=max_cols))

        return IntMatrix.of([[draw(entries) for _ in range(n)] for _ in range(m)], n)

    return build()

def minor_gcd_invariant_factors(M: IntMatrix) -> tuple[int, ...]:
    """`d_k = D_k / D_{k-1}` where `D_k` is the gcd of the `k x k` minors."""
    rows = M.to_lists()
    factors: list[int] = []
    previous = 1

    def minors(k: int) -> Iterator[int]:
        for r in combinations(range(M.nrows), k):
            for c in combinations(range(M.ncols), k):
                yield int(DomainMatrix([[ZZ(rows[i][j]) for j in c] for i in r], (k, k), ZZ).det())

    for k in range(1, min(M.shape) + 1):
        D = 0
        for minor in minors(k):
            D = gcd(D, minor)
            # no gcd drops below 1
            if D == 1:
                break
        if D == 0:
            break

        factors.append(D // previous)
        previous = D

    return tuple(factors)


def sample_paths(G: UltragraphPresentation, *, max_length: int = 3, max_edge_index: int = 6) -> list[Word]:
    return [w for n in range(1, max_length + 1) for w in enumerate_paths(G, n, max_edge_index)]

def sample_points(G: UltragraphPresentation, *, max_length: int = 3, max_edge_index: int = 6) -> list[Word]:
    """Points of the edge shift: the empty sequence, finite paths, and infinite paths continuing them."""
    points: list[Word] = [] if G.has_finitely_many_edges else [Word.empty()]

    for path in sample_paths(G, max_length=max_length, max_edge_index=max_edge_index):
        if in_edge_shift(G, path):
            points.append(path)

        continuation = infinite_continuation(G, path, max_edge_index=max_edge_index)
        if continuation is not None:
            points.append(continuation)

    return points

def st_point(points: Sequence[Word]) -> st.SearchStrategy[Word]:
    return st.sampled_from(points)

def st_group_word(paths: Sequence[Word], edges: Sequence[int]) -> st.SearchStrategy[GroupWord]:
    """Elements `a b^-1` built from paths, mixed with arbitrary reduced words."""
    path_or_empty = st.one_of(st.just(()), st.sampled_from([p.letters() for p in paths]))
    quotients = st.builds(
        lambda a, b: GroupWord.path(a) * GroupWord.path(b).inverse(),
        path_or_empty,
        path_or_empty,
    )
    raw = st.lists(st.tuples(st.sampled_from(edges), st.sampled_from([1, -1])), max_size=4).map(reduce)

    return st.one_of(quotients, raw)
