from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
import functools
import logging

from ..errors import (
    NonRegularVertex,
    NotFinitelyGenerated,
    NotStabilized,
    TailNotSupported,
    TrackedSetTooSmall,
    UsageError,
)
from ..func import map_mt_with_tqdm
from ..linalg import IntMatrix, SmithForm, smith_normal_form, solve_row_combination
from ..logger import get_logger, logging_at
from .ultragraph import ConstantRange, ConstantVertex, UltragraphPresentation, classify
from .vertexset import IndexSet

__all__ = [
    'ZGFunction', 'FPAbelianGroup', 'BoundaryMatrix', 'KGroups',
    'chi', 'delta', 'delta_relation',
    'tracked_vertices', 'boundary_matrix',
    'default_truncation', 'k_groups_at', 'k_theory', 'k0', 'k1',
    'IntMatrix', 'SmithForm', 'smith_normal_form', 'in_image',
]

logger = get_logger()


@dataclass(frozen=True)
class ZGFunction:
    """
    An integer function on the vertices that is constant off the tracked set.

    `tail` is its value on the untracked vertices; it stays 0 when every
    vertex is tracked.
    """

    tracked: tuple[int, ...]
    coefficients: tuple[int, ...]
    tail: int = 0

    def __post_init__(self) -> None:
        if len(self.tracked) != len(self.coefficients):
            msg = 'Every tracked vertex needs exactly one coefficient'
            raise ValueError(msg)
        if any(a >= b for a, b in zip(self.tracked, self.tracked[1:])):
            msg = 'Tracked vertices must be strictly increasing'
            raise ValueError(msg)

    def _check_tracked(self, other: ZGFunction) -> None:
        if self.tracked != other.tracked:
            msg = 'Functions over different tracked sets cannot be combined'
            raise ValueError(msg)

    def __add__(self, other: ZGFunction) -> ZGFunction:
        self._check_tracked(other)
        return ZGFunction(
            self.tracked,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
            self.tail + other.tail,
        )

    def __neg__(self) -> ZGFunction:
        return ZGFunction(self.tracked, tuple(-a for a in self.coefficients), -self.tail)

    def __sub__(self, other: ZGFunction) -> ZGFunction:
        return self + (-other)

    def __rmul__(self, k: int) -> ZGFunction:
        return ZGFunction(self.tracked, tuple(k * a for a in self.coefficients), k * self.tail)

    def __call__(self, v: int) -> int:
        if v in self.tracked:
            return self.coefficients[self.tracked.index(v)]

        return self.tail

    def vector(self, *, with_tail: bool) -> tuple[int, ...]:
        return (*self.coefficients, self.tail) if with_tail else self.coefficients

    def render(self) -> str:
        return '(' + ','.join(map(str, self.coefficients)) + f' | tau:{self.tail})'

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class FPAbelianGroup:
    """`Z^free_rank (+) Z/d1 (+) ... (+) Z/dk` with `1 < d1 | d2 | ... | dk`."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            msg = 'The free rank must be non-negative'
            raise ValueError(msg)
        if any(d <= 1 for d in self.torsion):
            msg = f'Invariant factors must exceed 1, but got {self.torsion}'
            raise ValueError(msg)
        if any(b % a != 0 for a, b in zip(self.torsion, self.torsion[1:])):
            msg = f'Invariant factors must divide each other in order, but got {self.torsion}'
            raise ValueError(msg)

    @classmethod
    def cokernel(cls, ambient_rank: int, factors: Iterable[int]) -> FPAbelianGroup:
        """The quotient of `Z^ambient_rank` by a lattice with the given nonzero invariant factors."""
        factors = tuple(factors)
        return cls(ambient_rank - len(factors), tuple(d for d in factors if d > 1))

    @property
    def has_torsion(self) -> bool:
        return bool(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def render(self) -> str:
        return ' (+) '.join([f'Z^{self.free_rank}', *(f'Z/{d}' for d in self.torsion)])

    def __str__(self) -> str:
        return self.render()


def _check_tracked_set(T: Sequence[int]) -> tuple[int, ...]:
    tracked = tuple(T)
    if list(tracked) != sorted(set(tracked)):
        msg = 'The tracked set must be strictly increasing'
        raise ValueError(msg)

    return tracked

def chi(A: IndexSet, T: Sequence[int]) -> ZGFunction:
    """The indicator function of `A` in the basis of `T`."""
    tracked = _check_tracked_set(T)

    escaped = sorted(set(A.boundary()) - set(tracked))
    if escaped:
        msg = f'the tracked set misses {", ".join(f"v{v}" for v in escaped)} needed for {A.render("v")}'
        raise TrackedSetTooSmall(msg)

    return ZGFunction(
        tracked,
        tuple(int(v in A) for v in tracked),
        int(A.is_cofinite),
    )

def delta(v: int, T: Sequence[int]) -> ZGFunction:
    tracked = _check_tracked_set(T)
    if v not in tracked:
        msg = f'the tracked set misses v{v}'
        raise TrackedSetTooSmall(msg)

    return ZGFunction(tracked, tuple(int(u == v) for u in tracked), 0)


def _check_supported(G: UltragraphPresentation) -> None:
    for tail in G.tails:
        if not isinstance(tail.range_rule, ConstantRange):
            msg = (
                f'the tail starting at e{tail.start} has edge-dependent ranges, '
                'for which no finite model of the range functions is available'
            )
            raise TailNotSupported(msg)

def delta_relation(G: UltragraphPresentation, v: int, T: Sequence[int]) -> ZGFunction:
    """The boundary `delta_v - sum(chi_{r(e)} for e in s^-1(v))` of a regular vertex."""
    _check_supported(G)

    if v not in classify(G).regular_vertices:
        msg = f'v{v} is not a regular vertex'
        raise NonRegularVertex(msg)

    result = delta(v, T)
    for e in G.source_preimage(IndexSet.singleton(v, G.vertices)).members():
        result = result - chi(G.range(e), T)

    return result


def tracked_vertices(G: UltragraphPresentation, n: int) -> tuple[int, ...]:
    """
    The truncated basis: an initial block of vertices covering every vertex
    the presentation mentions, every sink, and the first `n` vertices of
    the identity tails.
    """
    _check_supported(G)

    vertices = G.vertices
    if vertices.is_finite:
        return tuple(vertices.indices())

    sinks = G.sinks()
    if sinks.is_cofinite:
        msg = 'infinitely many vertices are sinks, so the K-theory is not finitely generated'
        raise NotFinitelyGenerated(msg)

    mentioned = {*sinks.boundary()}
    for x in G.exceptional_edges:
        mentioned.add(x.source)
        mentioned.update(x.range.boundary())

    firsts: list[int] = []
    for tail in G.tails:
        source, target = tail.source_rule, tail.range_rule
        if isinstance(source, ConstantVertex):
            mentioned.add(source.vertex)
        else:
            first = tail.first_vertex
            assert first is not None
            firsts.append(first)
            mentioned.add(first - 1)
        if isinstance(target, ConstantRange):
            mentioned.update(target.vertices.boundary())

    # a finite set of sinks means some identity tail exists
    top = max(max(mentioned, default=vertices.start), min(firsts) + n - 1)
    return tuple(range(vertices.start, top + 1))


@dataclass(frozen=True)
class BoundaryMatrix:
    """The boundary map on a truncated basis: one row per tracked regular vertex."""

    matrix: IntMatrix
    rows: tuple[int, ...]
    columns: tuple[int, ...]
    has_tail_column: bool

    def column_labels(self) -> list[str]:
        return [f'v{v}' for v in self.columns] + (['tau'] if self.has_tail_column else [])

    def render(self) -> str:
        labels = self.column_labels()
        row_labels = [f'v{v}' for v in self.rows]

        width = max([len(s) for s in labels] + [len(str(a)) for row in self.matrix.rows for a in row] + [1])
        head = max([len(s) for s in row_labels] + [1])

        lines = [' ' * head + ' |' + ''.join(f' {s:>{width}}' for s in labels)]
        lines.extend(
            f'{label:<{head}} |' + ''.join(f' {a:>{width}}' for a in row)
            for label, row in zip(row_labels, self.matrix.rows)
        )

        return '\n'.join(lines)


def boundary_matrix(G: UltragraphPresentation, n: int) -> BoundaryMatrix:
    if n < 2:
        msg = f'The truncation parameter must be at least 2, not {n}'
        raise UsageError(msg)

    T = tracked_vertices(G, n)
    with_tail = not G.vertices.is_finite

    regular = classify(G).regular_vertices
    rows = tuple(v for v in T if v in regular)
    if not rows:
        logger.info('No tracked vertex is regular; the boundary map has no rows')

    matrix = IntMatrix.of(
        (delta_relation(G, v, T).vector(with_tail=with_tail) for v in rows),
        len(T) + int(with_tail),
    )

    return BoundaryMatrix(matrix, rows, T, with_tail)


@dataclass(frozen=True)
class KGroups:
    """The K-groups computed at truncation `n`; `n` takes no part in comparisons."""

    k0: FPAbelianGroup
    k1: FPAbelianGroup
    n: int = field(default=0, compare=False)

    def lines(self) -> list[str]:
        return [f'K0 = {self.k0}', f'K1 = {self.k1}']


@functools.lru_cache(maxsize=256)
def k_groups_at(G: UltragraphPresentation, n: int) -> KGroups:
    """`K0 = coker` and `K1 = ker` of the boundary matrix truncated at `n`."""
    M = boundary_matrix(G, n).matrix
    factors = smith_normal_form(M).invariant_factors()

    groups = KGroups(
        FPAbelianGroup.cokernel(M.ncols, factors),
        # a subgroup of a free abelian group is free
        FPAbelianGroup(M.nrows - len(factors)),
        n,
    )
    logger.debug('Truncation n=%d (%dx%d): K0 = %s, K1 = %s', n, M.nrows, M.ncols, groups.k0, groups.k1)

    return groups

def default_truncation(G: UltragraphPresentation) -> int:
    return len(G.exceptional_edges) + 2

def k_theory(
    G: UltragraphPresentation,
    *,
    n: int | None = None,
    n_max: int = 16,
    threads: int = 1,
    logger_level: int | None = logging.INFO,
    disable_progbar: bool = False,
) -> KGroups:
    """
    Computes `K0` and `K1` of the ultragraph C*-algebra of `G`.

    The boundary map is truncated at `n`, `n + 1` and `n + 2` and the common
    value is returned once the three agree. Otherwise the window slides
    until `n + 2` exceeds `n_max`, at which point :class:`NotStabilized` is
    raised with the last three candidates.

    The logger runs at `logger_level` for the duration of the call.
    """
    with logging_at(logger_level):
        return _stabilized_k_theory(G, n=n, n_max=n_max, threads=threads, disable_progbar=disable_progbar)

def _stabilized_k_theory(
    G: UltragraphPresentation,
    *,
    n: int | None,
    n_max: int,
    threads: int,
    disable_progbar: bool,
) -> KGroups:
    start = default_truncation(G) if n is None else n
    if start < 2:
        msg = f'The truncation parameter must be at least 2, not {start}'
        raise UsageError(msg)
    if start + 2 > n_max:
        msg = f'n_max={n_max} leaves no room for three truncations starting at n={start}'
        raise UsageError(msg)

    _check_supported(G)

    while True:
        window = [start, start + 1, start + 2]
        candidates = map_mt_with_tqdm(
            window,
            functools.partial(k_groups_at, G),
            n_jobs=threads,
            desc=None if disable_progbar else f'Truncating at n={start}..{start + 2}',
        )

        if all(c == candidates[0] for c in candidates):
            logger.info('K-theory stabilized at n=%d: %s', start, '; '.join(candidates[0].lines()))
            return candidates[0]

        if start + 3 > n_max:
            msg = f'K-theory did not stabilize up to n={n_max}: ' + ', '.join(
                f'n={m}: {c.k0} / {c.k1}' for m, c in zip(window, candidates)
            )
            raise NotStabilized(msg, candidates)

        logger.warning('K-theory differs across n=%d..%d; sliding the window', start, start + 2)
        start += 1

def k0(G: UltragraphPresentation, **kwargs: object) -> FPAbelianGroup:
    return k_theory(G, **kwargs).k0  # pyright: ignore[reportArgumentType]

def k1(G: UltragraphPresentation, **kwargs: object) -> FPAbelianGroup:
    return k_theory(G, **kwargs).k1  # pyright: ignore[reportArgumentType]


def in_image(M: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """
    Whether the row vector `b` is an integer combination of the rows of `M`.

    Returns the coefficients as a certificate, or `None` when no integer
    combination exists.
    """
    return solve_row_combination(M, b)
