from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable
from dataclasses import dataclass
import re
from typing import Literal, Union

from ..errors import IndexOutOfUniverse, ParseError, UniverseMismatch

__all__ = [
    'Kind', 'Cardinality', 'INFINITE_CARDINALITY',
    'Universe', 'INFINITE_UNIVERSE',
    'IndexSet',
    'union', 'intersect', 'complement', 'difference', 'contains',
    'is_empty', 'is_infinite', 'finite_cardinality',
    'closure',
]

Kind = Literal['finite', 'cofinite']

INFINITE_CARDINALITY = 'infinite'
Cardinality = Union[int, Literal['infinite']]


@dataclass(frozen=True)
class Universe:
    """
    The ambient countable index set `{start, start + 1, ...}`,
    truncated to `size` elements when `size` is given.
    """

    start: int = 0
    size: int | None = None

    def __post_init__(self) -> None:
        if self.start < 0:
            msg = f'The first index of a universe must be non-negative, not {self.start}'
            raise ValueError(msg)
        if self.size is not None and self.size < 0:
            msg = f'The size of a universe must be non-negative, not {self.size}'
            raise ValueError(msg)

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    @property
    def stop(self) -> int | None:
        """One past the last index, or `None` for an infinite universe."""
        return None if self.size is None else self.start + self.size

    def __contains__(self, i: object) -> bool:
        if not isinstance(i, int):
            return False

        stop = self.stop
        return i >= self.start and (stop is None or i < stop)

    def indices(self) -> range:
        stop = self.stop
        if stop is None:
            msg = 'Cannot enumerate an infinite universe'
            raise ValueError(msg)

        return range(self.start, stop)

    def check(self, i: int) -> int:
        if i not in self:
            msg = f'Index {i} lies outside the universe {self}'
            raise IndexOutOfUniverse(msg)

        return i

    def __str__(self) -> str:
        return 'infinite' if self.size is None else f'finite({self.size})'


INFINITE_UNIVERSE = Universe()


_SET_PATTERN = re.compile(r'^\s*(finite|cofinite)\s*\((.*)\)\s*$')


@dataclass(frozen=True)
class IndexSet:
    """
    A finite or cofinite subset of a :class:`Universe`.

    `support` lists the members of a finite set and the excluded indices of a
    cofinite one. The representation is canonical, so two instances are equal
    exactly when they denote the same set. Over a finite universe every set is
    stored in finite form.

    Use :meth:`finite`, :meth:`cofinite`, :meth:`all` and :meth:`none` to build
    instances; the constructor only accepts canonical data.
    """

    kind: Kind
    support: tuple[int, ...] = ()
    universe: Universe = INFINITE_UNIVERSE

    def __post_init__(self) -> None:
        if self.kind not in ('finite', 'cofinite'):
            msg = f'Unknown kind of set: {self.kind!r}'
            raise ValueError(msg)
        if any(a >= b for a, b in zip(self.support, self.support[1:])):
            msg = f'The support must be strictly increasing, but got {self.support}'
            raise ValueError(msg)
        for i in self.support:
            self.universe.check(i)
        if self.universe.is_finite and self.kind == 'cofinite':
            msg = 'Sets over a finite universe must be stored in finite form'
            raise ValueError(msg)

    @classmethod
    def finite(cls, members: Iterable[int] = (), universe: Universe = INFINITE_UNIVERSE) -> IndexSet:
        return cls('finite', tuple(sorted(set(members))), universe)

    @classmethod
    def cofinite(cls, excluded: Iterable[int] = (), universe: Universe = INFINITE_UNIVERSE) -> IndexSet:
        excluded = set(excluded)

        if universe.is_finite:
            return cls.finite((i for i in universe.indices() if i not in excluded), universe)

        return cls('cofinite', tuple(sorted(excluded)), universe)

    @classmethod
    def all(cls, universe: Universe = INFINITE_UNIVERSE) -> IndexSet:
        return cls.cofinite((), universe)

    @classmethod
    def none(cls, universe: Universe = INFINITE_UNIVERSE) -> IndexSet:
        return cls.finite((), universe)

    @classmethod
    def singleton(cls, i: int, universe: Universe = INFINITE_UNIVERSE) -> IndexSet:
        return cls.finite((i,), universe)

    @classmethod
    def at_least(cls, i: int, universe: Universe = INFINITE_UNIVERSE) -> IndexSet:
        """The set `{j : j >= i}` within the universe."""
        stop = universe.stop
        if stop is not None:
            return cls.finite(range(max(i, universe.start), stop), universe)

        return cls.cofinite(range(universe.start, max(i, universe.start)), universe)

    @classmethod
    def parse(cls, text: str, universe: Universe = INFINITE_UNIVERSE, *, prefix: str = '') -> IndexSet:
        """
        Parses `all`, `none`, `finite(i1,i2,...)` or `cofinite(i1,i2,...)`.

        Each index may carry `prefix` (e.g. `v3` when `prefix='v'`).
        """
        stripped = text.strip()
        if stripped == 'all':
            return cls.all(universe)
        if stripped == 'none':
            return cls.none(universe)

        match = _SET_PATTERN.match(stripped)
        if match is None:
            msg = f'Expected all, none, finite(...) or cofinite(...), but got {stripped!r}'
            raise ParseError(msg)

        kind, body = match.groups()
        indices = [_parse_index(token, prefix) for token in body.split(',') if token.strip()]
        if len(set(indices)) != len(indices):
            msg = f'Duplicate index in {stripped!r}'
            raise ParseError(msg)

        try:
            if kind == 'finite':
                return cls.finite(indices, universe)

            return cls.cofinite(indices, universe)
        except IndexOutOfUniverse as exc:
            raise ParseError(exc.message) from exc

    def render(self, prefix: str = '') -> str:
        if self.kind == 'cofinite' and not self.support:
            return 'all'
        if self.kind == 'finite' and not self.support:
            return 'none'
        if self.universe.is_finite and len(self.support) == self.universe.size:
            return 'all'

        return f'{self.kind}(' + ','.join(f'{prefix}{i}' for i in self.support) + ')'

    def __str__(self) -> str:
        return self.render()

    @property
    def is_finite(self) -> bool:
        return self.kind == 'finite'

    @property
    def is_cofinite(self) -> bool:
        return self.kind == 'cofinite'

    def members(self) -> tuple[int, ...]:
        if self.kind != 'finite':
            msg = f'Cannot enumerate the infinite set {self}'
            raise ValueError(msg)

        return self.support

    def excluded(self) -> tuple[int, ...]:
        """The indices of the universe outside this set, when there are finitely many."""
        if self.kind == 'cofinite':
            return self.support

        return complement(self).members()

    def boundary(self) -> tuple[int, ...]:
        """The finite data determining the set: its members or its excluded indices."""
        return self.support

    def members_below(self, stop: int) -> tuple[int, ...]:
        """The members that are smaller than `stop`, in increasing order."""
        if self.kind == 'finite':
            return self.support[:bisect_left(self.support, stop)]

        excluded = set(self.support)
        return tuple(i for i in range(self.universe.start, stop) if i not in excluded)

    def translate(self, offset: int, universe: Universe = INFINITE_UNIVERSE) -> IndexSet:
        """
        The image of this set under `i -> i + offset`, restricted to `universe`.

        Both universes must be infinite so that the shifted remainder stays cofinite.
        """
        if self.universe.is_finite or universe.is_finite:
            msg = 'Translation is only defined between infinite universes'
            raise ValueError(msg)

        shifted = (i + offset for i in self.support)
        kept = [i for i in shifted if i in universe]

        if self.kind == 'finite':
            return IndexSet.finite(kept, universe)

        # indices the translation does not reach are excluded as well
        unreached = range(universe.start, max(universe.start, self.universe.start + offset))
        return IndexSet.cofinite([*kept, *unreached], universe)

    def __contains__(self, i: object) -> bool:
        if not isinstance(i, int):
            return False

        return contains(self, i)

    def __or__(self, other: IndexSet) -> IndexSet:
        return union(self, other)

    def __and__(self, other: IndexSet) -> IndexSet:
        return intersect(self, other)

    def __sub__(self, other: IndexSet) -> IndexSet:
        return difference(self, other)

    def __invert__(self) -> IndexSet:
        return complement(self)

    def __le__(self, other: IndexSet) -> bool:
        return is_empty(difference(self, other))


def _parse_index(token: str, prefix: str) -> int:
    token = token.strip()
    if prefix and token.startswith(prefix):
        token = token[len(prefix):]

    if not token.isdigit():
        msg = f'Expected a non-negative index, but got {token!r}'
        raise ParseError(msg)

    return int(token)

def _check_same_universe(a: IndexSet, b: IndexSet) -> Universe:
    if a.universe != b.universe:
        msg = f'Cannot combine sets over different universes ({a.universe} and {b.universe})'
        raise UniverseMismatch(msg)

    return a.universe


def union(a: IndexSet, b: IndexSet) -> IndexSet:
    universe = _check_same_universe(a, b)
    sa, sb = set(a.support), set(b.support)

    if a.kind == 'finite' and b.kind == 'finite':
        return IndexSet.finite(sa | sb, universe)
    if a.kind == 'cofinite' and b.kind == 'cofinite':
        return IndexSet.cofinite(sa & sb, universe)
    if a.kind == 'finite':
        return IndexSet.cofinite(sb - sa, universe)

    return IndexSet.cofinite(sa - sb, universe)

def intersect(a: IndexSet, b: IndexSet) -> IndexSet:
    universe = _check_same_universe(a, b)
    sa, sb = set(a.support), set(b.support)

    if a.kind == 'finite' and b.kind == 'finite':
        return IndexSet.finite(sa & sb, universe)
    if a.kind == 'cofinite' and b.kind == 'cofinite':
        return IndexSet.cofinite(sa | sb, universe)
    if a.kind == 'finite':
        return IndexSet.finite(sa - sb, universe)

    return IndexSet.finite(sb - sa, universe)

def complement(a: IndexSet) -> IndexSet:
    if a.universe.is_finite:
        return IndexSet.cofinite(a.support, a.universe)
    if a.kind == 'finite':
        return IndexSet('cofinite', a.support, a.universe)

    return IndexSet('finite', a.support, a.universe)

def difference(a: IndexSet, b: IndexSet) -> IndexSet:
    return intersect(a, complement(b))

def contains(a: IndexSet, i: int) -> bool:
    if i not in a.universe:
        return False

    pos = bisect_left(a.support, i)
    found = pos < len(a.support) and a.support[pos] == i

    return found if a.kind == 'finite' else not found

def is_empty(a: IndexSet) -> bool:
    return a.kind == 'finite' and not a.support

def is_infinite(a: IndexSet) -> bool:
    return a.kind == 'cofinite'

def finite_cardinality(a: IndexSet) -> Cardinality:
    if a.kind == 'cofinite':
        return INFINITE_CARDINALITY

    return len(a.support)


def closure(generators: Iterable[IndexSet]) -> frozenset[IndexSet]:
    """
    Closes a finite family of sets under pairwise unions and intersections.

    This is how the elements of the generated algebra of vertex sets are built;
    the result is finite since the family generates a finite distributive lattice.
    """
    family = set(generators)
    frontier = set(family)

    while frontier:
        produced: set[IndexSet] = set()
        for a in frontier:
            for b in family:
                produced.add(union(a, b))
                produced.add(intersect(a, b))

        frontier = produced - family
        family |= frontier

    return frozenset(family)
