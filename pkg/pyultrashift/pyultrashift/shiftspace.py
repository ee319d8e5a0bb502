from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
import math
import re
from typing import Union

from ..errors import (
    CharacterizationInapplicable,
    IndexOutOfUniverse,
    NotInShift,
    ParseError,
    UnknownEdge,
    UsageError,
)
from ..logger import get_logger
from .ultragraph import (
    ConstantRange,
    ExceptionalEdge,
    Identity,
    TailRule,
    UltragraphPresentation,
    validate_hypotheses,
)
from .vertexset import IndexSet, Universe

__all__ = [
    'ALPHABET', 'Word', 'shift',
    'Cylinder', 'cylinder_contains',
    'ForbiddenSet', 'in_XF',
    'is_path', 'find_path_violation',
    'Membership', 'edge_shift_membership', 'in_edge_shift',
    'FinitelyForbidden', 'InfinitelyForbidden', 'ForbiddenVerdict', 'edge_shift_forbidden_set',
    'ultragraph_from_one_step',
    'enumerate_paths', 'infinite_continuation', 'extension_witnesses',
]

logger = get_logger()

ALPHABET = Universe(start=1)
"""The default alphabet `{a1, a2, ...}`."""

_LETTER_PATTERN = re.compile(r'^[ae]?(\d+)$')
_PERIODIC_PATTERN = re.compile(r'^(.*?)\.?\(([^()]*)\)\*$')


def _parse_letter(token: str) -> int:
    match = _LETTER_PATTERN.match(token.strip())
    if match is None:
        msg = f'Expected a letter such as e3, but got {token.strip()!r}'
        raise ParseError(msg)

    return int(match.group(1))

def _parse_letters(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()

    return tuple(_parse_letter(token) for token in text.split('.'))

def _primitive_root(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            return period[:d]

    return period


@dataclass(frozen=True)
class Word:
    """
    A point of the full shift: the empty sequence, a finite word, or an
    eventually periodic infinite word `prefix . period . period ...`.

    Infinite words are kept canonical (primitive period, shortest prefix), so
    equality of instances is equality of sequences.
    """

    prefix: tuple[int, ...] = ()
    period: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.prefix):
            msg = f'Letters must be non-negative, but got {self.prefix}'
            raise ValueError(msg)

        period = self.period
        if period is not None:
            if not period:
                msg = 'The period of an infinite word must be nonempty'
                raise ValueError(msg)
            if any(a < 0 for a in period):
                msg = f'Letters must be non-negative, but got {period}'
                raise ValueError(msg)
            if _primitive_root(period) != period:
                msg = f'The period {period} is a proper power'
                raise ValueError(msg)
            if self.prefix and self.prefix[-1] == period[-1]:
                msg = 'The prefix of an infinite word must be as short as possible'
                raise ValueError(msg)

    @classmethod
    def empty(cls) -> Word:
        return cls()

    @classmethod
    def finite(cls, letters: Iterable[int]) -> Word:
        return cls(tuple(letters))

    @classmethod
    def eventually_periodic(cls, prefix: Iterable[int], period: Iterable[int]) -> Word:
        prefix, period = tuple(prefix), _primitive_root(tuple(period))
        if not period:
            msg = 'The period of an infinite word must be nonempty'
            raise ValueError(msg)

        while prefix and prefix[-1] == period[-1]:
            prefix, period = prefix[:-1], (prefix[-1], *period[:-1])

        return cls(prefix, period)

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parses `@` (empty), `e1.e5` (finite) or `e1.e2.(e3.e4)*` (eventually periodic)."""
        stripped = text.strip()
        if stripped == '@':
            return cls.empty()
        if not stripped:
            msg = 'Expected a word, but got nothing (use @ for the empty sequence)'
            raise ParseError(msg)

        match = _PERIODIC_PATTERN.match(stripped)
        if match is None:
            return cls.finite(_parse_letters(stripped))

        prefix, period = match.groups()
        letters = _parse_letters(period)
        if not letters:
            msg = f'Empty period in {stripped!r}'
            raise ParseError(msg)

        return cls.eventually_periodic(_parse_letters(prefix), letters)

    def render(self, prefix: str = 'e') -> str:
        if self.is_empty:
            return '@'

        head = [f'{prefix}{a}' for a in self.prefix]
        if self.period is not None:
            head.append('(' + '.'.join(f'{prefix}{a}' for a in self.period) + ')*')

        return '.'.join(head)

    def __str__(self) -> str:
        return self.render()

    @property
    def is_empty(self) -> bool:
        return not self.prefix and self.period is None

    @property
    def is_finite(self) -> bool:
        """Whether the word has finite length (the empty sequence included)."""
        return self.period is None

    @property
    def is_infinite(self) -> bool:
        return self.period is not None

    @property
    def length(self) -> float:
        return math.inf if self.period is not None else len(self.prefix)

    def letters(self) -> tuple[int, ...]:
        if self.period is not None:
            msg = f'The infinite word {self} has no finite list of letters'
            raise ValueError(msg)

        return self.prefix

    def alphabet_used(self) -> tuple[int, ...]:
        return tuple(sorted({*self.prefix, *(self.period or ())}))

    def __getitem__(self, n: int) -> int:
        """The letter at 0-based position `n`."""
        if n < 0:
            msg = 'Negative positions are not supported'
            raise IndexError(msg)
        if n < len(self.prefix):
            return self.prefix[n]
        if self.period is None:
            msg = f'Position {n} is past the end of {self}'
            raise IndexError(msg)

        return self.period[(n - len(self.prefix)) % len(self.period)]

    def take(self, n: int) -> tuple[int, ...]:
        """The first `n` letters, or all of them if the word is shorter."""
        if self.period is None:
            return self.prefix[:n]

        return tuple(self[i] for i in range(n))

    @property
    def first(self) -> int:
        return self[0]

    @property
    def last(self) -> int:
        if self.period is not None or not self.prefix:
            msg = f'{self} has no last letter'
            raise ValueError(msg)

        return self.prefix[-1]

    def starts_with(self, letters: Sequence[int]) -> bool:
        return self.length >= len(letters) and self.take(len(letters)) == tuple(letters)

    def drop(self, n: int) -> Word:
        """The word without its first `n` letters."""
        if self.period is None:
            return Word(self.prefix[n:])
        if n <= len(self.prefix):
            return Word(self.prefix[n:], self.period)

        k = (n - len(self.prefix)) % len(self.period)
        return Word.eventually_periodic((), self.period[k:] + self.period[:k])

    def prepend(self, letters: Sequence[int]) -> Word:
        if self.period is None:
            return Word(tuple(letters) + self.prefix)

        return Word.eventually_periodic(tuple(letters) + self.prefix, self.period)

    def append(self, letters: Sequence[int]) -> Word:
        return Word(self.letters() + tuple(letters))

    def adjacent_pairs(self) -> list[tuple[int, int]]:
        """Every pair of consecutive letters, each distinct pair of an infinite word once."""
        if self.period is None:
            letters = self.prefix
        else:
            letters = self.prefix + self.period + self.period[:1]

        return list(zip(letters, letters[1:]))


def shift(x: Word) -> Word:
    """The shift map: drops the first letter; the empty sequence stays empty."""
    return x.drop(1)


@dataclass(frozen=True)
class Cylinder:
    """The words extending `stem` whose next letter, if any, is not in `excluded`."""

    stem: Word
    excluded: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.stem.is_infinite:
            msg = 'The stem of a cylinder must be finite'
            raise ValueError(msg)
        if len(set(self.excluded)) != len(self.excluded):
            msg = f'Duplicate excluded letters: {self.excluded}'
            raise ValueError(msg)

def cylinder_contains(c: Cylinder, y: Word) -> bool:
    stem = c.stem.letters()
    if not y.starts_with(stem):
        return False

    # a word equal to the stem has no next letter to exclude
    if y.length == len(stem):
        return True

    return y[len(stem)] not in c.excluded


@dataclass(frozen=True)
class ForbiddenSet:
    words: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if any(not w for w in self.words):
            msg = 'Forbidden words must be nonempty'
            raise ValueError(msg)
        if list(self.words) != sorted(set(self.words)):
            msg = 'Forbidden words must be sorted and duplicate-free; use ForbiddenSet.of'
            raise ValueError(msg)

    @classmethod
    def of(cls, words: Iterable[Sequence[int]]) -> ForbiddenSet:
        return cls(tuple(sorted({tuple(w) for w in words})))

    @property
    def max_block_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def occurs_in(self, letters: Sequence[int]) -> tuple[int, ...] | None:
        """The first forbidden block occurring in `letters`, if any."""
        forbidden = set(self.words)
        lengths = sorted({len(w) for w in self.words})

        for i in range(len(letters)):
            for n in lengths:
                block = tuple(letters[i:i + n])
                if len(block) == n and block in forbidden:
                    return block

        return None

    @classmethod
    def parse(cls, text: str) -> ForbiddenSet:
        """
        Parses `forbid { e1.e1; e1.e2 }`.

        The `forbid` keyword is optional, `,` may separate words and letters may
        be written `a1a2` as well as `e1.e2`.
        """
        lines = [line.split('#', 1)[0] for line in text.splitlines()]
        body = ' '.join(lines).strip()
        if body.startswith('forbid'):
            body = body[len('forbid'):].strip()
        if not (body.startswith('{') and body.endswith('}')):
            msg = 'Expected a forbidden set of the form forbid { e1.e1; e1.e2 }'
            raise ParseError(msg)

        words: list[tuple[int, ...]] = []
        for token in re.split(r'[;,]', body[1:-1]):
            token = token.strip()
            if not token:
                continue
            if '.' not in token and token.count('a') > 1:
                token = '.'.join('a' + part for part in token.split('a') if part)
            words.append(_parse_letters(token))

        return cls.of(words)

    def render(self, prefix: str = 'e') -> str:
        body = '; '.join(Word.finite(w).render(prefix) for w in self.words)
        return f'forbid {{ {body} }}' if body else 'forbid { }'

    def __str__(self) -> str:
        return self.render()


def _check_alphabet(alphabet: Universe, x: Word) -> None:
    for a in x.alphabet_used():
        if a not in alphabet:
            msg = f'Letter {a} is not in the alphabet'
            raise IndexOutOfUniverse(msg)

def in_XF(F: ForbiddenSet, alphabet: Universe, x: Word) -> bool:
    """
    Decides membership of `x` in the shift space `X_F` over `alphabet`.

    A finite word over an infinite alphabet belongs to `X_F` as soon as it
    avoids `F`: since `F` is finite, every letter not occurring in `F` can be
    appended and repeated forever, giving infinitely many extensions.
    Over a finite alphabet the shift space has no finite words.
    """
    _check_alphabet(alphabet, x)

    if x.period is not None:
        window = x.take(len(x.prefix) + 2 * len(x.period) + F.max_block_length)
        return F.occurs_in(window) is None

    if alphabet.is_finite:
        return False

    return F.occurs_in(x.prefix) is None


def _check_edges(G: UltragraphPresentation, x: Word) -> None:
    for e in x.alphabet_used():
        if not G.has_edge(e):
            raise UnknownEdge(e)

def find_path_violation(G: UltragraphPresentation, x: Word) -> tuple[int, int] | None:
    """The first consecutive pair `(e, f)` of `x` with `s(f)` outside `r(e)`, if any."""
    _check_edges(G, x)

    for e, f in x.adjacent_pairs():
        if G.source(f) not in G.range(e):
            return e, f

    return None

def is_path(G: UltragraphPresentation, x: Word) -> bool:
    return find_path_violation(G, x) is None


@dataclass(frozen=True)
class Membership:
    member: bool
    reason: str

    def __bool__(self) -> bool:
        return self.member

def edge_shift_membership(G: UltragraphPresentation, x: Word) -> Membership:
    """
    Decides whether `x` lies in the edge shift of `G`, with the reason.

    The edge shift consists of the infinite paths, the empty sequence (when
    there are infinitely many edges) and the finite paths `a` for which
    `s^-1(r(a))` is infinite, where `r(a)` is the range of the last edge.
    """
    report = validate_hypotheses(G)
    if not report.h5:
        witnesses = ', '.join(f'e{e}' for e in report.h5_witnesses)
        msg = f'membership cannot be decided: the range of {witnesses} consists of sinks'
        raise CharacterizationInapplicable(msg)

    violation = find_path_violation(G, x)
    if violation is not None:
        e, f = violation
        return Membership(False, f'not a path: s(e{f}) ∉ r(e{e})')

    if x.is_infinite:
        return Membership(True, 'infinite path')
    if G.has_finitely_many_edges:
        return Membership(False, 'finite sequence in an ultragraph with finitely many edges')
    if x.is_empty:
        return Membership(True, 'empty sequence')

    last = x.last
    if G.source_preimage(G.range(last)).is_infinite:
        return Membership(True, f'finite path with s^-1(r(e{last})) infinite')

    return Membership(False, f'finite path with s^-1(r(e{last})) finite')

def in_edge_shift(G: UltragraphPresentation, x: Word) -> bool:
    return edge_shift_membership(G, x).member


@dataclass(frozen=True)
class FinitelyForbidden:
    forbidden: ForbiddenSet

@dataclass(frozen=True)
class InfinitelyForbidden:
    reason: str

ForbiddenVerdict = Union[FinitelyForbidden, InfinitelyForbidden]

def edge_shift_forbidden_set(G: UltragraphPresentation) -> ForbiddenVerdict:
    """
    Computes `F = {ef : s(f) not in r(e)}` when it is finite.

    `F` is finite exactly when the edge shift is a shift of finite type.
    """
    pairs: list[tuple[int, int]] = []

    for x in G.exceptional_edges:
        missing = ~G.source_preimage(x.range)
        if not missing.is_finite:
            return InfinitelyForbidden(f'infinitely many edges cannot follow e{x.edge}')

        pairs.extend((x.edge, f) for f in missing.members())

    for tail in G.tails:
        rule = tail.range_rule
        if not isinstance(rule, ConstantRange):
            return InfinitelyForbidden(
                f'the edges of the tail starting at e{tail.start} have varying ranges '
                'and each of them cannot be followed by some edge',
            )

        missing = ~G.source_preimage(rule.vertices)
        if not missing.is_empty:
            return InfinitelyForbidden(
                f'every edge of the tail starting at e{tail.start} cannot be followed by {missing}',
            )

    return FinitelyForbidden(ForbiddenSet.of(pairs))


def ultragraph_from_one_step(F: ForbiddenSet, alphabet: Universe = ALPHABET) -> UltragraphPresentation:
    """
    Builds an ultragraph whose edge shift is the 1-step shift `X_F`.

    There is one vertex `v_a` and one edge `e_a` per letter `a`, with
    `s(e_a) = v_a` and `r(e_a) = {v_b : ab not in F}`. Letters up to the
    largest first letter of `F` become exceptional edges; the rest form an
    identity tail whose range is every vertex.
    """
    if alphabet.is_finite:
        msg = 'Only 1-step shifts over an infinite alphabet can be converted'
        raise UsageError(msg)

    for w in F.words:
        if len(w) != 2:
            msg = f'Only words of length 2 can be converted, but got {Word.finite(w)}'
            raise UsageError(msg)
        for a in w:
            if a not in alphabet:
                msg = f'Letter {a} is not in the alphabet'
                raise IndexOutOfUniverse(msg)

    vertices = Universe(start=alphabet.start)
    tail_start = max((a for a, _ in F.words), default=alphabet.start - 1) + 1

    exceptional = tuple(
        ExceptionalEdge(a, a, IndexSet.cofinite((b for a2, b in F.words if a2 == a), vertices))
        for a in range(alphabet.start, tail_start)
    )
    tail = TailRule(tail_start, Identity(), ConstantRange(IndexSet.all(vertices)))

    return UltragraphPresentation(vertices, exceptional, (tail,))


def _followers(G: UltragraphPresentation, edges: Sequence[int]) -> dict[int, list[int]]:
    return {e: [f for f in edges if G.source(f) in G.range(e)] for e in edges}

def enumerate_paths(G: UltragraphPresentation, length: int, max_edge_index: int) -> list[Word]:
    """All paths of `length` edges with index at most `max_edge_index`, in lexicographic order."""
    if length < 1:
        msg = 'Paths must have at least one edge'
        raise UsageError(msg)

    edges = G.edges(max_edge_index)
    followers = _followers(G, edges)

    paths: list[Word] = []

    def extend(path: list[int]) -> None:
        if len(path) == length:
            paths.append(Word.finite(path))
            return

        for f in followers[path[-1]]:
            extend([*path, f])

    for e in edges:
        extend([e])

    return paths


def _path_to_cycle(start: int, followers: dict[int, list[int]]) -> tuple[list[int], list[int]] | None:
    """A path from `start` into a cycle, as (the part before the cycle, the cycle)."""
    path: list[int] = []
    on_path: dict[int, int] = {}
    finished: set[int] = set()

    def visit(u: int) -> tuple[list[int], list[int]] | None:
        on_path[u] = len(path)
        path.append(u)

        for v in followers[u]:
            if v in on_path:
                return path[:on_path[v]], path[on_path[v]:]
            if v not in finished:
                found = visit(v)
                if found is not None:
                    return found

        path.pop()
        del on_path[u]
        finished.add(u)
        return None

    return visit(start)

def _default_bound(G: UltragraphPresentation, x: Word, slack: int) -> int:
    return max([G.largest_explicit_edge(), *x.alphabet_used()]) + slack

def infinite_continuation(
    G: UltragraphPresentation,
    x: Word,
    *,
    max_edge_index: int | None = None,
) -> Word | None:
    """
    Extends the finite path `x` to an eventually periodic infinite path.

    Only edges with index at most `max_edge_index` are used for the
    extension; `None` means no continuation was found within that bound.
    """
    if x.is_infinite:
        msg = f'{x} is already infinite'
        raise UsageError(msg)
    if not is_path(G, x):
        msg = f'{x} is not a path'
        raise NotInShift(msg)

    if max_edge_index is None:
        max_edge_index = _default_bound(G, x, 2)

    edges = G.edges(max_edge_index)
    followers = _followers(G, edges)

    starts = [x.last] if not x.is_empty else list(edges)
    for start in starts:
        if start not in followers:
            followers[start] = [f for f in edges if G.source(f) in G.range(start)]

        found = _path_to_cycle(start, followers)
        if found is not None:
            before, cycle = found
            return Word.eventually_periodic(x.prefix[:-1] + tuple(before), cycle)

    return None

def extension_witnesses(
    G: UltragraphPresentation,
    alpha: Word,
    count: int = 5,
    *,
    max_edge_index: int | None = None,
) -> list[tuple[int, Word]]:
    """
    Exhibits up to `count` edges `a` such that `alpha . a` stays in the edge
    shift, each paired with an infinite path extending `alpha . a`.

    This is finite evidence that a finite word of the shift space has
    infinitely many one-letter extensions; it proves nothing by itself.
    """
    if count < 1:
        msg = '`count` must be a positive integer'
        raise ValueError(msg)
    if not alpha.is_finite or not in_edge_shift(G, alpha):
        msg = f'{alpha} is not a finite word of the edge shift'
        raise NotInShift(msg)

    if max_edge_index is None:
        max_edge_index = _default_bound(G, alpha, 2 * count)

    if alpha.is_empty:
        candidates = G.edges(max_edge_index)
    else:
        candidates = G.source_preimage(G.range(alpha.last)).members_below(max_edge_index + 1)

    witnesses: list[tuple[int, Word]] = []
    for a in candidates:
        extended = alpha.append((a,))
        if not in_edge_shift(G, extended):
            continue

        continuation = infinite_continuation(G, extended, max_edge_index=max_edge_index)
        if continuation is not None:
            witnesses.append((a, continuation))
            if len(witnesses) == count:
                break

    if len(witnesses) < count:
        logger.warning('Found only %d of %d extensions of %s', len(witnesses), count, alpha)

    return witnesses
