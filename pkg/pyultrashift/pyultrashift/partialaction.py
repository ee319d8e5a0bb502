from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Tuple, Union

from ..errors import DefinitionInapplicable, NotInShift, OutsideDomain, ParseError, UnknownEdge
from .shiftspace import Word, in_edge_shift, is_path
from .ultragraph import UltragraphPresentation
from .vertexset import IndexSet, intersect, is_empty

__all__ = [
    'Letter', 'GroupWord', 'reduce',
    'Neutral', 'PositivePath', 'InversePath', 'Transition', 'OutsideV', 'DomainForm',
    'in_set', 'in_domain', 'theta', 'in_XA',
    'conjugation_identity_holds',
]

Letter = Tuple[int, int]
"""An edge together with an exponent of +1 or -1."""


def reduce(letters: Iterable[Letter]) -> GroupWord:
    """Cancels adjacent inverse pairs, giving the reduced word in the free group on the edges."""
    stack: list[Letter] = []
    for e, exponent in letters:
        if exponent not in (1, -1):
            msg = f'Exponents must be +1 or -1, not {exponent}'
            raise ValueError(msg)

        if stack and stack[-1] == (e, -exponent):
            stack.pop()
        else:
            stack.append((e, exponent))

    return GroupWord(tuple(stack))


@dataclass(frozen=True)
class GroupWord:
    """A reduced word in the free group generated by the edges; the empty word is `0`."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for (a, x), (b, y) in zip(self.letters, self.letters[1:]):
            if a == b and x == -y:
                msg = f'{self.letters} is not reduced'
                raise ValueError(msg)

    @classmethod
    def path(cls, edges: Iterable[int]) -> GroupWord:
        return cls(tuple((e, 1) for e in edges))

    @classmethod
    def parse(cls, text: str) -> GroupWord:
        """Parses `e1.e3.~e2` (`~` marks an inverse letter, `0` is the neutral element)."""
        stripped = text.strip()
        if stripped == '0':
            return cls()
        if not stripped:
            msg = 'Expected a group word, but got nothing (use 0 for the neutral element)'
            raise ParseError(msg)

        letters: list[Letter] = []
        for token in stripped.split('.'):
            token = token.strip()
            exponent = 1
            if token.startswith('~'):
                token, exponent = token[1:], -1

            body = token[1:] if token.startswith('e') else token
            if not body.isdigit():
                msg = f'Expected a letter such as e3 or ~e3, but got {token!r}'
                raise ParseError(msg)

            letters.append((int(body), exponent))

        return reduce(letters)

    def render(self) -> str:
        if not self.letters:
            return '0'

        return '.'.join(('~' if x < 0 else '') + f'e{e}' for e, x in self.letters)

    def __str__(self) -> str:
        return self.render()

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((e, -x) for e, x in reversed(self.letters)))

    def __mul__(self, other: GroupWord) -> GroupWord:
        return reduce(self.letters + other.letters)

    @property
    def is_neutral(self) -> bool:
        return not self.letters


@dataclass(frozen=True)
class Neutral:
    pass

@dataclass(frozen=True)
class PositivePath:
    path: tuple[int, ...]

@dataclass(frozen=True)
class InversePath:
    """The inverse of `path`."""

    path: tuple[int, ...]

@dataclass(frozen=True)
class Transition:
    """The element `a b^-1` for paths `a` and `b` whose ranges meet."""

    a: tuple[int, ...]
    b: tuple[int, ...]

@dataclass(frozen=True)
class OutsideV:
    reason: str

DomainForm = Union[Neutral, PositivePath, InversePath, Transition, OutsideV]


def _range_of_path(G: UltragraphPresentation, path: tuple[int, ...]) -> IndexSet:
    return G.range(path[-1])

def classify(G: UltragraphPresentation, w: GroupWord) -> DomainForm:
    """Matches `w` against the shape `a b^-1` with `a`, `b` paths (either possibly empty)."""
    for e, _ in w.letters:
        if not G.has_edge(e):
            raise UnknownEdge(e)

    if w.is_neutral:
        return Neutral()

    exponents = [x for _, x in w.letters]
    split = exponents.index(-1) if -1 in exponents else len(exponents)
    if any(x == 1 for x in exponents[split:]):
        return OutsideV('not of the form a.b^-1')

    a = tuple(e for e, _ in w.letters[:split])
    b = tuple(e for e, _ in reversed(w.letters[split:]))

    for path in (a, b):
        if path and not is_path(G, Word.finite(path)):
            return OutsideV(f'{Word.finite(path)} is not a path')

    if not b:
        return PositivePath(a)
    if not a:
        return InversePath(b)
    if is_empty(intersect(_range_of_path(G, a), _range_of_path(G, b))):
        return OutsideV(f'r({Word.finite(a)}) and r({Word.finite(b)}) are disjoint')

    return Transition(a, b)


def _check_in_shift(G: UltragraphPresentation, x: Word) -> None:
    if not in_edge_shift(G, x):
        msg = f'{x} is not in the edge shift'
        raise NotInShift(msg)

def _source_in(G: UltragraphPresentation, x: Word, vertices: IndexSet) -> bool:
    return G.source(x.first) in vertices

def _in_set(G: UltragraphPresentation, form: DomainForm, x: Word) -> bool:
    if isinstance(form, Neutral):
        return True
    if isinstance(form, OutsideV):
        return False
    if isinstance(form, PositivePath):
        return x.starts_with(form.path)
    if isinstance(form, InversePath):
        return x.is_empty or _source_in(G, x, _range_of_path(G, form.path))

    a, b = form.a, form.b
    if not x.starts_with(a):
        return False
    if x.length == len(a):
        return True

    meet = intersect(_range_of_path(G, a), _range_of_path(G, b))
    return _source_in(G, x.drop(len(a)), meet)

def in_set(G: UltragraphPresentation, g: GroupWord, x: Word) -> bool:
    """Whether `x` lies in `X_g`."""
    _check_in_shift(G, x)
    return _in_set(G, classify(G, g), x)

def in_domain(G: UltragraphPresentation, g: GroupWord, x: Word) -> bool:
    """Whether `x` lies in the domain `X_{g^-1}` of `theta_g`."""
    return in_set(G, g.inverse(), x)

def theta(G: UltragraphPresentation, g: GroupWord, x: Word) -> Word:
    """Applies `theta_g : X_{g^-1} -> X_g` to `x`."""
    form = classify(G, g)
    if not in_domain(G, g, x):
        kind = type(form).__name__
        msg = f'{x} is not in the domain of theta_{g} ({kind})'
        raise OutsideDomain(msg)

    if isinstance(form, Neutral):
        return x
    if isinstance(form, PositivePath):
        return x.prepend(form.path)
    if isinstance(form, InversePath):
        return x.drop(len(form.path))
    if isinstance(form, Transition):
        return x.drop(len(form.b)).prepend(form.a)

    # OutsideV has an empty domain, so in_domain already refused
    msg = f'theta_{g} has an empty domain'
    raise OutsideDomain(msg)


def in_XA(G: UltragraphPresentation, A: IndexSet, x: Word) -> bool:
    """
    Whether `x` lies in `X_A`: the words starting at a vertex of `A`, plus the
    empty sequence when `s^-1(A)^C` is finite.
    """
    _check_in_shift(G, x)

    preimage = G.source_preimage(A)
    if preimage.is_infinite and not preimage.is_cofinite:
        msg = f's^-1({A.render("v")}) and its complement are both infinite'
        raise DefinitionInapplicable(msg)

    if x.is_empty:
        return preimage.is_cofinite

    return _source_in(G, x, A)


def conjugation_identity_holds(G: UltragraphPresentation, t: GroupWord, a: GroupWord, x: Word) -> bool:
    """
    Evaluates both sides of the pointwise conjugation identity

        x in X_t and x in X_{ta}  <=>  x in X_t and theta_{t^-1}(x) in X_{t^-1} and in X_a

    and reports whether they agree.
    """
    in_t = in_set(G, t, x)
    lhs = in_t and in_set(G, t * a, x)

    if not in_t:
        return not lhs

    y = theta(G, t.inverse(), x)
    rhs = in_set(G, t.inverse(), y) and in_set(G, a, y)

    return lhs == rhs
