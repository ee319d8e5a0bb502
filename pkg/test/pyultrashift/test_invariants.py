from __future__ import annotations

from itertools import product

from hypothesis import given, strategies as st
import pytest

from pyultrashift.errors import UsageError
from pyultrashift.pyultrashift import (
    ALPHABET,
    ForbiddenSet,
    Inconclusive,
    KGroups,
    NotConjugate,
    ObstructionReport,
    UltragraphPresentation,
    Unavailable,
    Universe,
    Word,
    graph_sft_implies_full_check,
    in_edge_shift,
    in_XF,
    is_full_shift_edge,
    obstruction,
)

from .utils import BOUQUET, DOUBLE_SKIP, SINGLE_LOOP, SKIP_TWO, SPLIT_SOURCE, SUCCESSOR, UPPER_TAIL, st_graph_presentation


def fields(report: ObstructionReport) -> dict[str, str]:
    return {key: value.strip() for key, value in (line.split(':', 1) for line in report.lines())}


def test_is_full_shift_edge():
    assert is_full_shift_edge(BOUQUET) is True
    assert is_full_shift_edge(SKIP_TWO) is False
    assert is_full_shift_edge(SUCCESSOR) is False

def st_word_over(letters: list[int]) -> st.SearchStrategy[Word]:
    letter = st.sampled_from(letters)
    finite = st.lists(letter, max_size=5).map(Word.finite)
    periodic = st.builds(
        Word.eventually_periodic,
        st.lists(letter, max_size=3),
        st.lists(letter, min_size=1, max_size=3),
    )
    return st.one_of(finite, periodic)

@pytest.mark.parametrize(('G', 'alphabet'), [
    (BOUQUET, ALPHABET),
    (SINGLE_LOOP, Universe(start=1, size=1)),
])
@given(data=st.data())
def test_bouquet_edge_shift_is_full_shift(G: UltragraphPresentation, alphabet: Universe, data: st.DataObject):
    assert is_full_shift_edge(G) is True

    x = data.draw(st_word_over(list(G.edges(6))))
    assert in_edge_shift(G, x) == in_XF(ForbiddenSet(), alphabet, x)

@pytest.mark.parametrize('G', [SKIP_TWO, UPPER_TAIL, DOUBLE_SKIP, SUCCESSOR])
def test_non_bouquet_edge_shift_is_not_full_shift(G: UltragraphPresentation):
    assert is_full_shift_edge(G) is False

    edges = G.edges(6)
    full_shift = Universe(start=edges[0])
    words = [Word.finite(w) for n in (1, 2) for w in product(edges, repeat=n)]

    rejected = [x for x in words if not in_edge_shift(G, x)]
    assert rejected
    assert all(in_XF(ForbiddenSet(), full_shift, x) for x in rejected)

def test_graph_sft_implies_full_check():
    assert graph_sft_implies_full_check(BOUQUET) == 'confirmed'
    assert graph_sft_implies_full_check(SUCCESSOR) == 'vacuous'

    with pytest.raises(UsageError):
        graph_sft_implies_full_check(SKIP_TWO)
    with pytest.raises(UsageError):
        graph_sft_implies_full_check(SINGLE_LOOP)

@given(st_graph_presentation())
def test_graph_sft_is_full_shift(G: UltragraphPresentation):
    assert graph_sft_implies_full_check(G) != 'counterexample'


def test_obstruction_not_conjugate():
    report = obstruction(SKIP_TWO, BOUQUET, disable_progbar=True)

    assert report.verdict == NotConjugate('K0 differs (Z^1 vs Z^1 (+) Z/2), only one side has K0 torsion')
    assert isinstance(report.k_theory[0], KGroups)

    lines = fields(report)
    assert lines['verdict'] == 'NotConjugate'
    assert lines['A hypotheses'] == 'all hold'
    assert lines['A eligible'] == 'yes'
    assert lines['A sft'] == 'sft forbid { e1.e1; e1.e2 }'
    assert lines['A K0'] == 'Z^1 (+) Z/2'
    assert lines['B sft'] == 'sft forbid { }'
    assert lines['B K0'] == 'Z^1'
    assert lines['B K1'] == 'Z^0'

def test_obstruction_is_symmetric():
    forward = obstruction(SKIP_TWO, BOUQUET, threads=2, disable_progbar=True)
    backward = obstruction(BOUQUET, SKIP_TWO, threads=2, disable_progbar=True)

    assert forward.verdict == backward.verdict
    assert forward.k_theory == backward.k_theory[::-1]

def test_obstruction_identical_k_theory():
    report = obstruction(SKIP_TWO, DOUBLE_SKIP, disable_progbar=True)

    assert report.verdict == Inconclusive('identical K-theory (Z^1 (+) Z/2 and Z^0)')

def test_obstruction_not_eligible():
    report = obstruction(SKIP_TWO, SPLIT_SOURCE, disable_progbar=True)

    assert report.verdict == Inconclusive('not eligible, failing H2, H3')
    assert report.k_theory[1] == Unavailable('fails H2, H3')

    lines = fields(report)
    assert lines['B hypotheses'] == 'failing H2, H3'
    assert lines['B eligible'] == 'no'
    assert lines['B K-theory'] == 'unavailable (fails H2, H3)'
    assert lines['B sft'].startswith('not-sft (')

def test_obstruction_k_theory_unavailable():
    report = obstruction(UPPER_TAIL, SKIP_TWO, disable_progbar=True)

    assert isinstance(report.verdict, Inconclusive)
    assert report.verdict.reason.startswith('K-theory unavailable: the tail starting at e1 has edge-dependent ranges')
    assert isinstance(report.k_theory[0], Unavailable)
