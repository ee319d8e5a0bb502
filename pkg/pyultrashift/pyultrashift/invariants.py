from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Literal, Tuple, Union

from ..errors import UltraShiftError, UsageError
from ..func import map_mt_with_tqdm
from ..logger import get_logger, logging_at
from .ktheory import KGroups, k_theory
from .shiftspace import FinitelyForbidden, ForbiddenVerdict, edge_shift_forbidden_set
from .ultragraph import HypothesisReport, UltragraphPresentation, classify, validate_hypotheses

__all__ = [
    'is_full_shift_edge', 'SftCheck', 'graph_sft_implies_full_check',
    'Unavailable', 'NotConjugate', 'Inconclusive', 'Verdict',
    'ObstructionReport', 'obstruction',
]

logger = get_logger()


def is_full_shift_edge(G: UltragraphPresentation) -> bool:
    """Whether `G` is a bouquet of loops, so that its edge shift is the full shift."""
    return classify(G).is_bouquet


SftCheck = Literal['vacuous', 'confirmed', 'counterexample']

def graph_sft_implies_full_check(G: UltragraphPresentation) -> SftCheck:
    """
    Checks on one graph that an edge shift of finite type is the full shift.

    Returns `'vacuous'` when the edge shift is not of finite type and
    `'confirmed'` when it is and `G` is a bouquet. `'counterexample'` would
    contradict the statement being checked.
    """
    if not classify(G).is_graph:
        msg = 'The presentation is not a graph: some range has more than one vertex'
        raise UsageError(msg)
    if G.has_finitely_many_edges:
        msg = 'The presentation must have infinitely many edges'
        raise UsageError(msg)

    if not isinstance(edge_shift_forbidden_set(G), FinitelyForbidden):
        return 'vacuous'
    if is_full_shift_edge(G):
        return 'confirmed'

    logger.error('Found a graph of finite type that is not a bouquet:\n%s', G.render())
    return 'counterexample'


@dataclass(frozen=True)
class Unavailable:
    reason: str

@dataclass(frozen=True)
class NotConjugate:
    reason: str

@dataclass(frozen=True)
class Inconclusive:
    reason: str

Verdict = Union[NotConjugate, Inconclusive]
KTheoryStatus = Union[KGroups, Unavailable]


def _render_sft(verdict: ForbiddenVerdict) -> str:
    if isinstance(verdict, FinitelyForbidden):
        return f'sft {verdict.forbidden}'

    return f'not-sft ({verdict.reason})'


@dataclass(frozen=True)
class ObstructionReport:
    """
    Compares two presentations through the invariants that conjugacy preserves.

    When both presentations satisfy H1 to H4, conjugate edge shifts have
    isomorphic C*-algebras, so different K-groups refute conjugacy. The report
    never claims conjugacy. Refuting only conjugacy via an eventually finite
    periodic map, as needed when one side ranges over every graph, requires
    more than these two fixed presentations.
    """

    hypotheses: Tuple[HypothesisReport, HypothesisReport]
    sft: Tuple[ForbiddenVerdict, ForbiddenVerdict]
    k_theory: Tuple[KTheoryStatus, KTheoryStatus]
    verdict: Verdict

    def lines(self) -> list[str]:
        verdict = self.verdict
        rows: list[tuple[str, str]] = [
            ('verdict', type(verdict).__name__),
            ('reason', verdict.reason),
        ]

        for side, report, sft, groups in zip('AB', self.hypotheses, self.sft, self.k_theory):
            failed = report.failed()
            rows.append((f'{side} hypotheses', 'all hold' if not failed else 'failing ' + ', '.join(failed)))
            rows.append((f'{side} eligible', 'yes' if report.eligible else 'no'))
            rows.append((f'{side} sft', _render_sft(sft)))
            if isinstance(groups, Unavailable):
                rows.append((f'{side} K-theory', f'unavailable ({groups.reason})'))
            else:
                rows.append((f'{side} K0', str(groups.k0)))
                rows.append((f'{side} K1', str(groups.k1)))

        width = max(len(key) for key, _ in rows)
        return [f'{key + ":":<{width + 1}} {value}' for key, value in rows]


def _side_k_theory(
    report: HypothesisReport,
    G: UltragraphPresentation,
    *,
    n_max: int,
) -> KTheoryStatus:
    if not report.eligible:
        return Unavailable('fails ' + ', '.join(h for h in report.failed() if h != 'H5'))

    try:
        return k_theory(G, n_max=n_max, logger_level=None, disable_progbar=True)
    except UltraShiftError as e:
        return Unavailable(e.message)

def _compare(groups: Tuple[KGroups, KGroups]) -> str | None:
    a, b = groups
    differences = []

    for name, x, y in (('K0', a.k0, b.k0), ('K1', a.k1, b.k1)):
        if x == y:
            continue

        first, second = sorted([str(x), str(y)])
        difference = f'{name} differs ({first} vs {second})'
        if x.has_torsion != y.has_torsion:
            difference += f', only one side has {name} torsion'
        differences.append(difference)

    return '; '.join(differences) if differences else None

def _verdict(
    hypotheses: Tuple[HypothesisReport, HypothesisReport],
    statuses: Tuple[KTheoryStatus, KTheoryStatus],
) -> Verdict:
    if not all(h.eligible for h in hypotheses):
        failed = sorted({f for h in hypotheses for f in h.failed() if f != 'H5'})
        return Inconclusive('not eligible, failing ' + ', '.join(failed))

    unavailable = sorted({s.reason for s in statuses if isinstance(s, Unavailable)})
    if unavailable:
        return Inconclusive('K-theory unavailable: ' + '; '.join(unavailable))

    a, b = statuses
    assert isinstance(a, KGroups)
    assert isinstance(b, KGroups)

    difference = _compare((a, b))
    if difference is None:
        return Inconclusive(f'identical K-theory ({a.k0} and {a.k1})')

    return NotConjugate(difference)

def obstruction(
    G1: UltragraphPresentation,
    G2: UltragraphPresentation,
    *,
    n_max: int = 16,
    threads: int = 1,
    logger_level: int | None = logging.INFO,
    disable_progbar: bool = False,
) -> ObstructionReport:
    """
    Looks for an invariant that separates the edge shifts of `G1` and `G2`.

    The K-theory of both sides is computed concurrently when `threads > 1`.
    Ineligible sides and failed K-theory computations are reported, not raised.
    """
    with logging_at(logger_level):
        return _obstruction(G1, G2, n_max=n_max, threads=threads, disable_progbar=disable_progbar)

def _obstruction(
    G1: UltragraphPresentation,
    G2: UltragraphPresentation,
    *,
    n_max: int,
    threads: int,
    disable_progbar: bool,
) -> ObstructionReport:
    hypotheses = (validate_hypotheses(G1), validate_hypotheses(G2))
    sft = (edge_shift_forbidden_set(G1), edge_shift_forbidden_set(G2))

    results = map_mt_with_tqdm(
        list(zip(hypotheses, (G1, G2))),
        lambda side: _side_k_theory(*side, n_max=n_max),
        n_jobs=min(threads, 2),
        desc=None if disable_progbar else 'Computing K-theory',
    )
    statuses = (results[0], results[1])

    verdict = _verdict(hypotheses, statuses)
    logger.info('Verdict: %s (%s)', type(verdict).__name__, verdict.reason)

    return ObstructionReport(hypotheses, sft, statuses, verdict)
