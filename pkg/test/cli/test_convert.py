from __future__ import annotations

from pathlib import Path

from .utils import run, sample


def test_from_forbidden():
    result = run('from-forbidden', sample('skip_two.fb'))

    assert result.returncode == 0, result.stderr
    assert result.stdout == Path(sample('skip_two.ug')).read_text(encoding='utf-8').split('\n', 3)[3]

def test_from_forbidden_round_trip(tmp_path: Path):
    converted = tmp_path / 'converted.ug'
    converted.write_text(run('from-forbidden', sample('skip_two.fb')).stdout, encoding='utf-8')

    result = run('forbidden', str(converted))

    assert result.returncode == 0, result.stderr
    assert result.stdout.splitlines() == ['forbid { e1.e1; e1.e2 }']

def test_from_forbidden_longer_words(tmp_path: Path):
    path = tmp_path / 'longer.fb'
    path.write_text('forbid { e1.e2.e3 }', encoding='utf-8')

    assert run('from-forbidden', str(path)).returncode == 2

def test_forbidden():
    result = run('forbidden', sample('double_skip.ug'))

    assert result.returncode == 0, result.stderr
    assert result.stdout.splitlines() == ['forbid { e0.e2; e1.e0; e1.e1; e1.e2; e2.e0; e2.e1; e2.e2 }']

def test_forbidden_not_sft():
    result = run('forbidden', sample('upper_tail.ug'))

    assert result.returncode == 0, result.stderr
    assert result.stdout.startswith('not-sft: the edges of the tail starting at e1 have varying ranges')


def test_shift():
    assert run('shift', 'e1.(e2.e3)*').stdout.splitlines() == ['(e2.e3)*']
    assert run('shift', 'e1').stdout.splitlines() == ['@']
    assert run('shift', '@').stdout.splitlines() == ['@']
    assert run('shift', 'e1.').returncode == 2

def test_theta():
    result = run('theta', sample('skip_two.ug'), 'e2.~e1', 'e1.e3.(e3)*')

    assert result.returncode == 0, result.stderr
    assert result.stdout.splitlines() == ['e2.(e3)*']

def test_theta_errors():
    assert run('theta', sample('skip_two.ug'), 'e2.~e1', 'e2').returncode == 4
    assert run('theta', sample('skip_two.ug'), '0', 'e1.e2').returncode == 2
    assert run('theta', sample('skip_two.ug'), 'e2.~', 'e1').returncode == 2


def test_paths():
    result = run('paths', sample('skip_two.ug'), '--len', '2', '--max-edge', '3')

    assert result.returncode == 0, result.stderr
    assert result.stdout.splitlines() == ['e1.e3', 'e2.e1', 'e2.e2', 'e2.e3', 'e3.e1', 'e3.e2', 'e3.e3']

def test_paths_errors():
    assert run('paths', sample('skip_two.ug'), '--len', '0', '--max-edge', '3').returncode == 2
    assert run('paths', sample('skip_two.ug'), '--len', '2').returncode == 2
