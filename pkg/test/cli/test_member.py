from __future__ import annotations

import pytest

from .utils import run, sample


@pytest.mark.parametrize(('word', 'code', 'output'), [
    ('e1.e3', 0, 'member: finite path with s^-1(r(e3)) infinite'),
    ('@', 0, 'member: empty sequence'),
    ('e1.(e3.e4)*', 0, 'member: infinite path'),
    ('e1.e2', 1, 'not-member: not a path: s(e2) ∉ r(e1)'),
])
def test_member(word: str, code: int, output: str):
    result = run('member', sample('skip_two.ug'), word)

    assert result.returncode == code, result.stderr
    assert result.stdout.splitlines() == [output]

def test_member_errors():
    assert run('member', sample('skip_two.ug'), 'x1').returncode == 2
    assert run('member', sample('missing.ug'), 'e1').returncode == 2
    assert run('member', sample('loop_exit.ug'), 'e5').returncode == 4


@pytest.mark.parametrize(('args', 'code', 'output'), [
    (['e1.e3'], 0, 'member'),
    (['e1.(e3)*'], 0, 'member'),
    (['e1.e2'], 1, 'not-member'),
    (['--alphabet-size', '3', 'e1.e3'], 1, 'not-member'),
    (['--alphabet-size', '3', '(e2.e3)*'], 0, 'member'),
])
def test_xf_member(args: list[str], code: int, output: str):
    result = run('xf-member', '--forbid', sample('skip_two.fb'), *args)

    assert result.returncode == code, result.stderr
    assert result.stdout.splitlines() == [output]

def test_xf_member_errors():
    assert run('xf-member', 'e1').returncode == 2
    assert run('xf-member', '--forbid', sample('skip_two.ug'), 'e1').returncode == 2
    assert run('xf-member', '--forbid', sample('skip_two.fb'), '--alphabet-size', '3', 'e4').returncode == 2
