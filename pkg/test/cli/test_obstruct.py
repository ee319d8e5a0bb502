from __future__ import annotations

from .utils import run, sample


def fields(stdout: str) -> dict[str, str]:
    return {key: value.strip() for key, value in (line.split(':', 1) for line in stdout.splitlines())}


def test_obstruct_not_conjugate():
    result = run('obstruct', sample('skip_two.ug'), sample('bouquet.ug'))

    assert result.returncode == 3, result.stderr

    lines = fields(result.stdout)
    assert lines['verdict'] == 'NotConjugate'
    assert lines['reason'] == 'K0 differs (Z^1 vs Z^1 (+) Z/2), only one side has K0 torsion'
    assert lines['A K0'] == 'Z^1 (+) Z/2'
    assert lines['B K0'] == 'Z^1'

def test_obstruct_identical_k_theory():
    result = run('obstruct', sample('skip_two.ug'), sample('double_skip.ug'), '-t', '2')

    assert result.returncode == 0, result.stderr
    assert fields(result.stdout)['verdict'] == 'Inconclusive'

def test_obstruct_not_eligible():
    result = run('obstruct', sample('split_source.ug'), sample('skip_two.ug'))

    assert result.returncode == 0, result.stderr

    lines = fields(result.stdout)
    assert lines['reason'] == 'not eligible, failing H2, H3'
    assert lines['A K-theory'] == 'unavailable (fails H2, H3)'

def test_obstruct_errors():
    assert run('obstruct', sample('skip_two.ug')).returncode == 2
    assert run('obstruct', sample('skip_two.ug'), sample('skip_two.fb')).returncode == 2
