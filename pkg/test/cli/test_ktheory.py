from __future__ import annotations

from .utils import run, sample


def test_ktheory():
    result = run('ktheory', sample('skip_two.ug'))

    assert result.returncode == 0, result.stderr
    assert result.stdout.splitlines() == ['K0 = Z^1 (+) Z/2', 'K1 = Z^0']

def test_ktheory_bouquet():
    result = run('ktheory', sample('bouquet.ug'), '-t', '2')

    assert result.returncode == 0, result.stderr
    assert result.stdout.splitlines() == ['K0 = Z^1', 'K1 = Z^0']

def test_ktheory_emit_matrix():
    result = run('ktheory', sample('skip_two.ug'), '--n', '2', '--emit-matrix')

    assert result.returncode == 0, result.stderr
    assert result.stdout.splitlines() == [
        'boundary matrix (n=2):',
        '   |  v1  v2  v3 tau',
        'v1 |   1   0  -1  -1',
        'v2 |  -1   0  -1  -1',
        'v3 |  -1  -1   0  -1',
        '',
        'K0 = Z^1 (+) Z/2',
        'K1 = Z^0',
    ]

def test_ktheory_unsupported_tail():
    result = run('ktheory', sample('upper_tail.ug'))

    assert result.returncode == 4
    assert result.stdout == ''
    assert 'edge-dependent ranges' in result.stderr

def test_ktheory_invalid_arguments():
    assert run('ktheory', sample('skip_two.ug'), '--n', '1').returncode == 2
    assert run('ktheory', sample('skip_two.ug'), '--n', '10', '--n-max', '11').returncode == 2
