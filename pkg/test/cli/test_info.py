from __future__ import annotations

from pathlib import Path

from .utils import run, sample


def test_info():
    result = run('info', sample('skip_two.ug'))

    assert result.returncode == 0, result.stderr

    lines = result.stdout.splitlines()
    assert lines[:8] == [
        'vertices: infinite',
        'edges: infinitely many',
        'graph: no',
        'bouquet: no',
        'sinks: none',
        'emitters: all',
        'infinite emitters: none',
        'regular vertices: all',
    ]
    assert lines[-1] == 'condition (L): satisfied (H1 and H2 hold)'

def test_info_condition_L():
    assert run('info', sample('single_loop.ug')).stdout.splitlines()[-1] \
        == 'condition (L): violated (loop without exit: e1)'
    assert run('info', sample('loop_exit.ug')).stdout.splitlines()[-1] \
        == 'condition (L): satisfied (every loop has an exit)'
    assert run('info', sample('successor.ug'), '--max-loop-len', '5').stdout.splitlines()[-1] \
        == 'condition (L): unknown (no loop without exit up to length 5)'


def test_validate():
    result = run('validate', sample('skip_two.ug'))

    assert result.returncode == 0, result.stderr

    lines = result.stdout.splitlines()
    assert lines[0] == 'valid'
    assert lines[-1] == 'eligible: yes'

def test_validate_not_eligible():
    lines = run('validate', sample('split_source.ug')).stdout.splitlines()

    assert 'H3 s^-1(v) finite or cofinite: no (v1)' in lines
    assert lines[-1] == 'eligible: no'

def test_validate_malformed(tmp_path: Path):
    path = tmp_path / 'malformed.ug'
    path.write_text('vertices = infinite\nedge 1 source=v1 rang=all\n', encoding='utf-8')

    result = run('validate', str(path))

    assert result.returncode == 2
    assert result.stdout == ''
    assert 'line 2, column 18' in result.stderr

def test_validate_structural_error(tmp_path: Path):
    path = tmp_path / 'overlap.ug'
    path.write_text('edge 3 source=v1 range=all\ntail start=2 source=identity range=all\n', encoding='utf-8')

    result = run('validate', str(path))

    assert result.returncode == 2
    assert 'must start after every exceptional edge' in result.stderr
