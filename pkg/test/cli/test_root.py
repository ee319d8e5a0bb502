import subprocess
import sys

import pytest

COMMANDS = [
    'info', 'validate', 'ktheory', 'member', 'xf-member', 'shift', 'theta',
    'from-forbidden', 'forbidden', 'obstruct', 'paths',
]


def test_help():
    assert subprocess.call([sys.executable, '-m', 'pyultrashift', '--help']) == 0
    assert subprocess.call(['pyultrashift', '--help']) == 0

@pytest.mark.parametrize('command', COMMANDS)
def test_command_help(command: str):
    assert subprocess.call([sys.executable, '-m', 'pyultrashift', command, '--help']) == 0

def test_unknown_command():
    assert subprocess.call([sys.executable, '-m', 'pyultrashift', 'frobnicate']) == 2
