from __future__ import annotations

import subprocess
import sys

from ..pyultrashift.utils import PRESENTATIONS

__all__ = ['run', 'sample']


def run(*args: str) -> subprocess.CompletedProcess[str]:
    """Runs the command-line tool, capturing stdout and stderr as text."""
    return subprocess.run(
        [sys.executable, '-m', 'pyultrashift', *args],
        capture_output=True,
        encoding='utf-8',
        check=False,
    )

def sample(filename: str) -> str:
    return str(PRESENTATIONS / filename)
