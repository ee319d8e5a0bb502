import click

from .forbidden import forbidden
from .from_forbidden import from_forbidden
from .info import info
from .ktheory import ktheory
from .member import member
from .obstruct import obstruct
from .paths import paths
from .shift import shift
from .theta import theta
from .validate import validate
from .xf_member import xf_member

__all__ = ['cli']

@click.group()
def cli():
    """Command-line tool for ultragraph edge shifts and their K-theory."""
    pass

cli.command(info)
cli.command(validate)
cli.command(ktheory)
cli.command(member)
cli.command(xf_member)
cli.command(shift)
cli.command(theta)
cli.command(from_forbidden)
cli.command(forbidden)
cli.command(obstruct)
cli.command(paths)
