"""Entry point to run latpoly as a module."""
from . import __name__
from .cli import run

run(prog_name=__name__)
