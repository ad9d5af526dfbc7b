"""Allow ``python -m logmorph`` to run the command-line interface."""

from .cli import entry

entry()
