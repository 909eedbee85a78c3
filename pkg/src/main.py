"""
Module: main.py
Part of the Restriction Stability Toolkit.

Package-level ``__main__`` shim so the toolkit runs as::

    python -m src.main <subcommand> ...

It delegates to ``restriction_cli.main()``, which owns argument parsing,
dispatch and exit codes.
"""
import sys

from .restriction_cli import main as cli_main


if __name__ == "__main__":
    sys.exit(cli_main())
