"""
ABCS Workbench
Copyright (C) 2026 ABCS Workbench contributors

This program is free software: you can redistribute it and/or modify it under the terms of the GNU General Public License
as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty
of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public License for more details.

You should have received a copy of the GNU General Public License along with this program.  If not, see https://www.gnu.org/licenses/.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .toolbox import TOOLS
from .util import CapacityError, DomainError, ParseError, WorkbenchError
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_CAPACITY = 3


def build_parser() -> tuple[argparse.ArgumentParser, dict]:
    parser = argparse.ArgumentParser(
        prog="abcs-workbench",
        description="Evaluate, target, learn and stress approval-based committee scoring rules",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)
    tools = {}
    for tool_class in TOOLS:
        tool = tool_class()
        subparser = subparsers.add_parser(
            tool.command,
            help=tool.description,
            description=tool.description,
        )
        tool.add_arguments(subparser)
        tools[tool.command] = tool
    return parser, tools


def run(argv: list[str] | None = None) -> int:
    """Runs one subcommand and returns its exit status.

    Usage errors, unreadable input and values outside a rule's domain give 2, capacity
    refusals give 3. Diagnostics go to standard error.
    """
    parser, tools = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code is None else int(err.code)

    tool = tools[args.command]
    try:
        return tool.run(**tool.collect_kwargs(args)) or 0
    except CapacityError as err:
        print(f"abcs-workbench: refused: {err}", file=sys.stderr)
        return EXIT_CAPACITY
    except WorkbenchError as err:
        if isinstance(err.original_exception, CapacityError):
            print(f"abcs-workbench: refused: {err.original_exception}", file=sys.stderr)
            return EXIT_CAPACITY
        print(f"abcs-workbench: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ParseError, FileNotFoundError, TypeError, ValueError) as err:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"abcs-workbench: {err}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
