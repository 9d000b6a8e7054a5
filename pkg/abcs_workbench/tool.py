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
from dataclasses import dataclass
from typing import Any, Callable


@dataclass()
class Parameter:
    """Class to represent a workbench tool parameter.

    There should be one parameter for each argument of the tool_function function

    Args:
        name (str): The name of the parameter, used as ``--name`` on the command line.
        dtype (Callable): Converts the command line string. ``bool`` parameters become flags.
        description (str): A description of the parameter.
        help_text (str): The help text to be displayed for the parameter.
        required (bool): A flag indicating whether the parameter is required or optional. Default is True.
        default: Value passed to the tool when an optional parameter is not given.
    """

    name: str
    dtype: Callable[[str], Any]
    description: str | None = None
    help_text: str | None = None
    required: bool = True
    default: Any = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Parameter):
            return NotImplemented
        return self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"Parameter({self.name})"

    def add_to(self, parser: argparse.ArgumentParser) -> None:
        if self.dtype is bool:
            parser.add_argument(f"--{self.name}", action="store_true", help=self.help_text)
        else:
            parser.add_argument(
                f"--{self.name}",
                required=self.required,
                default=None,
                help=self.help_text,
            )

    def convert(self, value: Any) -> Any:
        if value is None or self.dtype is bool:
            return self.default if value is None else value
        return self.dtype(value)


def int_list(value: str) -> tuple[int, ...]:
    """Parses a comma separated list of integers such as ``5,10,20``."""
    return tuple(int(token) for token in value.split(",") if token.strip())


def path_list(value: str) -> list[str]:
    """Parses a comma separated list of paths."""
    return [token.strip() for token in value.split(",") if token.strip()]


class WBTool:
    """
    Base class for workbench tools.

    Use the class by wrapping it in a child class which defines the parameters and function to call.
    Every tool can be run from code with ``.run()`` or from the command line, either on its own or
    as a subcommand of ``abcs-workbench``. A tool function returns the process exit status
    (None counts as 0).

    Args:
        name (str): The name of the tool
        command (str): The subcommand name on the command line
        description (str): A description of the tool and what it does.
        parameters (list[Parameter]): the Tool parameters, one per input function
        tool_function (function): The function to be called by the tool

    .. code:: python

        def count_votes(profile):
            print(PRF(profile).profile.n)

        class CountVotes(WBTool):
            name = "Count votes"
            command = "count-votes"
            description = "Prints the number of voters"
            parameters = [Parameter("profile", str)]
            tool_function = count_votes
    """

    parameters: list[Parameter] = []
    command: str = ""

    @property
    def name(self):
        """Display name, set by every tool class."""
        raise NotImplementedError(f"{type(self).__name__} has no name")

    @property
    def description(self):
        """One-line summary used as the subcommand help."""
        raise NotImplementedError(f"{type(self).__name__} has no description")

    @property
    def tool_function(self):
        """The plain function the tool wraps. It receives one keyword argument per parameter."""
        raise NotImplementedError(f"{type(self).__name__} has no tool_function")

    def __init__(self):
        self.check_parameters()

    def check_parameters(self):
        """
        Raises:
            ValueError: If two parameters share a name or a parameter is called ``verbose``,
                which every tool reserves for its logging flag.
        """
        seen: set[str] = set()
        for parameter in self.parameters:
            if parameter.name in seen or parameter.name == "verbose":
                raise ValueError(f"Parameter name '{parameter.name}' is repeated or reserved")
            seen.add(parameter.name)

    # Class method so that **kwargs does not pick up self
    @classmethod
    def run(cls, **kwargs):
        """Calls tool_function with the given keyword arguments and returns its exit status."""
        return cls.tool_function(**kwargs)

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        for parameter in self.parameters:
            parameter.add_to(parser)
        parser.add_argument("--verbose", action="store_true", help="Log solver details to stderr")

    def collect_kwargs(self, args: argparse.Namespace) -> dict[str, Any]:
        """Converts parsed arguments into keyword arguments for tool_function."""
        if args.verbose:
            logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")
        return {p.name: p.convert(getattr(args, p.name)) for p in self.parameters}

    def run_from_command_line(self, argv: list[str] | None = None) -> int:
        """
        Method to run the tool on its own from the command line.

        Returns:
            int: the exit status returned by the tool
        """
        parser = argparse.ArgumentParser(prog=self.command or None, description=self.description)
        self.add_arguments(parser)
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
        return self.run(**self.collect_kwargs(args)) or 0
