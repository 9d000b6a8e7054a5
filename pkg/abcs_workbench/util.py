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

import os
from functools import wraps
from pathlib import Path
from typing import TYPE_CHECKING

from .version import __version__

if TYPE_CHECKING:
    from typing import Callable

    from ._base import WBFile

# Environment variables consulted at call time, with their defaults
CAP_DEFAULTS = {
    "ABCS_WORKBENCH_SHATTER_CAP": 16,
    "ABCS_WORKBENCH_ORACLE_CAP": 20,
    "ABCS_WORKBENCH_SEARCH_CAP": 5_000_000,
    "ABCS_WORKBENCH_COMMITTEE_CAP": 2_000_000,
    "ABCS_WORKBENCH_ERM_GRID": 3,
}


def get_cap(name: str) -> int:
    """Returns the current value of a configurable limit.

    Args:
        name (str): Name of the environment variable, e.g. ``ABCS_WORKBENCH_SEARCH_CAP``

    Raises:
        KeyError: If the name is not a known limit.
        ValueError: If the environment holds a value that is not a positive integer.
    """
    default = CAP_DEFAULTS[name]
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as err:
        raise ValueError(f"{name} must be a positive integer, got '{raw}'") from err
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got '{raw}'")
    return value


def check_cap(name: str, size: int, what: str) -> None:
    """Raises CapacityError if ``size`` exceeds the limit stored under ``name``."""
    cap = get_cap(name)
    if size > cap:
        raise CapacityError(
            f"{what} has size {size}, above the limit {cap} (set {name} to raise it)",
        )


def read_file(filepath: str | Path) -> WBFile:
    """Helper function to create an instance of a workbench file class based on the file suffix.

    Args:
        filepath (Union[str, Path]): The path to the file to be read, as a string or Path object.

    Returns:
        WBFile: An instance of the class corresponding to the file type identified by the file suffix.

    Raises:
        ValueError: If the file suffix does not correspond to any supported file type.

    Example:
        .. code-block:: python

            from abcs_workbench import read_file

            prf = read_file("/path/to/profile.prf")
    """
    from . import CNF, COL, PRF, RUL

    suffix_to_class = {
        ".prf": PRF,
        ".txt": PRF,
        ".smp": PRF,
        ".rul": RUL,
        ".col": COL,
        ".cnf": CNF,
    }
    filepath = Path(filepath)
    wb_class = suffix_to_class.get(filepath.suffix.lower())
    if wb_class:
        return wb_class(filepath)

    raise ValueError(f"Unsupported file type: {filepath.suffix}")


def handle_exception(when: str) -> Callable:
    """Decorator factory to wrap a method with exception handling."""

    def decorator(method: Callable) -> Callable:
        @wraps(method)
        def wrapped_method(self: WBFile, *args, **kwargs):
            try:
                return method(self, *args, **kwargs)
            except Exception as e:
                self._handle_exception(e, when)

        return wrapped_method

    return decorator


class DomainError(ValueError):
    """Raised when an input lies outside the domain an operation is defined on."""


class ParseError(ValueError):
    """Raised when a text input is malformed. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        self.reason = message
        super().__init__(message if line is None else f"line {line}: {message}")


class CapacityError(RuntimeError):
    """Raised when a request exceeds one of the configured size limits."""


class WitnessError(RuntimeError):
    """Raised when a solver returns a witness that fails its own substitution check."""


class WorkbenchError(Exception):
    """Custom exception class for errors raised while handling workbench files."""

    def __init__(self, original_exception, when, filetype, filepath) -> None:
        tb = original_exception.__traceback__
        while tb.tb_next is not None:
            tb = tb.tb_next
        line_no = tb.tb_lineno
        tb_path = Path(tb.tb_frame.f_code.co_filename)
        fname = "/".join(tb_path.parts[-2:])

        self.original_exception = original_exception
        message = (
            "\n~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~"
            f"\nWorkbench Error: Problem encountered when trying to {when} {filetype} file {filepath}."
            f"\n\nDetails: {__version__}-{fname}-{line_no}"
            f"\nMsg: {original_exception}"
        )
        super().__init__(message)
