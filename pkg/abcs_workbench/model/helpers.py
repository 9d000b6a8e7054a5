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

from fractions import Fraction
from typing import Iterator

from ..util import ParseError


def parse_rational(token: str, line: int | None = None) -> Fraction:
    """Parses ``num/den``, an integer or a finite decimal into an exact Fraction."""
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as err:
        raise ParseError(f"'{token}' is not a rational number", line) from err
    return value


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_int(token: str, what: str, line: int | None = None) -> int:
    try:
        return int(token)
    except ValueError as err:
        raise ParseError(f"{what} must be an integer, got '{token}'", line) from err


def data_lines(text: str, comment: str = "#") -> Iterator[tuple[int, list[str]]]:
    """Yields (line number, tokens) for every non-blank line that is not a comment."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith(comment):
            continue
        yield line_no, stripped.split()


def join_names(names) -> str:
    return " ".join(str(name) for name in names)
