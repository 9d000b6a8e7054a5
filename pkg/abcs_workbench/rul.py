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
from pathlib import Path
from typing import Union

from ._base import WBFile
from .model import BivariateScoring, UnivariateScoring, pair_domain
from .model.helpers import data_lines, format_rational, parse_int, parse_rational
from .util import DomainError, ParseError, handle_exception

ScoringRule = Union[BivariateScoring, UnivariateScoring]

# Rules that can be named instead of given as a file
BIVARIATE_RULES = {
    "cc": BivariateScoring.cc,
    "av": BivariateScoring.av,
    "pav": BivariateScoring.pav,
    "trivial": BivariateScoring.trivial,
}
SEQUENTIAL_RULES = {
    "seq-cc": UnivariateScoring.cc,
    "seq-av": UnivariateScoring.av,
    "seq-pav": UnivariateScoring.pav,
    "seq-trivial": UnivariateScoring.trivial,
}


class RUL(WBFile):
    """Reads and writes scoring rules '.rul'

    A bivariate (ABCS) rule starts with ``m <int> k <int>`` followed by ``bxy <x> <y> <value>``
    lines. A univariate (Thiele) rule starts with ``k <int>`` followed by ``u <x> <value>``
    lines. Values are rationals such as ``3/2``; entries left out are 0.

    Args:
        rul_filepath (str, optional): Full filepath to rule file. If not specified, a new blank RUL class will be created.

    Output:
        Initiates 'RUL' class object

    Raises:
        TypeError: Raised if rul_filepath does not point to a .rul file
        FileNotFoundError: Raised if rul_filepath points to a file which does not exist
    """

    _filetype: str = "RUL"
    _suffixes: tuple[str, ...] = (".rul",)

    @handle_exception(when="read")
    def __init__(self, rul_filepath: str | Path | None = None, from_json: bool = False):
        if from_json:
            return
        self.rule: ScoringRule | None = None
        if rul_filepath is not None:
            WBFile.__init__(self, rul_filepath)
            self._read()

    def _read(self):
        with open(self._filepath) as rul_file:
            self._raw_data = rul_file.read()
        self._load(self._raw_data)

    def _load(self, text: str) -> None:
        lines = list(data_lines(text))
        if not lines:
            raise ParseError("missing 'm <int> k <int>' or 'k <int>' header")
        line_no, tokens = lines[0]
        if len(tokens) == 4 and tokens[0] == "m" and tokens[2] == "k":  # noqa: PLR2004
            m = parse_int(tokens[1], "m", line_no)
            k = parse_int(tokens[3], "k", line_no)
            self.rule = self._load_bivariate(m, k, lines[1:], line_no)
        elif len(tokens) == 2 and tokens[0] == "k":  # noqa: PLR2004
            k = parse_int(tokens[1], "k", line_no)
            self.rule = self._load_univariate(k, lines[1:], line_no)
        else:
            raise ParseError(
                f"expected 'm <int> k <int>' or 'k <int>', got '{' '.join(tokens)}'",
                line_no,
            )

    @staticmethod
    def _load_bivariate(m: int, k: int, lines: list, header_line: int) -> BivariateScoring:
        try:
            domain = pair_domain(m, k)
        except DomainError as err:
            raise ParseError(str(err), header_line) from err
        values: dict[tuple[int, int], Fraction] = {}
        for line_no, tokens in lines:
            if tokens[0] != "bxy" or len(tokens) != 4:  # noqa: PLR2004
                raise ParseError(
                    f"expected 'bxy <x> <y> <value>', got '{' '.join(tokens)}'",
                    line_no,
                )
            pair = (parse_int(tokens[1], "x", line_no), parse_int(tokens[2], "y", line_no))
            if pair not in domain:
                raise ParseError(f"{pair} lies outside the pair domain for m={m}, k={k}", line_no)
            if pair in values:
                raise ParseError(f"repeated entry for {pair}", line_no)
            values[pair] = parse_rational(tokens[3], line_no)
        try:
            return BivariateScoring(domain, values)
        except DomainError as err:
            raise ParseError(str(err)) from err

    @staticmethod
    def _load_univariate(k: int, lines: list, header_line: int) -> UnivariateScoring:
        if k < 1:
            raise ParseError(f"k must be positive, got k={k}", header_line)
        values = [Fraction(0)] * (k + 1)
        seen = set()
        for line_no, tokens in lines:
            if tokens[0] != "u" or len(tokens) != 3:  # noqa: PLR2004
                raise ParseError(f"expected 'u <x> <value>', got '{' '.join(tokens)}'", line_no)
            x = parse_int(tokens[1], "x", line_no)
            if not 0 <= x <= k or x in seen:
                raise ParseError(f"invalid or repeated entry for x={x}", line_no)
            seen.add(x)
            values[x] = parse_rational(tokens[2], line_no)
        try:
            return UnivariateScoring(k, tuple(values))
        except DomainError as err:
            raise ParseError(str(err)) from err

    @classmethod
    def from_text(cls, text: str) -> RUL:
        rul = cls()
        rul._load(text)
        return rul

    @classmethod
    def from_rule(cls, rule: ScoringRule) -> RUL:
        rul = cls()
        rul.rule = rule
        return rul

    @handle_exception(when="write")
    def _write(self) -> str:
        """Returns string representation of the current rule"""
        rule = self.rule
        if isinstance(rule, BivariateScoring):
            lines = [f"m {rule.m} k {rule.k}"]
            lines.extend(
                f"bxy {x} {y} {format_rational(rule(x, y))}"
                for x, y in rule.domain.increment_pairs()
            )
        elif isinstance(rule, UnivariateScoring):
            lines = [f"k {rule.k}"]
            lines.extend(f"u {x} {format_rational(rule(x))}" for x in range(1, rule.k + 1))
        else:
            raise ValueError("A RUL needs a rule before it can be written")
        return "\n".join(lines) + "\n"

    def update(self) -> None:
        """Updates the existing RUL based on any altered attributes"""
        self._update()

    def save(self, filepath: str | Path) -> None:
        """Saves the RUL to the given location, if pointing to an existing file it will be overwritten."""
        self._save(filepath)


def resolve_rule(name_or_path: str | Path, m: int, k: int) -> ScoringRule:
    """Looks up a named rule (cc, av, pav, trivial or their seq- variants) or reads a rule file.

    Raises:
        DomainError: If a rule file does not fit the given m and k.
    """
    name = str(name_or_path).lower()
    if name in BIVARIATE_RULES:
        return BIVARIATE_RULES[name](m, k)
    if name in SEQUENTIAL_RULES:
        return SEQUENTIAL_RULES[name](k)
    rule = RUL(name_or_path).rule
    if rule.k != k or (isinstance(rule, BivariateScoring) and rule.m != m):
        raise DomainError(f"Rule file {name_or_path} does not fit m={m}, k={k}")
    return rule
