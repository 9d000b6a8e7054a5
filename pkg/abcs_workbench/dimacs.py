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

from pathlib import Path

from ._base import WBFile
from .model import Cnf2p2n, Graph
from .reductions.parsers import emit_cnf, emit_graph, parse_cnf, parse_graph
from .util import handle_exception


class COL(WBFile):
    """Reads and writes DIMACS graphs '.col' (``p edge`` header, ``e u v`` lines)

    Args:
        col_filepath (str, optional): Full filepath to graph file. If not specified, a new blank COL class will be created.

    Raises:
        TypeError: Raised if col_filepath does not point to a .col file
        FileNotFoundError: Raised if col_filepath points to a file which does not exist
    """

    _filetype: str = "COL"
    _suffixes: tuple[str, ...] = (".col",)

    @handle_exception(when="read")
    def __init__(self, col_filepath: str | Path | None = None, from_json: bool = False):
        if from_json:
            return
        self.graph: Graph | None = None
        if col_filepath is not None:
            WBFile.__init__(self, col_filepath)
            self._read()

    def _read(self):
        with open(self._filepath) as col_file:
            self._raw_data = col_file.read()
        self.graph = parse_graph(self._raw_data)

    @classmethod
    def from_graph(cls, graph: Graph) -> COL:
        col = cls()
        col.graph = graph
        return col

    @handle_exception(when="write")
    def _write(self) -> str:
        return emit_graph(self.graph)

    def update(self) -> None:
        self._update()

    def save(self, filepath: str | Path) -> None:
        self._save(filepath)


class CNF(WBFile):
    """Reads and writes 2P2N formulas as DIMACS CNF '.cnf'

    Args:
        cnf_filepath (str, optional): Full filepath to formula file. If not specified, a new blank CNF class will be created.

    Raises:
        TypeError: Raised if cnf_filepath does not point to a .cnf file
        FileNotFoundError: Raised if cnf_filepath points to a file which does not exist
    """

    _filetype: str = "CNF"
    _suffixes: tuple[str, ...] = (".cnf",)

    @handle_exception(when="read")
    def __init__(self, cnf_filepath: str | Path | None = None, from_json: bool = False):
        if from_json:
            return
        self.formula: Cnf2p2n | None = None
        if cnf_filepath is not None:
            WBFile.__init__(self, cnf_filepath)
            self._read()

    def _read(self):
        with open(self._filepath) as cnf_file:
            self._raw_data = cnf_file.read()
        self.formula = parse_cnf(self._raw_data)

    @classmethod
    def from_formula(cls, formula: Cnf2p2n) -> CNF:
        cnf = cls()
        cnf.formula = formula
        return cnf

    @handle_exception(when="write")
    def _write(self) -> str:
        return emit_cnf(self.formula)

    def update(self) -> None:
        self._update()

    def save(self, filepath: str | Path) -> None:
        self._save(filepath)
