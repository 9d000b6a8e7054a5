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

""" Holds the base file class for workbench file classes """

from pathlib import Path
from typing import NoReturn

from .diff import Diff, check_item_equal
from .to_from_json import Jsonable
from .util import WorkbenchError, handle_exception

# Attributes that describe where a file came from rather than what it holds
_SOURCE_ATTRIBUTES = ("_filepath", "_raw_data")


class WBFile(Jsonable):
    """Base class for all workbench file types.

    Subclasses set ``_filetype`` and ``_suffixes`` and implement ``_read`` and ``_write``. Files
    are plain text; ``_write`` returns the full text so it can be saved, printed or compared.
    """

    _filetype: str | None = None
    _suffixes: tuple[str, ...] = ()
    MAX_DIFF = 25

    def __init__(self, filepath: str | Path | None = None, **kwargs):
        if filepath is None:
            return
        self._filepath = Path(filepath)
        if self._filepath.suffix.lower() not in self._suffixes:
            raise TypeError(
                f"{self._filepath.name} is not a {self._filetype} file, expected one of "
                f"{', '.join(self._suffixes)}",
            )
        if not self._filepath.exists():
            raise FileNotFoundError(
                f"{self._filetype} file does not exist: {self._filepath}. To create a new "
                f"{self._filetype}, build it in memory (for example with "
                f"{type(self).__name__}.from_...) and call .save()",
            )

    def __repr__(self):
        filepath = getattr(self, "_filepath", None) or "<in_memory>"
        return f"<abcs_workbench Class: {self._filetype}(filepath={filepath})>"

    def _write(self) -> str:
        raise NotImplementedError

    def _read(self):
        raise NotImplementedError

    def _write_to(self, filepath: Path) -> None:
        filepath.parent.mkdir(parents=True, exist_ok=True)
        filepath.write_text(self._write())

    def _update(self):
        """Writes the current state back to the file it was read from or last saved to."""
        filepath = getattr(self, "_filepath", None)
        if filepath is None:
            raise UserWarning(
                f"{self._filetype} has no filepath yet, call save() before update()",
            )
        self._write_to(filepath)
        print(f"{self._filetype} File Updated!")

    def _save(self, filepath):
        filepath = Path(filepath).absolute()
        if filepath.suffix.lower() not in self._suffixes:
            raise TypeError(
                f"Cannot save a {self._filetype} as {filepath.name}, the suffix must be one of "
                f"{', '.join(self._suffixes)}",
            )
        self._write_to(filepath)
        self._filepath = filepath
        print(f"{self._filetype} File Saved to: {filepath}")

    @handle_exception(when="compare")
    def _diff(self, other, force_print=False):
        """Prints the differences between two files of the same type."""
        if self._filetype != other._filetype:
            raise TypeError("Cannot compare objects of different filetypes")
        equal, diff = self._get_diff(other)
        if equal:
            print("No difference, files are equivalent")
            return
        print(f"Files not equivalent, {len(diff)} difference(s) found:")
        shown = diff if force_print else diff[: self.MAX_DIFF]
        for name, reason in shown:
            print(f"  {name}:  {reason}")
        if len(shown) < len(diff):
            print(f"...{len(diff) - len(shown)} more, add force_print=True to see them all")

    def _get_diff(self, other) -> tuple[bool, Diff]:
        result = True
        diff: Diff = []
        for key, item in self.__dict__.items():
            if key in _SOURCE_ATTRIBUTES:
                continue
            name = f"{self._filetype}->{key}"
            if key not in getattr(other, "__dict__", {}):
                result = False
                diff.append((name, f"Key: '{key}' missing in other"))
                continue
            _result, diff = check_item_equal(item, other.__dict__[key], name=name, diff=diff)
            result = result and _result
        return result, diff

    def _handle_exception(self, err, when) -> NoReturn:
        raise WorkbenchError(err, when, self._filetype, getattr(self, "_filepath", None)) from err

    def __eq__(self, other):
        return self._get_diff(other)[0]

    __hash__ = None  # type: ignore[assignment]
