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

from typing import Iterable, Sequence

import pandas as pd

from ..model import Profile, ReductionInstance


class ProfileBuilder:
    """Collects the votes of a reduction part by part over a fixed list of alternative names."""

    def __init__(self, names: Sequence[str]):
        self.names = list(names)
        self._index = {name: idx for idx, name in enumerate(self.names)}
        self._sets: list[list[int]] = []
        self._multiplicities: list[int] = []
        self._parts: dict[str, tuple[int, int]] = {}
        self._open: tuple[str, int] | None = None

    def part(self, label: str) -> None:
        """Starts a new part, closing the previous one."""
        self._close()
        self._open = (label, len(self._sets))

    def vote(self, *members: str, multiplicity: int = 1) -> None:
        self._sets.append([self._index[name] for name in members])
        self._multiplicities.append(multiplicity)

    def _close(self) -> None:
        if self._open is not None:
            label, start = self._open
            self._parts[label] = (start, len(self._sets))
            self._open = None

    def build(self, committee: Iterable[str], k: int) -> ReductionInstance:
        self._close()
        profile = Profile.from_sets(len(self.names), self._sets, self.names, self._multiplicities)
        return ReductionInstance(profile, profile.committee(committee), k, dict(self._parts))


class CheckReport:
    """Rows of (check, expected, actual, holds) collected by the reduction checkers."""

    def __init__(self):
        self.rows: list[dict] = []

    def add(self, check: str, expected, actual, holds: bool | None = None) -> None:
        self.rows.append(
            {
                "check": check,
                "expected": expected,
                "actual": actual,
                "holds": bool(expected == actual) if holds is None else bool(holds),
            },
        )

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=["check", "expected", "actual", "holds"])
