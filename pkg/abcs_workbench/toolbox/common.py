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

import sys

from abcs_workbench.model import Committee
from abcs_workbench.model.helpers import join_names
from abcs_workbench.prf import PRF
from abcs_workbench.util import DomainError


def show_progress() -> bool:
    return sys.stderr.isatty()


def load_profile(profile: str, k: int | None = None) -> tuple[PRF, int]:
    """Reads a profile file and settles k from the argument or the file header."""
    prf = PRF(profile)
    k = k if k is not None else prf.k
    if k is None:
        raise DomainError(
            "Committee size unknown: pass --k or give 'm <int> k <int>' in the profile",
        )
    return prf, k


def load_committee(prf: PRF, committee: str | None) -> Committee:
    """Committee from space or comma separated names, or the file's 'committee' line."""
    if committee:
        return prf.profile.committee(committee.replace(",", " ").split())
    if prf.committee is None:
        raise DomainError("No committee given: pass --committee or add a 'committee' line")
    return prf.committee


def print_committees(prf: PRF, committees) -> None:
    for committee in committees:
        print(join_names(committee.names(prf.profile)))
