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

import dataclasses
from typing import Any

Diff = list[tuple[str, str]]


def check_item_equal(item_a: Any, item_b: Any, name: str, diff: Diff) -> tuple[bool, Diff]:
    """Compares two items and appends a (location, reason) entry to ``diff`` for every mismatch.

    Dataclass instances (profiles, votes, scoring rules...) are compared field by field so that
    the reported location points at the offending vote or table entry.
    """
    result = True
    try:
        if isinstance(item_a, dict):
            result, diff = check_dict_equal(item_a, item_b, name, diff)
        elif isinstance(item_a, (list, tuple)):
            result, diff = check_sequence_equal(item_a, item_b, name, diff)
        elif dataclasses.is_dataclass(item_a) and not isinstance(item_a, type):
            if type(item_a) is not type(item_b):
                result = False
                diff.append((name, f"{type(item_a).__name__} != {type(item_b).__name__}"))
            else:
                for field in dataclasses.fields(item_a):
                    _result, diff = check_item_equal(
                        getattr(item_a, field.name),
                        getattr(item_b, field.name),
                        name=f"{name}->{field.name}",
                        diff=diff,
                    )
                    result = result and _result
        elif item_a != item_b:
            result = False
            diff.append((name, f"{item_a} != {item_b}"))
    except Exception as e:
        result = False
        diff.append((name, f"Error encountered when comparing: {e}"))

    return result, diff


def check_dict_equal(dict_a: dict, dict_b: dict, name: str, diff: Diff) -> tuple[bool, Diff]:
    """Used to recursively check equivalence of mappings"""
    result = True
    for key, item in dict_a.items():
        if key not in dict_b:
            result = False
            diff.append((name, f"Key: '{key}' missing in other"))
            continue
        _result, diff = check_item_equal(item, dict_b[key], name=f"{name}->{key}", diff=diff)
        result = result and _result

    for key in dict_b:
        if key not in dict_a:
            result = False
            diff.append((name, f"Key: '{key}' missing from first object"))

    return result, diff


def check_sequence_equal(seq_a, seq_b, name: str, diff: Diff) -> tuple[bool, Diff]:
    result = True
    for idx, (item_a, item_b) in enumerate(zip(seq_a, seq_b)):
        _result, diff = check_item_equal(item_a, item_b, name=f"{name}->itm[{idx}]", diff=diff)
        result = result and _result

    if len(seq_a) != len(seq_b):
        result = False
        diff.append((name, f"Mismatch in length: {len(seq_a)} != {len(seq_b)}"))

    return result, diff
