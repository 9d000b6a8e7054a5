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
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .version import __version__

# Keys of the tagged encodings
CLASS_KEY = "API Class"
VERSION_KEY = "API Version"
ATTRIBUTES_KEY = "Object Attributes"
FRACTION_KEY = "fraction"
SET_KEY = "python_set"
PAIRS_KEY = "python_dict"


def to_json(obj: Any) -> str:
    """
    Converts a workbench object into a JSON string.

    Args:
        obj (object): A profile, scoring rule, reduction instance, file class...

    Returns:
        A JSON formatted string.
    """
    return json.dumps(encode(obj), indent=2)


def is_jsonable(obj: Any) -> bool:
    try:
        json.dumps(obj)
    except (TypeError, ValueError):
        return False
    return True


def _attributes(obj: Any) -> dict[str, Any]:
    if dataclasses.is_dataclass(obj):
        return {f.name: getattr(obj, f.name) for f in dataclasses.fields(obj) if f.init}
    return dict(obj.__dict__)


def encode(obj: Any, is_top_level: bool = True) -> Any:  # noqa: PLR0911
    """Turns ``obj`` into plain JSON data.

    Rationals become ``{"fraction": "num/den"}``, sets become sorted ``python_set`` lists and
    mappings with non-string keys become ``python_dict`` lists of key/value pairs, so exact values
    and tuple-keyed rule tables survive the round trip.
    """
    from ._base import WBFile

    if isinstance(obj, Fraction):
        return {FRACTION_KEY: f"{obj.numerator}/{obj.denominator}"}
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, float, str)):
        return obj
    if isinstance(obj, Path):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return {SET_KEY: [encode(item, is_top_level=False) for item in sorted(obj)]}
    if isinstance(obj, (list, tuple)):
        return [encode(item, is_top_level=False) for item in obj]
    if isinstance(obj, dict):
        if all(isinstance(key, str) for key in obj):
            return {key: encode(value, is_top_level=False) for key, value in obj.items()}
        return {
            PAIRS_KEY: [
                [list(key) if isinstance(key, tuple) else key, encode(value, is_top_level=False)]
                for key, value in obj.items()
            ],
        }
    if isinstance(obj, (WBFile, Jsonable)):
        encoded: dict[str, Any] = {CLASS_KEY: f"{type(obj).__module__}.{type(obj).__name__}"}
        if is_top_level:
            encoded[VERSION_KEY] = __version__
        encoded[ATTRIBUTES_KEY] = {
            key: encode(value, is_top_level=False) for key, value in _attributes(obj).items()
        }
        return encoded
    raise TypeError(f"Cannot convert {type(obj).__name__} to JSON")


def from_json(obj: str | dict) -> dict:
    """
    Reads the attributes of an encoded object.

    Args:
        obj (str | dict): A JSON string from :func:`to_json` or its parsed form

    Returns:
        The decoded attribute dictionary
    """
    data = json.loads(obj) if isinstance(obj, str) else obj
    return {key: decode(value) for key, value in data[ATTRIBUTES_KEY].items()}


def decode(obj: Any) -> Any:
    """Inverse of :func:`encode`. Nested objects are rebuilt through ``api_class_mapping``."""
    if isinstance(obj, list):
        return [decode(item) for item in obj]
    if not isinstance(obj, dict):
        return obj
    if CLASS_KEY in obj:
        from .mapping import api_class_mapping

        return api_class_mapping[obj[CLASS_KEY]].from_json(obj)
    if FRACTION_KEY in obj:
        return Fraction(obj[FRACTION_KEY])
    if SET_KEY in obj:
        return {_hashable(decode(item)) for item in obj[SET_KEY]}
    if PAIRS_KEY in obj:
        return {_hashable(key): decode(value) for key, value in obj[PAIRS_KEY]}
    return {key: decode(value) for key, value in obj.items()}


def _hashable(item: Any) -> Any:
    return tuple(item) if isinstance(item, list) else item


class Jsonable:
    """Mix-in giving ``to_json`` and ``from_json`` to value types and file classes."""

    def to_json(self) -> str:
        return to_json(self)

    @classmethod
    def from_json(cls, json_string: str | dict):
        """Rebuilds an instance from :meth:`to_json` output.

        Dataclasses are constructed from their fields, so their validation runs again. File
        classes are created empty and their attributes restored.
        """
        attributes = from_json(json_string)
        if dataclasses.is_dataclass(cls):
            return cls(**attributes)

        api_object = cls(from_json=True)
        for key, value in attributes.items():
            setattr(api_object, key, value)
        return api_object
