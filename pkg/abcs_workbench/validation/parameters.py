"""
ABCS Workbench
Copyright (C) 2026 ABCS Workbench contributors

This program is free software: you can redistribute it and/or modify it under the terms of the GNU General Public License
as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty
of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public License for more details.

You should have received a copy of the GNU General Public License along with this program.  If not, see https://www.gnu.org/licenses/.
"""

# Limits keep the exact ABCS learner within desk-scale committee enumeration
parameter_options = {
    "m": {
        "type": "int-range",
        "options": (3, 12),
    },
    "k": {
        "type": "int-range",
        "options": (2, 11),
    },
    "n": {
        "type": "int-range",
        "options": (1, 10_000),
    },
    "sample_count": {
        "type": "int-range",
        "options": (1, 100_000),
    },
    "test_count": {
        "type": "int-range",
        "options": (1, 100_000),
    },
    "runs": {
        "type": "int-range",
        "options": (1, 10_000),
    },
    "seed": {
        "type": "type-match",
        "options": (int,),
    },
    "budgets": {
        "type": "list-range",
        "options": (0, 100_000),
    },
}

vote_law_options = {
    "kind": {
        "type": "value-match",
        "options": ["UNIFORM", "CONSTANT", "BINOMIAL"],
    },
    "uniform_subset": {
        "type": "type-match",
        "options": (bool,),
    },
}
