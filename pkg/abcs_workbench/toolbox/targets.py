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

import logging

from abcs_workbench.model.helpers import join_names
from abcs_workbench.prf import PRF
from abcs_workbench.rul import RUL
from abcs_workbench.solvers import erm_abcs, erm_seq, find_seq_witness, target_abcs
from abcs_workbench.tool import Parameter, WBTool, path_list
from abcs_workbench.util import DomainError

from .common import load_committee, show_progress

logger = logging.getLogger(__name__)


def _emit_rule(rule, output: str | None) -> None:
    rul = RUL.from_rule(rule)
    print(rul._write(), end="")
    if output is not None:
        rul.save(output)


def find_abcs_rule(
    profile: str,
    committee: str | None = None,
    k: int | None = None,
    output: str | None = None,
) -> int:
    prf = PRF(profile)
    chosen = load_committee(prf, committee)
    k = k if k is not None else (prf.k or chosen.k)
    rule = target_abcs(prf.profile, chosen, k, progress=show_progress())
    if rule is None:
        print("none")
    else:
        _emit_rule(rule, output)
    return 0


def find_seq_rule(
    profile: str,
    committee: str | None = None,
    k: int | None = None,
    output: str | None = None,
) -> int:
    prf = PRF(profile)
    chosen = load_committee(prf, committee)
    k = k if k is not None else (prf.k or chosen.k)
    result = find_seq_witness(prf.profile, chosen, k, progress=show_progress())
    if result is None:
        print("none")
        return 0
    _emit_rule(result.rule, output)
    print(f"order {join_names(prf.profile.name_of(a) for a in result.order)}")
    return 0


def learn_rule(
    samples: list[str],
    kind: str = "abcs",
    bound: int | None = None,
    output: str | None = None,
) -> int:
    labeled = [PRF(path).sample for path in samples]
    logger.info("Learning a %s rule from %d samples", kind, len(labeled))
    if kind == "abcs":
        rule = erm_abcs(labeled)
    elif kind == "seq":
        rule = erm_seq(labeled, bound=bound)
    else:
        raise DomainError(f"Unknown rule kind '{kind}', expected 'abcs' or 'seq'")
    if rule is None:
        print("none")
    else:
        _emit_rule(rule, output)
    return 0


class TargetAbcs(WBTool):
    """
    Searches for a non-trivial normalized ABCS rule under which the given committee wins and
    prints it in rule file format, or prints ``none``.

    .. code::

        abcs-workbench target-abcs --profile instance.prf --committee "a1 a2" --output found.rul
    """

    name = "Target ABCS"
    command = "target-abcs"
    description = "Finds an ABCS rule that makes a committee win"
    parameters = [
        Parameter("profile", str, help_text="Path to the profile file"),
        Parameter(
            "committee",
            str,
            help_text="Member names, defaults to the file's committee",
            required=False,
        ),
        Parameter(
            "k",
            int,
            help_text="Committee size, defaults to the committee's size",
            required=False,
        ),
        Parameter("output", str, help_text="Save the rule to this .rul file", required=False),
    ]
    tool_function = find_abcs_rule


class TargetSeq(WBTool):
    """
    Searches for a non-trivial Thiele function whose sequential rule can elect the given
    committee. Prints the function followed by an ``order`` line with the picking order, or
    prints ``none``.
    """

    name = "Target sequential Thiele"
    command = "target-seq"
    description = "Finds a sequential Thiele rule that can elect a committee"
    parameters = [
        Parameter("profile", str, help_text="Path to the profile file"),
        Parameter(
            "committee",
            str,
            help_text="Member names, defaults to the file's committee",
            required=False,
        ),
        Parameter(
            "k",
            int,
            help_text="Committee size, defaults to the committee's size",
            required=False,
        ),
        Parameter("output", str, help_text="Save the rule to this .rul file", required=False),
    ]
    tool_function = find_seq_rule


class Learn(WBTool):
    """
    Learns a rule consistent with labeled samples (``.smp`` files with a ``winners`` section).

    .. code::

        abcs-workbench learn --samples one.smp,two.smp --kind seq --bound 3
    """

    name = "Learn"
    command = "learn"
    description = "Finds a rule consistent with labeled samples"
    parameters = [
        Parameter("samples", path_list, help_text="Comma separated sample files"),
        Parameter("kind", str, help_text="'abcs' or 'seq'", required=False, default="abcs"),
        Parameter(
            "bound",
            int,
            help_text="Largest Thiele value tried by the seq learner",
            required=False,
        ),
        Parameter("output", str, help_text="Save the rule to this .rul file", required=False),
    ]
    tool_function = learn_rule
