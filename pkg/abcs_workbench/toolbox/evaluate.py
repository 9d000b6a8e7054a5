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

from abcs_workbench.model import BivariateScoring
from abcs_workbench.prf import PRF
from abcs_workbench.rul import resolve_rule
from abcs_workbench.rules import score_table, verify_abcs_winner, verify_seq_winner
from abcs_workbench.solvers import winners_under
from abcs_workbench.tool import Parameter, WBTool
from abcs_workbench.util import DomainError

from .common import load_committee, load_profile, print_committees


def show_winners(
    rule: str,
    profile: str,
    k: int | None = None,
    scores: bool = False,
    output: str | None = None,
) -> int:
    prf, k = load_profile(profile, k)
    f = resolve_rule(rule, prf.profile.m, k)
    if scores:
        if not isinstance(f, BivariateScoring):
            raise DomainError("Score tables are only available for ABCS rules")
        table = score_table(f, prf.profile)
        print(table[["committee", "score"]].to_csv(index=False, lineterminator="\n"), end="")
    winners = winners_under(f, prf.profile)
    print_committees(prf, winners)
    if output is not None:
        PRF.from_profile(prf.profile, k, winners=winners).save(output)
    return 0


def verify_winner(
    rule: str,
    profile: str,
    committee: str | None = None,
    k: int | None = None,
) -> int:
    prf = PRF(profile)
    chosen = load_committee(prf, committee)
    k = k if k is not None else (prf.k or chosen.k)
    f = resolve_rule(rule, prf.profile.m, k)
    if isinstance(f, BivariateScoring):
        result = verify_abcs_winner(f, prf.profile, chosen)
    else:
        result = verify_seq_winner(f, prf.profile, chosen)
    print("yes" if result else "no")
    return 0 if result else 1


class Winners(WBTool):
    """
    Prints every winning committee of a profile, one committee per line.

    Bivariate rules (``cc``, ``av``, ``pav``, ``trivial`` or an ABCS rule file) use the ABCS
    rule, univariate rules (``seq-cc``, ... or a Thiele rule file) the sequential rule.

    .. code::

        abcs-workbench winners --rule cc --profile profile.prf --scores
    """

    name = "Winners"
    command = "winners"
    description = "Computes the winning committees of a profile"
    parameters = [
        Parameter("rule", str, help_text="Rule name or path to a .rul file"),
        Parameter("profile", str, help_text="Path to the profile file"),
        Parameter(
            "k",
            int,
            help_text="Committee size, defaults to the profile header",
            required=False,
        ),
        Parameter("scores", bool, help_text="Also print every committee with its score"),
        Parameter("output", str, help_text="Write the labeled sample to this file", required=False),
    ]
    tool_function = show_winners


class Verify(WBTool):
    """
    Answers whether a committee wins. Exits with 0 for yes and 1 for no.

    .. code::

        abcs-workbench verify --rule cc --profile instance.prf --committee "a1 a2"
    """

    name = "Verify"
    command = "verify"
    description = "Checks whether a committee is winning"
    parameters = [
        Parameter("rule", str, help_text="Rule name or path to a .rul file"),
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
    ]
    tool_function = verify_winner
