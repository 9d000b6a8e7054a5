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
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence, Union

from ..lp_engine import feasible
from ..model import BivariateScoring, Committee, Profile, UnivariateScoring
from ..rules import abcs_winners, all_committees, seq_winners
from ..to_from_json import Jsonable
from ..util import DomainError, WitnessError, check_cap, get_cap
from .target import IncrementRows

logger = logging.getLogger(__name__)

ScoringRule = Union[BivariateScoring, UnivariateScoring]


@dataclass(frozen=True)
class LabeledSample(Jsonable):
    """A profile together with its full set of winning committees."""

    profile: Profile
    winners: tuple[Committee, ...]

    def __post_init__(self):
        winners = tuple(sorted(set(self.winners)))
        object.__setattr__(self, "winners", winners)
        if not winners:
            raise DomainError("A labeled sample needs at least one winning committee")
        if len({committee.k for committee in winners}) != 1:
            raise DomainError("All winning committees of a sample must have the same size")
        for committee in winners:
            if committee.members[-1] >= self.profile.m:
                raise DomainError(
                    f"Committee {list(committee.members)} out of range for m={self.profile.m}",
                )

    @property
    def k(self) -> int:
        return self.winners[0].k


def winners_under(rule: ScoringRule, profile: Profile) -> list[Committee]:
    """Winner set of ``profile``: ABCS winners for bivariate rules, sequential winners otherwise."""
    if isinstance(rule, BivariateScoring):
        return abcs_winners(rule, profile, rule.k)
    return seq_winners(rule, profile, rule.k)


def label_samples(rule: ScoringRule, profiles: Iterable[Profile]) -> list[LabeledSample]:
    return [LabeledSample(profile, tuple(winners_under(rule, profile))) for profile in profiles]


def training_consistent(rule: ScoringRule, samples: Sequence[LabeledSample]) -> bool:
    return all(winners_under(rule, sample.profile) == list(sample.winners) for sample in samples)


def _dimensions(samples: Sequence[LabeledSample], m: int | None, k: int | None) -> tuple[int, int]:
    shapes = {(sample.profile.m, sample.k) for sample in samples}
    if m is not None and k is not None:
        shapes.add((m, k))
    if not shapes:
        raise DomainError("m and k are required when there are no samples")
    if len(shapes) > 1:
        raise DomainError(f"Samples disagree on (m, k): {sorted(shapes)}")
    return shapes.pop()


def erm_abcs(
    samples: Sequence[LabeledSample],
    m: int | None = None,
    k: int | None = None,
) -> BivariateScoring | None:
    """Finds a non-trivial ABCS rule reproducing every labeled winner set, or returns None.

    For each sample the co-winners tie exactly and every other committee trails the first
    winner by at least 1. With no samples, ``m`` and ``k`` must be given and any non-trivial
    rule is returned.
    """
    m, k = _dimensions(samples, m, k)
    check_cap(
        "ABCS_WORKBENCH_COMMITTEE_CAP",
        math.comb(m, k) * max(1, len(samples)),
        "ERM constraint system",
    )
    rows = IncrementRows(m, k)
    system = rows.system()
    for sample in samples:
        forms = {c: rows.score_form(sample.profile, c.members) for c in sample.winners}
        reference = forms[sample.winners[0]]
        for committee in sample.winners[1:]:
            system.add_eq(rows.difference(forms[committee], reference), 0)
        for rival in all_committees(m, k):
            if rival not in forms:
                system.add_ge(
                    rows.difference(reference, rows.score_form(sample.profile, rival.members)),
                    1,
                )

    result = feasible(system)
    if not result.feasible:
        logger.debug("No ABCS rule is consistent with %d samples", len(samples))
        return None
    rule = rows.rule(result.values())
    if not training_consistent(rule, samples):
        raise WitnessError("Learned rule does not reproduce the sample labels")
    return rule


def erm_seq(
    samples: Sequence[LabeledSample],
    bound: int | None = None,
    k: int | None = None,
) -> UnivariateScoring | None:
    """Searches integer Thiele functions with values in 0..bound for one whose sequential rule
    reproduces every labeled winner set.

    Functions are tried in lexicographic order of (s(1), ..., s(k)); the all-zero function is
    skipped. The search only covers the grid, so None does not rule out other rules.
    """
    bound = get_cap("ABCS_WORKBENCH_ERM_GRID") if bound is None else bound
    if bound < 1:
        raise DomainError(f"Grid bound must be at least 1, got {bound}")
    if samples:
        sizes = {sample.k for sample in samples}
        if k is not None:
            sizes.add(k)
        if len(sizes) > 1:
            raise DomainError(f"Samples disagree on k: {sorted(sizes)}")
        k = sizes.pop()
    elif k is None:
        raise DomainError("k is required when there are no samples")
    check_cap("ABCS_WORKBENCH_SEARCH_CAP", math.comb(bound + k, k), "ERM grid")

    for values in combinations_with_replacement(range(bound + 1), k):
        if values[-1] == 0:
            continue
        rule = UnivariateScoring(k, (Fraction(0),) + tuple(Fraction(v) for v in values))
        if training_consistent(rule, samples):
            return rule

    logger.warning(
        "No sequential Thiele rule with values in 0..%d reproduces all %d samples",
        bound,
        len(samples),
    )
    return None
