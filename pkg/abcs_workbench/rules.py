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
from collections import Counter
from fractions import Fraction
from itertools import combinations, islice
from typing import Iterable, Iterator

import numpy as np
import pandas as pd

from .model import BivariateScoring, Committee, Profile, UnivariateScoring
from .util import DomainError, check_cap

logger = logging.getLogger(__name__)

CHUNK_SIZE = 4096


def all_committees(m: int, k: int) -> Iterator[Committee]:
    """All k-subsets of 0..m-1 in lexicographic order."""
    for members in combinations(range(m), k):
        yield Committee(members)


def _check_committee(committee: Committee, k: int, m: int) -> None:
    if committee.k != k:
        raise DomainError(
            f"Committee {list(committee.members)} has size {committee.k}, expected {k}",
        )
    if committee.members and committee.members[-1] >= m:
        raise DomainError(f"Committee member {committee.members[-1]} out of range for m={m}")


def _check_bivariate(f: BivariateScoring, profile: Profile) -> None:
    if f.m != profile.m:
        raise DomainError(f"Rule is defined for m={f.m} but the profile has m={profile.m}")


def _check_univariate(s: UnivariateScoring, profile: Profile) -> None:
    if not 1 < s.k < profile.m:
        raise DomainError(f"Committee size must satisfy 1 < k < m, got m={profile.m}, k={s.k}")


def intersection_counts(profile: Profile, members: Iterable[int]) -> Counter:
    """Weighted number of votes of size y meeting ``members`` in exactly x places, keyed (x, y)."""
    chosen = set(members)
    counts: Counter = Counter()
    for vote in profile.votes:
        counts[(len(vote.alternatives & chosen), vote.size)] += vote.multiplicity
    return counts


def abcs_score(f: BivariateScoring, committee: Committee, profile: Profile) -> Fraction:
    """Score of a committee under the ABCS rule f: the sum over votes of f(|C ∩ vote|, |vote|)."""
    _check_bivariate(f, profile)
    _check_committee(committee, f.k, profile.m)
    return sum(
        (f(x, y) * count for (x, y), count in intersection_counts(profile, committee).items()),
        Fraction(0),
    )


class _ScoreKernel:
    """Scores many committees at once on integer-scaled values of f."""

    def __init__(self, f: BivariateScoring, profile: Profile):
        self.k = f.k
        self.denominator = math.lcm(*(value.denominator for value in f.values.values()))
        table = [
            [
                (
                    int(f.values[(x, vote.size)] * self.denominator)
                    if (x, vote.size) in f.domain
                    else 0
                )
                for x in range(f.k + 1)
            ]
            for vote in profile.votes
        ]
        multiplicities = [vote.multiplicity for vote in profile.votes]
        largest = max((abs(v) for row in table for v in row), default=0) * profile.n
        dtype = np.int64 if largest < 2**62 else object
        self.table = np.array(table, dtype=dtype)
        self.multiplicities = np.array(multiplicities, dtype=dtype)
        self.incidence = np.zeros((len(profile.votes), profile.m), dtype=np.int16)
        for row, vote in enumerate(profile.votes):
            self.incidence[row, sorted(vote.alternatives)] = 1

    def scaled_scores(self, members: np.ndarray) -> np.ndarray:
        """Scores multiplied by ``denominator`` for a (committees x k) array of members."""
        intersections = self.incidence[:, members].sum(axis=2)
        gathered = np.take_along_axis(self.table, intersections.astype(np.intp), axis=1)
        return self.multiplicities @ gathered


def _chunks(m: int, k: int) -> Iterator[np.ndarray]:
    source = combinations(range(m), k)
    while True:
        block = list(islice(source, CHUNK_SIZE))
        if not block:
            return
        yield np.array(block, dtype=np.intp)


def committee_scores(f: BivariateScoring, profile: Profile) -> Iterator[tuple[Committee, Fraction]]:
    """Yields every committee with its exact score, in lexicographic committee order."""
    _check_bivariate(f, profile)
    check_cap("ABCS_WORKBENCH_COMMITTEE_CAP", math.comb(profile.m, f.k), "Committee enumeration")
    kernel = _ScoreKernel(f, profile)
    for block in _chunks(profile.m, f.k):
        for members, scaled in zip(block, kernel.scaled_scores(block)):
            committee = Committee(tuple(int(a) for a in members))
            yield committee, Fraction(int(scaled), kernel.denominator)


def abcs_winners(f: BivariateScoring, profile: Profile, k: int | None = None) -> list[Committee]:
    """All committees of maximum score under f, in lexicographic order of their members."""
    if k is not None and k != f.k:
        raise DomainError(f"Rule is defined for k={f.k}, got k={k}")
    best: Fraction | None = None
    winners: list[Committee] = []
    for committee, score in committee_scores(f, profile):
        if best is None or score > best:
            best, winners = score, [committee]
        elif score == best:
            winners.append(committee)
    return winners


def score_table(f: BivariateScoring, profile: Profile, k: int | None = None) -> pd.DataFrame:
    """Frame of every committee (member names) and its score, best first."""
    if k is not None and k != f.k:
        raise DomainError(f"Rule is defined for k={f.k}, got k={k}")
    rows = [
        {
            "committee": " ".join(committee.names(profile)),
            "members": committee.members,
            "score": score,
        }
        for committee, score in committee_scores(f, profile)
    ]
    frame = pd.DataFrame(rows, columns=["committee", "members", "score"])
    frame = frame.sort_values(["score", "members"], ascending=[False, True], kind="stable")
    return frame.reset_index(drop=True)


def verify_abcs_winner(f: BivariateScoring, profile: Profile, committee: Committee) -> bool:
    _check_bivariate(f, profile)
    _check_committee(committee, f.k, profile.m)
    target = abcs_score(f, committee, profile)
    return all(score <= target for _, score in committee_scores(f, profile))


def thiele_score(
    s: UnivariateScoring,
    committee: Committee | Iterable[int],
    profile: Profile,
) -> Fraction:
    """Thiele score: the sum over votes of s(|A ∩ vote|)."""
    members = set(committee)
    if len(members) > s.k:
        raise DomainError(f"A set of {len(members)} alternatives exceeds k={s.k}")
    if any(a >= profile.m for a in members):
        raise DomainError(f"Alternatives out of range for m={profile.m}")
    return sum(
        (s(len(vote.alternatives & members)) * vote.multiplicity for vote in profile.votes),
        Fraction(0),
    )


def marginal_gains(
    s: UnivariateScoring,
    profile: Profile,
    chosen: frozenset[int],
) -> dict[int, Fraction]:
    """Score increase of adding each alternative outside ``chosen`` to it."""
    increments = s.increments()
    gains = {a: Fraction(0) for a in range(profile.m) if a not in chosen}
    for vote in profile.votes:
        overlap = len(vote.alternatives & chosen)
        if overlap >= s.k:
            continue
        gain = increments[overlap] * vote.multiplicity
        if gain:
            for a in vote.alternatives - chosen:
                gains[a] += gain
    return gains


def score_increase(
    s: UnivariateScoring,
    chosen: Iterable[int],
    a: int,
    profile: Profile,
) -> Fraction:
    chosen = frozenset(chosen)
    if a in chosen:
        raise DomainError(f"Alternative {a} is already chosen")
    if len(chosen) >= s.k:
        raise DomainError(f"{len(chosen)} alternatives already chosen for k={s.k}")
    return marginal_gains(s, profile, chosen)[a]


def _greedy_steps(
    s: UnivariateScoring,
    profile: Profile,
    allowed: frozenset[int] | None = None,
) -> tuple[set[frozenset[int]], dict[frozenset[int], frozenset[int]]]:
    """Runs every tie branch of the sequential rule for k steps.

    Returns the chosen sets reached after the last step together with one greedy predecessor for
    every set reached on the way. Branches only pick from ``allowed`` when it is given.
    """
    _check_univariate(s, profile)
    parents: dict[frozenset[int], frozenset[int]] = {}
    frontier: set[frozenset[int]] = {frozenset()}
    for _ in range(s.k):
        following: set[frozenset[int]] = set()
        for chosen in frontier:
            gains = marginal_gains(s, profile, chosen)
            best = max(gains.values())
            for a, gain in gains.items():
                if gain == best and (allowed is None or a in allowed):
                    successor = chosen | {a}
                    if successor not in following:
                        following.add(successor)
                        parents[successor] = chosen
        check_cap("ABCS_WORKBENCH_COMMITTEE_CAP", len(following), "Sequential branching frontier")
        frontier = following
    return frontier, parents


def seq_winners(s: UnivariateScoring, profile: Profile, k: int | None = None) -> list[Committee]:
    """Committees reachable by some tie-breaking of the sequential Thiele rule for s."""
    if k is not None and k != s.k:
        raise DomainError(f"Rule is defined for k={s.k}, got k={k}")
    reached, _ = _greedy_steps(s, profile)
    return sorted(Committee.of(chosen) for chosen in reached)


def verify_seq_winner(s: UnivariateScoring, profile: Profile, committee: Committee) -> bool:
    """True iff some tie-breaking of the sequential rule selects exactly ``committee``.

    Works over subsets of the committee: a member can be added to a chosen set when its score
    increase is at least that of every alternative not yet chosen.
    """
    _check_committee(committee, s.k, profile.m)
    reached, _ = _greedy_steps(s, profile, allowed=committee.as_set())
    return committee.as_set() in reached


def seq_order(
    s: UnivariateScoring,
    profile: Profile,
    committee: Committee,
) -> tuple[int, ...] | None:
    """An order in which the sequential rule can pick ``committee``, or None if there is none."""
    _check_committee(committee, s.k, profile.m)
    target = committee.as_set()
    reached, parents = _greedy_steps(s, profile, allowed=target)
    if target not in reached:
        return None
    order: list[int] = []
    current = target
    while current:
        previous = parents[current]
        order.append(next(iter(current - previous)))
        current = previous
    return tuple(reversed(order))
