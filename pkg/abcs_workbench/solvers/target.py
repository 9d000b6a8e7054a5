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
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable

from tqdm import tqdm

from ..lp_engine import LinearConstraintSystem, feasible
from ..model import BivariateScoring, Committee, Profile, UnivariateScoring, pair_domain
from ..rules import (
    abcs_score,
    committee_scores,
    intersection_counts,
    verify_abcs_winner,
    verify_seq_winner,
)
from ..util import CapacityError, DomainError, WitnessError, get_cap

logger = logging.getLogger(__name__)

# Rival committees added to the system per round of constraint generation
RIVAL_BATCH = 8

Row = tuple[int, ...]


def _check_target_input(profile: Profile, committee: Committee, k: int) -> None:
    if not 1 < k < profile.m:
        raise DomainError(f"Committee size must satisfy 1 < k < m, got m={profile.m}, k={k}")
    if committee.k != k:
        raise DomainError(f"Committee has size {committee.k}, expected {k}")
    if committee.members[-1] >= profile.m:
        raise DomainError(
            f"Committee member {committee.members[-1]} out of range for m={profile.m}",
        )


class IncrementRows:
    """Writes committee scores as linear forms in the increments g(x, y) = f(x, y) - f(x-1, y).

    Every normalized rule corresponds to exactly one nonnegative increment vector, so score
    comparisons between committees become homogeneous linear constraints.
    """

    def __init__(self, m: int, k: int):
        self.m = m
        self.k = k
        self.domain = pair_domain(m, k)
        self.pairs = self.domain.increment_pairs()
        self.names = [f"g{x}_{y}" for x, y in self.pairs]
        self._name_of = dict(zip(self.pairs, self.names))

    def score_form(self, profile: Profile, members: Iterable[int]) -> dict[str, int]:
        form: dict[str, int] = {}
        for (x, y), count in intersection_counts(profile, members).items():
            for step in range(self.domain.floor(y) + 1, x + 1):
                name = self._name_of[(step, y)]
                form[name] = form.get(name, 0) + count
        return form

    @staticmethod
    def difference(form_a: dict[str, int], form_b: dict[str, int]) -> dict[str, int]:
        difference = dict(form_a)
        for name, value in form_b.items():
            difference[name] = difference.get(name, 0) - value
        return {name: value for name, value in difference.items() if value}

    def system(self) -> LinearConstraintSystem:
        """Nonnegative increments with at least one unit of total increase."""
        system = LinearConstraintSystem(self.names, nonnegative=True)
        system.add_ge({name: 1 for name in self.names}, 1)
        return system

    def rule(self, values: dict[str, Fraction]) -> BivariateScoring:
        increments = {pair: values[name] for pair, name in zip(self.pairs, self.names)}
        return BivariateScoring.from_increments(self.m, self.k, increments)


def target_abcs(
    profile: Profile,
    committee: Committee,
    k: int,
    progress: bool = False,
) -> BivariateScoring | None:
    """Finds a non-trivial normalized ABCS rule under which ``committee`` wins, or returns None.

    The rule exists iff the increments admit a nonnegative, non-zero solution of
    ``score(C) - score(D) >= 0`` for every committee D. Rival rows are added lazily: solve, score
    every committee under the witness, add the most violating rivals and repeat until the witness
    makes ``committee`` a winner or the rows become infeasible.
    """
    _check_target_input(profile, committee, k)
    rows = IncrementRows(profile.m, k)
    system = rows.system()
    target_form = rows.score_form(profile, committee)
    seen: set[tuple] = set()

    def add_rival(members: Iterable[int]) -> bool:
        difference = rows.difference(target_form, rows.score_form(profile, members))
        if all(value >= 0 for value in difference.values()):
            return False
        key = tuple(sorted(difference.items()))
        if key in seen:
            return False
        seen.add(key)
        system.add_ge(difference, 0)
        return True

    chosen = committee.as_set()
    for out in committee.members:
        for into in range(profile.m):
            if into not in chosen:
                add_rival((chosen - {out}) | {into})

    with tqdm(desc="Constraint rounds", disable=not progress) as bar:
        while True:
            result = feasible(system)
            bar.update()
            if not result.feasible:
                logger.debug("No rule makes the committee win (%d rival rows)", len(system) - 1)
                return None

            f = rows.rule(result.values())
            target = abcs_score(f, committee, profile)
            violators = [
                (score, rival) for rival, score in committee_scores(f, profile) if score > target
            ]
            if not violators:
                if not verify_abcs_winner(f, profile, committee):
                    raise WitnessError("Witness rule does not elect the committee")
                logger.debug("Witness rule found with %d rival rows", len(system) - 1)
                return f

            violators.sort(key=lambda item: (-item[0], item[1].members))
            added = sum(add_rival(rival.members) for _, rival in violators[:RIVAL_BATCH])
            if not added:
                raise RuntimeError("Violated rival rows are already part of the system")


@dataclass(frozen=True)
class SeqTargetResult:
    """A rule that elects the committee sequentially, with the order in which it is picked."""

    rule: UnivariateScoring
    order: tuple[int, ...]


def _primitive(row: Row) -> Row:
    divisor = 0
    for value in row:
        divisor = gcd(divisor, value)
    return row if divisor in (0, 1) else tuple(value // divisor for value in row)


def _dominated(row: Row, by: Row) -> bool:
    return by != row and all(a <= b for a, b in zip(by, row))


class _PrefixSearch:
    """Depth-first search over pick orders of a committee under the sequential Thiele rule.

    Increments d_j = s(j) - s(j-1) are the unknowns; picking ``e`` after the set X is allowed
    iff gain(X, e) >= gain(X, a) for every unpicked a, each a linear form in d. A node is the
    picked set together with the constraints collected on its path, kept in canonical form:

    * coordinates forced to 0 are removed from every row,
    * rows that hold for every d >= 0 are dropped and rows that are <= 0 everywhere force
      their support to 0,
    * rows are reduced to primitive integer vectors and only minimal rows are kept.

    Picked sets that failed are remembered with their constraints; a later visit whose
    constraints imply one of the failed sets is pruned. The search is split on the first
    positive increment j: picks before step j are free and picks at step j only compare
    counts of votes that already hold j-1 picked alternatives.
    """

    def __init__(
        self,
        profile: Profile,
        committee: Committee,
        k: int,
        flat_steps: Iterable[int] = (),
        rising_steps: Iterable[int] = (),
        progress: bool = False,
    ):
        self.profile = profile
        self.m = profile.m
        self.k = k
        self.members = committee.as_set()
        self.votes = [(vote.alternatives, vote.multiplicity) for vote in profile.votes]
        self.flat = frozenset(j - 1 for j in flat_steps)
        self.rising = frozenset(j - 1 for j in rising_steps)
        for j in self.flat | self.rising:
            if not 0 <= j < k:
                raise DomainError(f"Step {j + 1} lies outside 1..{k}")
        self.cap = get_cap("ABCS_WORKBENCH_SEARCH_CAP")
        self.nodes = 0
        self.failed: dict[frozenset[int], list[tuple[frozenset[int], frozenset[Row]]]] = {}
        self.positive: frozenset[int] = frozenset()
        self.bar = tqdm(desc="Search nodes", disable=not progress)

    def _visit(self) -> None:
        self.nodes += 1
        self.bar.update()
        if self.nodes > self.cap:
            raise CapacityError(
                f"Search exceeded {self.cap} nodes (set ABCS_WORKBENCH_SEARCH_CAP to raise it)",
            )

    def _gains(self, chosen: frozenset[int]) -> dict[int, list[int]]:
        gains = {a: [0] * self.k for a in range(self.m) if a not in chosen}
        for alternatives, multiplicity in self.votes:
            overlap = len(alternatives & chosen)
            if overlap < self.k:
                for a in alternatives - chosen:
                    gains[a][overlap] += multiplicity
        return gains

    def _step_rows(self, gains: dict[int, list[int]], pick: int) -> set[Row]:
        mine = gains[pick]
        return {
            tuple(p - q for p, q in zip(mine, theirs)) for a, theirs in gains.items() if a != pick
        }

    def _canonical(
        self,
        zero: frozenset[int],
        rows: Iterable[Row],
    ) -> tuple[frozenset[int], frozenset[Row]] | None:
        forced = set(zero)
        pending = list(rows)
        changed = True
        while changed:
            changed = False
            kept = []
            for row in pending:
                reduced = tuple(0 if i in forced else v for i, v in enumerate(row))
                if all(v >= 0 for v in reduced):
                    continue
                if all(v <= 0 for v in reduced):
                    forced.update(i for i, v in enumerate(reduced) if v < 0)
                    changed = True
                    continue
                kept.append(reduced)
            pending = kept
        if forced & self.positive or len(forced) == self.k:
            return None
        primitive = {_primitive(row) for row in pending}
        minimal = frozenset(
            row for row in primitive if not any(_dominated(row, other) for other in primitive)
        )
        return frozenset(forced), minimal

    def _subsumed(self, chosen: frozenset[int], zero: frozenset[int], rows: frozenset[Row]) -> bool:
        for failed_zero, failed_rows in self.failed.get(chosen, ()):
            if not failed_zero <= zero:
                continue
            implied = True
            for row in failed_rows:
                reduced = _primitive(tuple(0 if i in zero else v for i, v in enumerate(row)))
                if all(v >= 0 for v in reduced) or reduced in rows:
                    continue
                if not any(all(a <= b for a, b in zip(other, reduced)) for other in rows):
                    implied = False
                    break
            if implied:
                return True
        return False

    def _admits(
        self,
        witness: tuple[Fraction, ...],
        zero: frozenset[int],
        rows: frozenset[Row],
    ) -> bool:
        if any(witness[i] != 0 for i in zero) or any(witness[i] <= 0 for i in self.positive):
            return False
        return all(sum(a * w for a, w in zip(row, witness) if a) >= 0 for row in rows)

    def _solve(self, zero: frozenset[int], rows: frozenset[Row]) -> tuple[Fraction, ...] | None:
        free = [i for i in range(self.k) if i not in zero]
        names = {i: f"d{i + 1}" for i in free}
        system = LinearConstraintSystem(list(names.values()), nonnegative=True)
        for row in rows:
            system.add_ge({names[i]: row[i] for i in free if row[i]}, 0)
        for i in self.positive:
            system.add_ge({names[i]: 1}, 1)
        result = feasible(system)
        if not result.feasible:
            return None
        witness = [Fraction(0)] * self.k
        for i, value in zip(free, result.witness):
            witness[i] = value
        return tuple(witness)

    def _child(
        self,
        zero: frozenset[int],
        rows: frozenset[Row],
        extra: set[Row],
        witness: tuple[Fraction, ...],
    ) -> tuple[frozenset[int], frozenset[Row], tuple[Fraction, ...]] | None:
        state = self._canonical(zero, rows | extra)
        if state is None:
            return None
        child_zero, child_rows = state
        if not self._admits(witness, child_zero, child_rows):
            witness = self._solve(child_zero, child_rows)
            if witness is None:
                return None
        return child_zero, child_rows, witness

    def _extend(
        self,
        chosen: frozenset[int],
        order: tuple[int, ...],
        zero: frozenset[int],
        rows: frozenset[Row],
        witness: tuple[Fraction, ...],
    ) -> tuple[tuple[int, ...], tuple[Fraction, ...]] | None:
        if len(chosen) == self.k:
            return order, witness
        self._visit()
        if self._subsumed(chosen, zero, rows):
            return None

        gains = self._gains(chosen)

        def value(a: int) -> Fraction:
            return sum((g * w for g, w in zip(gains[a], witness) if g), Fraction(0))

        for pick in sorted(self.members - chosen, key=lambda a: (-value(a), a)):
            child = self._child(zero, rows, self._step_rows(gains, pick), witness)
            if child is None:
                continue
            found = self._extend(chosen | {pick}, (*order, pick), *child)
            if found is not None:
                return found

        self.failed.setdefault(chosen, []).append((zero, rows))
        return None

    def _outpaced(self, level: int) -> set[int]:
        """Members that lose to some outsider whenever ``level`` is the first positive increment.

        ``e`` loses to ``o`` when every vote holding e but not o has too few other members to
        count at this level, while some vote holding o but not e always counts.
        """
        losers = set()
        for e in self.members:
            rest = self.members - {e}
            for o in range(self.m):
                if o in self.members:
                    continue
                silent = all(
                    len(alternatives & rest) < level - 1
                    for alternatives, _ in self.votes
                    if e in alternatives and o not in alternatives
                )
                counted = level == 1 or any(
                    rest <= alternatives
                    for alternatives, _ in self.votes
                    if o in alternatives and e not in alternatives
                )
                if silent and counted:
                    losers.add(e)
                    break
        return losers

    def _from_level(self, level: int) -> tuple[tuple[int, ...], tuple[Fraction, ...]] | None:
        zero = frozenset(range(level - 1)) | self.flat
        self.positive = frozenset({level - 1}) | self.rising
        self.failed = {}
        if zero & self.positive:
            return None
        witness = self._solve(zero, frozenset())
        if witness is None:
            return None
        if level == 1:
            return self._extend(frozenset(), (), zero, frozenset(), witness)

        losers = self._outpaced(level)
        logger.debug("First positive increment %d: %d members ruled out", level, len(losers))
        for last in sorted(self.members - losers):
            for head in combinations(sorted(self.members - {last}), level - 1):
                self._visit()
                prefix = frozenset(head)
                gains = self._gains(prefix)
                child = self._child(zero, frozenset(), self._step_rows(gains, last), witness)
                if child is None:
                    continue
                found = self._extend(prefix | {last}, (*head, last), *child)
                if found is not None:
                    return found
        return None

    def run(self) -> SeqTargetResult | None:
        try:
            for level in range(1, self.k + 1):
                if any(step < level - 1 for step in self.rising):
                    break
                found = self._from_level(level)
                if found is not None:
                    order, witness = found
                    rule = UnivariateScoring.from_increments(witness)
                    if not verify_seq_winner(rule, self.profile, Committee.of(self.members)):
                        raise WitnessError("Witness rule does not elect the committee")
                    logger.debug("Witness rule found after %d search nodes", self.nodes)
                    return SeqTargetResult(rule, order)
            logger.debug("No rule elects the committee (%d search nodes)", self.nodes)
            return None
        finally:
            self.bar.close()


def find_seq_witness(
    profile: Profile,
    committee: Committee,
    k: int,
    flat_steps: Iterable[int] = (),
    rising_steps: Iterable[int] = (),
    progress: bool = False,
) -> SeqTargetResult | None:
    """Like :func:`target_seq_thiele` but also returns the order in which the committee is picked.

    ``flat_steps`` and ``rising_steps`` restrict the search to rules with s(j) = s(j-1) for every
    listed flat step j and s(j) > s(j-1) for every listed rising step.
    """
    _check_target_input(profile, committee, k)
    return _PrefixSearch(profile, committee, k, flat_steps, rising_steps, progress).run()


def target_seq_thiele(
    profile: Profile,
    committee: Committee,
    k: int,
    progress: bool = False,
) -> UnivariateScoring | None:
    """Finds a non-trivial Thiele function whose sequential rule can elect ``committee``.

    Returns None if there is none.

    Raises:
        CapacityError: If the search visits more nodes than ``ABCS_WORKBENCH_SEARCH_CAP``.
    """
    result = find_seq_witness(profile, committee, k, progress=progress)
    return None if result is None else result.rule
