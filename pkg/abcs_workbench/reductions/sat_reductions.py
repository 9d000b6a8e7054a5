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
from itertools import product

import pandas as pd

from ..model import Cnf2p2n, ReductionInstance, UnivariateScoring
from ..rules import marginal_gains, seq_order, verify_seq_winner
from ..solvers.target import find_seq_witness
from ..util import DomainError, check_cap
from .helpers import CheckReport, ProfileBuilder

logger = logging.getLogger(__name__)

PADDING = ("p", "w1", "w2", "w3", "w4", "w5", "w6", "w7")
P_DUMMIES = 9
W_DUMMIES = 6

# (label, flat steps, rising steps) for the rules that must not elect the committee
FORCING_CASES = (
    ("s(1)=s(2)=0", (1, 2), ()),
    ("s(1)=0<s(2)", (1,), (2,)),
    ("s(2)>s(1)>0", (), (1, 2)),
)


def literal_name(literal: int) -> str:
    return f"x{literal}" if literal > 0 else f"nx{-literal}"


def _literals(formula: Cnf2p2n) -> list[str]:
    return [literal_name(lit) for v in range(1, formula.r + 1) for lit in (v, -v)]


def _formula_votes(builder: ProfileBuilder, formula: Cnf2p2n) -> None:
    """Votes built from the formula: literal pairs, clause-literal links and clause specials.

    A literal repeated inside a clause gets one clause vote per occurrence.
    """
    builder.part("part1")
    for v in range(1, formula.r + 1):
        positive, negative = literal_name(v), literal_name(-v)
        builder.vote(positive, negative, multiplicity=3)
        builder.vote(positive, f"d_{positive}")
        builder.vote(negative, f"d_{negative}")
    for j, clause in enumerate(formula.clauses, start=1):
        for literal in clause:
            builder.vote(f"c{j}", literal_name(literal))
        builder.vote(f"c{j}", f"s{j}", multiplicity=2)
        builder.vote(f"s{j}", f"d_s{j}")


def reduce_sat_to_target_seq(formula: Cnf2p2n) -> ReductionInstance:
    """Builds the TargetSeqThiele instance that has a solution iff the formula is satisfiable.

    k = 2r + t + 8 and the target committee holds the padding alternatives p, w1..w7, every
    literal alternative and every clause alternative. Part 1 encodes the formula, part 2 ties
    the padding alternatives to z, part 3 holds one vote per member of S (the committee plus
    the specials s1..st) approving S with that member swapped for z.
    """
    literals = _literals(formula)
    clauses = [f"c{j}" for j in range(1, formula.t + 1)]
    specials = [f"s{j}" for j in range(1, formula.t + 1)]
    dummies = [f"d_{name}" for name in (*literals, *specials)]
    dummies += [f"d_p{j}" for j in range(1, P_DUMMIES + 1)]
    dummies += [f"d_{w}_{j}" for w in PADDING[1:] for j in range(1, W_DUMMIES + 1)]
    builder = ProfileBuilder([*PADDING, *literals, *clauses, *specials, "z", *dummies])
    committee = [*PADDING, *literals, *clauses]

    _formula_votes(builder, formula)

    builder.part("part2")
    builder.vote("p", "z")
    for j in range(1, P_DUMMIES + 1):
        builder.vote("p", f"d_p{j}")
    for w in PADDING[1:]:
        builder.vote(w, "z")
        for j in range(1, W_DUMMIES + 1):
            builder.vote(w, f"d_{w}_{j}")

    builder.part("part3")
    ordered = [*committee, *specials]
    for i in range(len(ordered)):
        builder.vote(*ordered[:i], "z", *ordered[i + 1 :])

    k = 2 * formula.r + formula.t + len(PADDING)
    instance = builder.build(committee, k)
    logger.debug(
        "Sequential instance: m=%d, k=%d, %d distinct votes",
        instance.profile.m,
        k,
        len(instance.profile),
    )
    return instance


def reduce_sat_to_seqcc_verification(formula: Cnf2p2n) -> ReductionInstance:
    """Builds a sequential CC winner verification instance from the formula votes alone.

    The committee of every literal and clause alternative (k = 2r + t) is a sequential CC
    winner iff the formula is satisfiable.
    """
    literals = _literals(formula)
    clauses = [f"c{j}" for j in range(1, formula.t + 1)]
    specials = [f"s{j}" for j in range(1, formula.t + 1)]
    dummies = [f"d_{name}" for name in (*literals, *specials)]
    builder = ProfileBuilder([*literals, *clauses, *specials, *dummies])
    _formula_votes(builder, formula)
    return builder.build([*literals, *clauses], len(literals) + len(clauses))


def brute_sat(formula: Cnf2p2n) -> tuple[bool, ...] | None:
    """First satisfying assignment in the order that tries True before False, or None.

    Raises:
        CapacityError: If the formula has more variables than ``ABCS_WORKBENCH_ORACLE_CAP``.
    """
    check_cap("ABCS_WORKBENCH_ORACLE_CAP", formula.r, "Satisfiability oracle")
    for assignment in product((True, False), repeat=formula.r):
        if formula.is_satisfied_by(assignment):
            return assignment
    return None


def enumerate_2p2n(r: int) -> list[Cnf2p2n]:
    """Every 2P2N formula over r variables, once per multiset of clauses.

    Clauses are multisets of literals, so a clause may repeat a literal or hold both literals of
    a variable. There are no formulas unless 3 divides 4r.
    """
    if r < 1:
        raise DomainError(f"Need at least one variable, got r={r}")
    if (4 * r) % 3:
        return []
    order = [lit for v in range(1, r + 1) for lit in (v, -v)]
    counts = [2] * len(order)
    found: list[Cnf2p2n] = []
    clauses: list[tuple[int, int, int]] = []

    def extend(previous: tuple[int, int, int]) -> None:
        first = next((i for i, count in enumerate(counts) if count), None)
        if first is None:
            found.append(Cnf2p2n(r, tuple(tuple(order[i] for i in clause) for clause in clauses)))
            return
        counts[first] -= 1
        for second in range(first, len(order)):
            if not counts[second]:
                continue
            counts[second] -= 1
            for third in range(second, len(order)):
                if not counts[third] or (first, second, third) < previous:
                    continue
                counts[third] -= 1
                clauses.append((first, second, third))
                extend((first, second, third))
                clauses.pop()
                counts[third] += 1
            counts[second] += 1
        counts[first] += 1

    extend((-1, -1, -1))
    return found


def sat_reduction_report(instance: ReductionInstance, formula: Cnf2p2n) -> pd.DataFrame:
    """Checks the behaviour of a :func:`reduce_sat_to_target_seq` instance.

    - On part 3, every member of S outside a prefix of the committee gains the same, and z
      gains exactly s(i+1) - s(i) more, for the CC, AV and PAV functions.
    - No rule with s(1) = s(2) = 0, with s(1) = 0 < s(2) or with s(2) > s(1) > 0 elects the
      committee.
    - A witness rule exists iff the formula is satisfiable, and sequential CC elects the
      committee iff the formula is satisfiable.
    """
    profile, committee, k = instance
    part_3 = instance.part("part3")
    z = profile.index_of("z")
    members = committee.members
    group = committee.as_set() | {profile.index_of(f"s{j}") for j in range(1, formula.t + 1)}
    report = CheckReport()

    prefixes = {frozenset(members[:i]) for i in range(k)}
    order = seq_order(UnivariateScoring.cc(k), profile, committee)
    if order is not None:
        prefixes |= {frozenset(order[:i]) for i in range(k)}

    for name, s in (
        ("cc", UnivariateScoring.cc(k)),
        ("av", UnivariateScoring.av(k)),
        ("pav", UnivariateScoring.pav(k)),
    ):
        equal, leads = True, True
        for chosen in prefixes:
            gains = marginal_gains(s, part_3, chosen)
            rest = group - chosen
            step = s(len(chosen) + 1) - s(len(chosen))
            equal = equal and len({gains[a] for a in rest}) == 1
            leads = leads and all(gains[z] == gains[a] + step for a in rest)
        report.add(f"equal part 3 gains on S ({name})", True, equal)
        report.add(f"z leads on part 3 by s(i+1)-s(i) ({name})", True, leads)

    for label, flat, rising in FORCING_CASES:
        found = find_seq_witness(profile, committee, k, flat_steps=flat, rising_steps=rising)
        report.add(f"no witness with {label}", None, None if found is None else found.rule.values)

    satisfiable = brute_sat(formula) is not None
    found = find_seq_witness(profile, committee, k)
    report.add("witness exists iff satisfiable", satisfiable, found is not None)
    if found is not None:
        report.add("witness has s(1)=s(2)>0", True, found.rule(1) == found.rule(2) > 0)
    report.add(
        "sequential CC elects the committee iff satisfiable",
        satisfiable,
        verify_seq_winner(UnivariateScoring.cc(k), profile, committee),
    )
    return report.frame()


def check_sat_reduction(instance: ReductionInstance, formula: Cnf2p2n) -> bool:
    return bool(sat_reduction_report(instance, formula)["holds"].all())
