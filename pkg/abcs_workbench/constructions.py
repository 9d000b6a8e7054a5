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
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations
from pathlib import Path
from typing import Callable, Hashable, Sequence, Union

import pandas as pd
from tqdm import tqdm

from .model import BivariateScoring, Committee, Profile, UnivariateScoring, pair_domain
from .model.helpers import data_lines, parse_int
from .rules import committee_scores
from .solvers.erm import winners_under
from .util import DomainError, ParseError, check_cap

logger = logging.getLogger(__name__)

ScoringRule = Union[BivariateScoring, UnivariateScoring]
Evaluator = Callable[[ScoringRule, Profile], list]
MANIFEST = "manifest.txt"


@dataclass(frozen=True)
class ShatterFamily:
    """Profiles indexed by ``tags`` plus a rule for every subset of tags.

    ``rule_builder(S)`` returns the rule that should agree with ``g1`` on the profiles tagged in
    S and with ``g2`` on the others. ``committee_a`` and ``committee_c`` are the two committees
    that win on every profile of the family.
    """

    kind: str
    m: int
    k: int
    tags: tuple[Hashable, ...]
    profiles: tuple[Profile, ...]
    rule_builder: Callable[[frozenset], ScoringRule]
    g1: ScoringRule
    g2: ScoringRule
    committee_a: Committee
    committee_c: Committee

    def __len__(self) -> int:
        return len(self.profiles)


def _subsets(tags: Sequence[Hashable]) -> chain:
    return chain.from_iterable(combinations(tags, size) for size in range(len(tags) + 1))


def t_set(m: int, k: int) -> list[tuple[int, int]]:
    """Pairs (x, y) with 2 <= y <= m-1 and x strictly above the floor of row y, without (k, k)."""
    if m < 3 or not 2 <= k <= m - 1:  # noqa: PLR2004
        raise DomainError(f"Requires m >= 3 and 2 <= k <= m-1, got m={m}, k={k}")
    domain = pair_domain(m, k)
    return [(x, y) for x, y in domain.increment_pairs() if y >= 2 and (x, y) != (k, k)]  # noqa: PLR2004


def abcs_shatter_rule(m: int, k: int, chosen: frozenset | set) -> BivariateScoring:
    """Rule with f(1,1) = 1, f(k,k) = 4k-1 and, on the pairs of :func:`t_set`, increment 0 on
    ``chosen`` pairs and 2 elsewhere."""
    domain = pair_domain(m, k)
    tagged = set(t_set(m, k))
    if not set(chosen) <= tagged:
        raise DomainError(f"{sorted(set(chosen) - tagged)} are not part of the family")
    increments: dict[tuple[int, int], Fraction] = {(1, 1): Fraction(1)}
    for pair in tagged:
        increments[pair] = Fraction(0 if pair in chosen else 2)
    below_top = sum(
        (increments.get((x, k), Fraction(0)) for x in range(domain.floor(k) + 1, k)),
        Fraction(0),
    )
    increments[(k, k)] = 4 * k - 1 - below_top
    return BivariateScoring.from_increments(m, k, increments)


def abcs_shatter_family(m: int, k: int) -> ShatterFamily:
    """Profiles {a}, A, C and {b1..b(x-1), c, d1..d(y-x)} for every (x, y) of :func:`t_set`.

    Alternatives are a, b1..b(k-1), c, d1..d(m-k-1) in this index order, A = {a, b1..b(k-1)}
    and C = {b1..b(k-1), c}.
    """
    tags = tuple(t_set(m, k))
    names = ("a", *(f"b{i}" for i in range(1, k)), "c", *(f"d{i}" for i in range(1, m - k)))
    a, c = 0, k
    bs = list(range(1, k))
    ds = list(range(k + 1, m))
    committee_a = Committee((a, *bs))
    committee_c = Committee((*bs, c))
    profiles = tuple(
        Profile.from_sets(
            m,
            [{a}, committee_a.members, committee_c.members, bs[: x - 1] + [c] + ds[: y - x]],
            names,
        )
        for x, y in tags
    )
    return ShatterFamily(
        kind="abcs",
        m=m,
        k=k,
        tags=tags,
        profiles=profiles,
        rule_builder=lambda chosen: abcs_shatter_rule(m, k, chosen),
        g1=abcs_shatter_rule(m, k, frozenset(tags)),
        g2=abcs_shatter_rule(m, k, frozenset()),
        committee_a=committee_a,
        committee_c=committee_c,
    )


def seq_shatter_rule(k: int, chosen: frozenset | set) -> UnivariateScoring:
    """Thiele function with s(1) = 1 and increment 0 at every step in ``chosen``, 2 at the rest."""
    steps = set(range(2, k + 1))
    if not set(chosen) <= steps:
        raise DomainError(f"{sorted(set(chosen) - steps)} are not steps in 2..{k}")
    return UnivariateScoring.from_increments(
        [1] + [0 if x in chosen else 2 for x in range(2, k + 1)],
    )


def seq_shatter_family(k: int) -> ShatterFamily:
    """Profiles over b1..b(k-1), a, c (m = k+1): three votes {bi} per i, {a} and {b1..b(x-1), c}."""
    if k < 2:  # noqa: PLR2004
        raise DomainError(f"Requires k >= 2, got {k}")
    m = k + 1
    names = (*(f"b{i}" for i in range(1, k)), "a", "c")
    bs = list(range(k - 1))
    a, c = k - 1, k
    tags = tuple(range(2, k + 1))
    profiles = []
    for x in tags:
        sets = [{b} for b in bs for _ in range(3)] + [{a}, set(bs[: x - 1]) | {c}]
        profiles.append(Profile.from_sets(m, sets, names))
    return ShatterFamily(
        kind="seq",
        m=m,
        k=k,
        tags=tags,
        profiles=tuple(profiles),
        rule_builder=lambda chosen: seq_shatter_rule(k, chosen),
        g1=seq_shatter_rule(k, frozenset(tags)),
        g2=seq_shatter_rule(k, frozenset()),
        committee_a=Committee((*bs, a)),
        committee_c=Committee((*bs, c)),
    )


def verify_g_shattering(
    profiles: Sequence[Profile],
    rule_builder: Callable[[frozenset], ScoringRule],
    g: ScoringRule,
    evaluate: Evaluator = winners_under,
    tags: Sequence[Hashable] | None = None,
    progress: bool = False,
) -> bool:
    """True iff for every subset S of tags, ``rule_builder(S)`` gives the same winners as g on
    the profiles tagged in S and different winners on all others.

    Raises:
        CapacityError: If there are more profiles than ``ABCS_WORKBENCH_SHATTER_CAP``.
    """
    tags = tuple(range(len(profiles))) if tags is None else tuple(tags)
    check_cap("ABCS_WORKBENCH_SHATTER_CAP", len(profiles), "Shattering check")
    reference = [evaluate(g, profile) for profile in profiles]
    for subset in tqdm(_subsets(tags), total=2 ** len(tags), desc="Subsets", disable=not progress):
        chosen = frozenset(subset)
        rule = rule_builder(chosen)
        for tag, profile, expected in zip(tags, profiles, reference):
            if (evaluate(rule, profile) == expected) != (tag in chosen):
                logger.debug("Subset %s fails on profile %s", sorted(chosen), tag)
                return False
    return True


def verify_n_shattering(
    family: ShatterFamily,
    evaluate: Evaluator = winners_under,
    progress: bool = False,
) -> bool:
    """True iff g1 and g2 disagree on every profile and every ``rule_builder(S)`` agrees with g1
    on S and with g2 off S.

    Raises:
        CapacityError: If the family is larger than ``ABCS_WORKBENCH_SHATTER_CAP``.
    """
    check_cap("ABCS_WORKBENCH_SHATTER_CAP", len(family.profiles), "Shattering check")
    first = [evaluate(family.g1, profile) for profile in family.profiles]
    second = [evaluate(family.g2, profile) for profile in family.profiles]
    if any(a == b for a, b in zip(first, second)):
        return False
    for subset in tqdm(
        _subsets(family.tags),
        total=2 ** len(family.tags),
        desc="Subsets",
        disable=not progress,
    ):
        chosen = frozenset(subset)
        rule = family.rule_builder(chosen)
        for tag, profile, win_1, win_2 in zip(family.tags, family.profiles, first, second):
            if evaluate(rule, profile) != (win_1 if tag in chosen else win_2):
                logger.debug("Subset %s fails on profile %s", sorted(chosen), tag)
                return False
    return True


def margin_table(family: ShatterFamily, progress: bool = False) -> pd.DataFrame:
    """Score margins of an ABCS family for every subset of tags and every profile.

    Columns: ``x``, ``y``, ``subset`` (sorted tags), ``in_subset``, ``a_minus_c`` and
    ``a_minus_rival``, the smallest margin of A over a committee other than A and C.
    """
    if family.kind != "abcs":
        raise DomainError("Margins are defined for ABCS families only")
    check_cap("ABCS_WORKBENCH_SHATTER_CAP", len(family.profiles), "Margin table")
    rows = []
    for subset in tqdm(
        _subsets(family.tags),
        total=2 ** len(family.tags),
        desc="Subsets",
        disable=not progress,
    ):
        chosen = frozenset(subset)
        rule = family.rule_builder(chosen)
        for (x, y), profile in zip(family.tags, family.profiles):
            scores = dict(committee_scores(rule, profile))
            score_a = scores.pop(family.committee_a)
            score_c = scores.pop(family.committee_c)
            rows.append(
                {
                    "x": x,
                    "y": y,
                    "subset": tuple(sorted(chosen)),
                    "in_subset": (x, y) in chosen,
                    "a_minus_c": score_a - score_c,
                    "a_minus_rival": score_a - max(scores.values()),
                },
            )
    return pd.DataFrame(rows)


def outcome_table(family: ShatterFamily, progress: bool = False) -> pd.DataFrame:
    """Winners of every ``rule_builder(S)`` on every profile, next to the expected committee."""
    check_cap("ABCS_WORKBENCH_SHATTER_CAP", len(family.profiles), "Outcome table")
    rows = []
    for subset in tqdm(
        _subsets(family.tags),
        total=2 ** len(family.tags),
        desc="Subsets",
        disable=not progress,
    ):
        chosen = frozenset(subset)
        rule = family.rule_builder(chosen)
        for tag, profile in zip(family.tags, family.profiles):
            winners = winners_under(rule, profile)
            expected = family.committee_a if tag in chosen else family.committee_c
            rows.append(
                {
                    "tag": tag,
                    "subset": tuple(sorted(chosen)),
                    "winners": tuple(" ".join(w.names(profile)) for w in winners),
                    "expected": " ".join(expected.names(profile)),
                    "unique_expected": winners == [expected],
                },
            )
    return pd.DataFrame(rows)


def _tag_tokens(tag: Hashable) -> list[str]:
    return [str(v) for v in tag] if isinstance(tag, tuple) else [str(tag)]


def export_family(family: ShatterFamily, directory: str | Path) -> Path:
    """Writes one profile file per tag plus a manifest listing the tags.

    Returns:
        Path: The manifest file.
    """
    from .prf import PRF

    directory = Path(directory).absolute()
    directory.mkdir(parents=True, exist_ok=True)
    lines = [f"kind {family.kind}", f"m {family.m}", f"k {family.k}"]
    for tag, profile in zip(family.tags, family.profiles):
        tokens = _tag_tokens(tag)
        filename = f"P_{'_'.join(tokens)}.prf"
        PRF.from_profile(profile, family.k).save(directory / filename)
        lines.append(f"profile {filename} {' '.join(tokens)}")
    manifest = directory / MANIFEST
    manifest.write_text("\n".join(lines) + "\n")
    return manifest


def load_family(directory: str | Path) -> ShatterFamily:
    """Reads a family written by :func:`export_family`.

    The rules are rebuilt from the manifest's kind, m and k; the profiles come from the files.
    """
    from .prf import PRF

    directory = Path(directory)
    manifest = directory / MANIFEST
    if not manifest.exists():
        raise FileNotFoundError(f"No {MANIFEST} found in {directory}")
    header: dict[str, str] = {}
    entries: list[tuple[str, tuple]] = []
    for line_no, tokens in data_lines(manifest.read_text()):
        if tokens[0] in ("kind", "m", "k") and len(tokens) == 2:  # noqa: PLR2004
            header[tokens[0]] = tokens[1]
        elif tokens[0] == "profile" and len(tokens) >= 3:  # noqa: PLR2004
            values = tuple(parse_int(token, "Profile tag", line_no) for token in tokens[2:])
            entries.append((tokens[1], values if len(values) > 1 else values[0]))
        else:
            raise ParseError(f"unrecognised manifest line '{' '.join(tokens)}'", line_no)
    if set(header) != {"kind", "m", "k"}:
        raise ParseError(f"manifest must name kind, m and k, found {sorted(header)}")

    k = parse_int(header["k"], "k")
    if header["kind"] == "abcs":
        family = abcs_shatter_family(parse_int(header["m"], "m"), k)
    elif header["kind"] == "seq":
        family = seq_shatter_family(k)
    else:
        raise ParseError(f"unknown family kind '{header['kind']}'")

    tags = tuple(tag for _, tag in entries)
    if set(tags) != set(family.tags):
        raise ParseError("manifest tags do not match the family for the given m and k")
    profiles = tuple(PRF(directory / filename).profile for filename, _ in entries)
    return dataclasses.replace(family, tags=tags, profiles=profiles)
