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

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from ..to_from_json import Jsonable
from ..util import DomainError


@dataclass(frozen=True)
class Alternative:
    index: int
    name: str | None = None

    def __str__(self) -> str:
        return self.name if self.name is not None else f"a{self.index}"


@dataclass(frozen=True)
class ApprovalVote(Jsonable):
    """A set of approved alternative indices repeated ``multiplicity`` times."""

    alternatives: frozenset[int]
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alternatives", frozenset(self.alternatives))
        if not self.alternatives:
            raise DomainError("An approval vote must approve at least one alternative")
        if any(not isinstance(a, int) or a < 0 for a in self.alternatives):
            raise DomainError(
                f"Vote holds invalid alternative indices: {sorted(self.alternatives)}",
            )
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise DomainError(
                f"Vote multiplicity must be a positive integer, got {self.multiplicity}",
            )

    @property
    def size(self) -> int:
        return len(self.alternatives)

    def __contains__(self, index: int) -> bool:
        return index in self.alternatives


@dataclass(frozen=True)
class Profile(Jsonable):
    """Multiset of approval votes over the alternatives 0..m-1.

    Args:
        m (int): Number of alternatives.
        votes (Sequence[ApprovalVote]): Votes in input order. Repeated votes may be compressed
            into one entry with a multiplicity, scores are multiplicity-weighted either way.
        names (Sequence[str], optional): Display names for the alternatives. Defaults to a0..a(m-1).

    Raises:
        DomainError: If a vote refers to an index outside 0..m-1, approves every alternative,
            or if the profile holds no votes.
    """

    m: int
    votes: tuple[ApprovalVote, ...]
    names: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "votes", tuple(self.votes))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
        if not isinstance(self.m, int) or self.m < 2:
            raise DomainError(f"A profile needs at least 2 alternatives, got m={self.m}")
        if not self.votes:
            raise DomainError("A profile needs at least one vote")
        for position, vote in enumerate(self.votes):
            if max(vote.alternatives) >= self.m:
                raise DomainError(
                    f"Vote {position} refers to alternative {max(vote.alternatives)} but m={self.m}",
                )
            if vote.size == self.m:
                raise DomainError(f"Vote {position} approves all {self.m} alternatives")
        if self.names is not None:
            if len(self.names) != self.m:
                raise DomainError(f"Expected {self.m} alternative names, got {len(self.names)}")
            if len(set(self.names)) != self.m:
                raise DomainError("Alternative names must be unique")
            if any(not name or any(ch.isspace() for ch in name) for name in self.names):
                raise DomainError("Alternative names must be non-empty and free of whitespace")

    @classmethod
    def from_sets(
        cls,
        m: int,
        sets: Iterable[Iterable[int]],
        names: Sequence[str] | None = None,
        multiplicities: Sequence[int] | None = None,
    ) -> Profile:
        sets = list(sets)
        if multiplicities is None:
            multiplicities = [1] * len(sets)
        if len(multiplicities) != len(sets):
            raise DomainError("One multiplicity per vote is required")
        votes = [ApprovalVote(frozenset(s), mult) for s, mult in zip(sets, multiplicities)]
        return cls(m, tuple(votes), None if names is None else tuple(names))

    @classmethod
    def from_named_sets(
        cls,
        names: Sequence[str],
        sets: Iterable[Iterable[str]],
        multiplicities: Sequence[int] | None = None,
    ) -> Profile:
        lookup = {name: idx for idx, name in enumerate(names)}
        try:
            index_sets = [[lookup[name] for name in s] for s in sets]
        except KeyError as err:
            raise DomainError(f"Unknown alternative name: {err.args[0]}") from err
        return cls.from_sets(len(names), index_sets, names, multiplicities)

    @property
    def n(self) -> int:
        """Number of voters, counting multiplicities."""
        return sum(vote.multiplicity for vote in self.votes)

    @property
    def alternatives(self) -> tuple[Alternative, ...]:
        return tuple(Alternative(i, self.name_of(i)) for i in range(self.m))

    def name_of(self, index: int) -> str:
        return self.names[index] if self.names is not None else f"a{index}"

    def all_names(self) -> tuple[str, ...]:
        return self.names if self.names is not None else tuple(f"a{i}" for i in range(self.m))

    def index_of(self, name: str) -> int:
        try:
            return self.all_names().index(name)
        except ValueError as err:
            raise DomainError(f"Unknown alternative name: {name}") from err

    def committee(self, members: Iterable[str | int]) -> Committee:
        """Builds a committee from alternative names or indices."""
        indices = [m if isinstance(m, int) else self.index_of(m) for m in members]
        committee = Committee.of(indices)
        if committee.members and committee.members[-1] >= self.m:
            raise DomainError(
                f"Committee member {committee.members[-1]} out of range for m={self.m}",
            )
        return committee

    def restrict(self, positions: Iterable[int]) -> Profile:
        """Sub-profile holding the votes at the given positions, in the given order."""
        return Profile(self.m, tuple(self.votes[i] for i in positions), self.names)

    def concat(self, other: Profile) -> Profile:
        if other.m != self.m or other.all_names() != self.all_names():
            raise DomainError("Only profiles over the same alternatives can be concatenated")
        return Profile(self.m, self.votes + other.votes, self.names)

    def __iter__(self) -> Iterator[ApprovalVote]:
        return iter(self.votes)

    def __len__(self) -> int:
        return len(self.votes)


@dataclass(frozen=True, order=True)
class Committee(Jsonable):
    """A set of alternative indices stored in ascending order."""

    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(self.members))
        if len(set(members)) != len(members):
            raise DomainError(f"Committee holds repeated members: {list(self.members)}")
        if any(not isinstance(a, int) or a < 0 for a in members):
            raise DomainError(f"Committee holds invalid members: {list(self.members)}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, members: Iterable[int]) -> Committee:
        return cls(tuple(members))

    @property
    def k(self) -> int:
        return len(self.members)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def names(self, profile: Profile) -> list[str]:
        return [profile.name_of(a) for a in self.members]

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)
