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
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

import pandas as pd

from ..to_from_json import Jsonable
from ..util import DomainError

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairDomain(Jsonable):
    """All (x, y) pairs such that a committee of size k can meet a vote of size y in x places."""

    m: int
    k: int
    pairs: tuple[Pair, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.k, int) or not 1 < self.k < self.m:
            raise DomainError(f"Committee size must satisfy 1 < k < m, got m={self.m}, k={self.k}")
        pairs = tuple(
            (x, y) for y in range(1, self.m) for x in range(self.floor(y), self.ceil(y) + 1)
        )
        object.__setattr__(self, "pairs", pairs)

    def floor(self, y: int) -> int:
        """Smallest possible intersection of a k-committee with a vote of size y."""
        return max(0, y - self.m + self.k)

    def ceil(self, y: int) -> int:
        return min(self.k, y)

    def sizes(self) -> range:
        return range(1, self.m)

    def increment_pairs(self) -> tuple[Pair, ...]:
        """Pairs above the floor of their row, i.e. the free coordinates of a normalized rule."""
        return tuple((x, y) for x, y in self.pairs if x > self.floor(y))

    def __contains__(self, pair: object) -> bool:
        if not isinstance(pair, tuple) or len(pair) != 2:  # noqa: PLR2004
            return False
        x, y = pair
        return 1 <= y < self.m and self.floor(y) <= x <= self.ceil(y)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def pair_domain(m: int, k: int) -> PairDomain:
    """Builds the pair domain for m alternatives and committees of size k, ordered by y then x.

    Raises:
        DomainError: If k <= 1 or k >= m.
    """
    return PairDomain(m, k)


@dataclass(frozen=True)
class UnivariateScoring(Jsonable):
    """Thiele scoring function s over {0..k}, used both for Thiele and sequential Thiele rules."""

    k: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"Committee size must be a positive integer, got {self.k}")
        if len(values) != self.k + 1:
            raise DomainError(f"Expected {self.k + 1} values for k={self.k}, got {len(values)}")
        if values[0] != 0:
            raise DomainError(f"A Thiele scoring function must map 0 to 0, got {values[0]}")
        for x in range(1, self.k + 1):
            if values[x] < values[x - 1]:
                raise DomainError(f"Scoring function decreases between {x - 1} and {x}")

    @classmethod
    def from_increments(cls, increments: Sequence[Fraction | int]) -> UnivariateScoring:
        values = [Fraction(0)]
        for step in increments:
            values.append(values[-1] + Fraction(step))
        return cls(len(increments), tuple(values))

    @classmethod
    def cc(cls, k: int) -> UnivariateScoring:
        return cls(k, (Fraction(0),) + (Fraction(1),) * k)

    @classmethod
    def av(cls, k: int) -> UnivariateScoring:
        return cls(k, tuple(Fraction(x) for x in range(k + 1)))

    @classmethod
    def pav(cls, k: int) -> UnivariateScoring:
        return cls.from_increments([Fraction(1, j) for j in range(1, k + 1)])

    @classmethod
    def trivial(cls, k: int) -> UnivariateScoring:
        return cls(k, (Fraction(0),) * (k + 1))

    def __call__(self, x: int) -> Fraction:
        if not 0 <= x <= self.k:
            raise DomainError(f"{x} lies outside 0..{self.k}")
        return self.values[x]

    def increments(self) -> tuple[Fraction, ...]:
        """Marginal gains s(j) - s(j-1) for j = 1..k."""
        return tuple(self.values[j] - self.values[j - 1] for j in range(1, self.k + 1))

    @property
    def is_trivial(self) -> bool:
        return self.values[self.k] == 0


@dataclass(frozen=True)
class BivariateScoring(Jsonable):
    """Normalized ABCS scoring function f over a pair domain.

    Values missing from ``values`` are taken as 0. The stored mapping always covers the full domain.

    Raises:
        DomainError: If a key lies outside the domain, a value is negative, f decreases in x, or
            f is not 0 at the floor of some row.
    """

    domain: PairDomain
    values: dict[Pair, Fraction]

    def __post_init__(self):
        for pair in self.values:
            if pair not in self.domain:
                raise DomainError(f"{pair} lies outside the pair domain for m={self.m}, k={self.k}")
        values = {pair: Fraction(self.values.get(pair, 0)) for pair in self.domain}
        object.__setattr__(self, "values", values)
        for (x, y), value in values.items():
            if value < 0:
                raise DomainError(f"f{(x, y)} = {value} is negative")
            if x == self.domain.floor(y):
                if value != 0:
                    raise DomainError(f"f is not normalized: f{(x, y)} = {value}")
            elif value < values[(x - 1, y)]:
                raise DomainError(f"f decreases in x at {(x, y)}")

    @property
    def m(self) -> int:
        return self.domain.m

    @property
    def k(self) -> int:
        return self.domain.k

    def __call__(self, x: int, y: int) -> Fraction:
        try:
            return self.values[(x, y)]
        except KeyError as err:
            raise DomainError(f"{(x, y)} lies outside the pair domain") from err

    @property
    def is_trivial(self) -> bool:
        return all(value == 0 for value in self.values.values())

    def increments(self) -> dict[Pair, Fraction]:
        """f(x, y) - f(x-1, y) for every pair above the floor of its row."""
        return {
            (x, y): self.values[(x, y)] - self.values[(x - 1, y)]
            for x, y in self.domain.increment_pairs()
        }

    @classmethod
    def from_increments(
        cls,
        m: int,
        k: int,
        increments: Mapping[Pair, Fraction | int],
    ) -> BivariateScoring:
        domain = pair_domain(m, k)
        values: dict[Pair, Fraction] = {}
        for x, y in domain:
            if x == domain.floor(y):
                values[(x, y)] = Fraction(0)
            else:
                step = Fraction(increments.get((x, y), 0))
                if step < 0:
                    raise DomainError(f"Increment at {(x, y)} is negative")
                values[(x, y)] = values[(x - 1, y)] + step
        return cls(domain, values)

    @classmethod
    def from_values(
        cls,
        m: int,
        k: int,
        values: Mapping[Pair, Fraction | int],
        normalize: bool = False,
    ) -> BivariateScoring:
        """Builds a rule from raw values.

        With ``normalize=True`` the value at the floor of each row is subtracted from the whole
        row, which leaves the winning committees of every profile unchanged.
        """
        domain = pair_domain(m, k)
        if not normalize:
            return cls(domain, dict(values))
        offsets = {y: Fraction(values.get((domain.floor(y), y), 0)) for y in domain.sizes()}
        return cls(
            domain,
            {(x, y): Fraction(values.get((x, y), 0)) - offsets[y] for x, y in domain},
        )

    @classmethod
    def from_function(
        cls,
        m: int,
        k: int,
        function: Callable[[int, int], Fraction | int],
    ) -> BivariateScoring:
        domain = pair_domain(m, k)
        return cls.from_values(m, k, {pair: function(*pair) for pair in domain}, normalize=True)

    @classmethod
    def from_univariate(cls, s: UnivariateScoring, m: int) -> BivariateScoring:
        """Lifts a Thiele function to f(x, y) = s(x), normalized row by row."""
        return cls.from_function(m, s.k, lambda x, y: s(x))

    @classmethod
    def cc(cls, m: int, k: int) -> BivariateScoring:
        return cls.from_univariate(UnivariateScoring.cc(k), m)

    @classmethod
    def av(cls, m: int, k: int) -> BivariateScoring:
        return cls.from_univariate(UnivariateScoring.av(k), m)

    @classmethod
    def pav(cls, m: int, k: int) -> BivariateScoring:
        return cls.from_univariate(UnivariateScoring.pav(k), m)

    @classmethod
    def trivial(cls, m: int, k: int) -> BivariateScoring:
        return cls(pair_domain(m, k), {})

    def table(self) -> pd.DataFrame:
        """Values as a frame indexed by vote size y with one column per intersection size x."""
        frame = pd.DataFrame(
            [{"y": y, "x": x, "value": value} for (x, y), value in self.values.items()],
        )
        return frame.pivot(index="y", columns="x", values="value")
