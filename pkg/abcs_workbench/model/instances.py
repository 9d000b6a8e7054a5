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

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import networkx as nx

from ..to_from_json import Jsonable
from ..util import DomainError
from .profile import Committee, Profile

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph(Jsonable):
    """Simple undirected graph on the vertices 0..r-1."""

    r: int
    edges: frozenset[Edge]

    def __post_init__(self):
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"Self-loop at vertex {u}")
            if not (0 <= u < self.r and 0 <= v < self.r):
                raise DomainError(f"Edge {(u, v)} refers to a vertex outside 0..{self.r - 1}")
            edges.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, r: int, edges: Iterable[Edge]) -> Graph:
        return cls(r, frozenset(tuple(edge) for edge in edges))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Converts a networkx graph, numbering its nodes in sorted order."""
        order = {node: idx for idx, node in enumerate(sorted(graph.nodes))}
        return cls(len(order), frozenset((order[u], order[v]) for u, v in graph.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.r))
        graph.add_edges_from(sorted(self.edges))
        return graph

    def degree(self, vertex: int) -> int:
        return sum(1 for edge in self.edges if vertex in edge)

    def degrees(self) -> list[int]:
        counts = Counter(v for edge in self.edges for v in edge)
        return [counts[v] for v in range(self.r)]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        chosen = set(vertices)
        return not any(u in chosen and v in chosen for u, v in self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Cnf2p2n(Jsonable):
    """3-CNF formula where every variable occurs exactly twice positively and twice negatively.

    Literals use DIMACS numbering: ``i`` for variable i and ``-i`` for its negation, 1 <= i <= r.
    A clause may repeat a literal, occurrences are counted with repetition.
    """

    r: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        clauses = tuple(tuple(clause) for clause in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.r < 1:
            raise DomainError("A formula needs at least one variable")
        occurrences: Counter = Counter()
        for position, clause in enumerate(clauses):
            if len(clause) != 3:  # noqa: PLR2004
                raise DomainError(f"Clause {position + 1} has {len(clause)} literals, expected 3")
            for literal in clause:
                if literal == 0 or abs(literal) > self.r:
                    raise DomainError(f"Clause {position + 1} holds invalid literal {literal}")
                occurrences[literal] += 1
        for variable in range(1, self.r + 1):
            for literal in (variable, -variable):
                if occurrences[literal] != 2:  # noqa: PLR2004
                    raise DomainError(
                        f"Literal {literal} occurs {occurrences[literal]} times, expected exactly 2",
                    )

    @property
    def t(self) -> int:
        return len(self.clauses)

    def is_satisfied_by(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.r:
            raise DomainError(f"Assignment has {len(assignment)} values for {self.r} variables")
        return all(
            any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause) for clause in self.clauses
        )


@dataclass(frozen=True)
class ReductionInstance(Jsonable):
    """Output of a reduction: the profile, the designated committee and k.

    ``parts`` maps a part label to the half-open range of vote positions it occupies. The
    instance unpacks as ``profile, committee, k = instance``.
    """

    profile: Profile
    committee: Committee
    k: int
    parts: dict[str, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self,
            "parts",
            {label: tuple(span) for label, span in self.parts.items()},
        )

    def part(self, *labels: str) -> Profile:
        positions = [p for label in labels for p in range(*self.parts[label])]
        return self.profile.restrict(positions)

    def __iter__(self) -> Iterator:
        return iter((self.profile, self.committee, self.k))
