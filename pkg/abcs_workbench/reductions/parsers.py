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

from ..model import Cnf2p2n, Graph
from ..model.helpers import parse_int
from ..util import DomainError, ParseError

# DIMACS comment marker
COMMENT = "c"


def _records(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == COMMENT or tokens[0].startswith("%"):
            continue
        yield line_no, tokens


def _header(records, kind: str) -> tuple[int, int, int]:
    try:
        line_no, tokens = next(records)
    except StopIteration:
        raise ParseError(f"missing 'p {kind}' header") from None
    if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != kind:  # noqa: PLR2004
        raise ParseError(f"expected 'p {kind} <count> <count>', got '{' '.join(tokens)}'", line_no)
    first = parse_int(tokens[2], "Header count", line_no)
    second = parse_int(tokens[3], "Header count", line_no)
    if first < 0 or second < 0:
        raise ParseError("header counts must be nonnegative", line_no)
    return line_no, first, second


def parse_graph(text: str) -> Graph:
    """Parses a DIMACS graph: ``p edge <r> <e>`` followed by ``e <u> <v>`` lines, 1-based.

    Raises:
        ParseError: On a malformed header or edge line, an out-of-range vertex, a self-loop, a
            repeated edge or an edge count that differs from the header.
    """
    records = _records(text)
    header_line, r, expected = _header(records, "edge")
    edges: set[tuple[int, int]] = set()
    for line_no, tokens in records:
        if tokens[0] != "e" or len(tokens) != 3:  # noqa: PLR2004
            raise ParseError(f"expected 'e <u> <v>', got '{' '.join(tokens)}'", line_no)
        u, v = (parse_int(token, "Vertex", line_no) for token in tokens[1:])
        if not (1 <= u <= r and 1 <= v <= r):
            raise ParseError(f"vertex out of range 1..{r} in edge {u} {v}", line_no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line_no)
        edge = (min(u, v) - 1, max(u, v) - 1)
        if edge in edges:
            raise ParseError(f"repeated edge {u} {v}", line_no)
        edges.add(edge)
    if len(edges) != expected:
        raise ParseError(f"header announces {expected} edges, found {len(edges)}", header_line)
    return Graph(r, frozenset(edges))


def _literal_name(literal: int) -> str:
    return f"x{literal}" if literal > 0 else f"-x{-literal}"


def parse_cnf(text: str) -> Cnf2p2n:
    """Parses a DIMACS CNF (``p cnf <r> <t>``, clauses terminated by 0) holding a 2P2N formula.

    A clause may span several lines. Every clause must have exactly three literals and every
    literal must occur exactly twice.

    Raises:
        ParseError: On a malformed header, a bad or out-of-range literal, a clause that is not a
            3-clause, a clause count that differs from the header or a 2P2N violation.
    """
    records = _records(text)
    header_line, r, expected = _header(records, "cnf")
    occurrences: Counter = Counter()
    clauses: list[tuple[int, int, int]] = []
    current: list[int] = []
    last_line = header_line
    for line_no, tokens in records:
        last_line = line_no
        for token in tokens:
            literal = parse_int(token, "Literal", line_no)
            if literal == 0:
                if len(current) != 3:  # noqa: PLR2004
                    raise ParseError(f"clause has {len(current)} literals, expected 3", line_no)
                clauses.append((current[0], current[1], current[2]))
                current = []
                continue
            if abs(literal) > r:
                raise ParseError(f"literal {literal} refers to a variable outside 1..{r}", line_no)
            occurrences[literal] += 1
            if occurrences[literal] > 2:  # noqa: PLR2004
                raise ParseError(
                    f"2P2N violation: {_literal_name(literal)} occurs more than twice",
                    line_no,
                )
            current.append(literal)
    if current:
        raise ParseError("last clause is not terminated by 0", last_line)
    if len(clauses) != expected:
        raise ParseError(f"header announces {expected} clauses, found {len(clauses)}", header_line)
    for variable in range(1, r + 1):
        for literal in (variable, -variable):
            if occurrences[literal] != 2:  # noqa: PLR2004
                raise ParseError(
                    f"2P2N violation: {_literal_name(literal)} occurs {occurrences[literal]} "
                    "times, expected 2",
                    last_line,
                )
    try:
        return Cnf2p2n(r, tuple(clauses))
    except DomainError as err:
        raise ParseError(str(err), header_line) from err


def emit_graph(graph: Graph) -> str:
    lines = [f"p edge {graph.r} {len(graph.edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def emit_cnf(formula: Cnf2p2n) -> str:
    lines = [f"p cnf {formula.r} {formula.t}"]
    lines.extend(" ".join(str(literal) for literal in clause) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"
