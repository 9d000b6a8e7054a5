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
from itertools import combinations

import networkx as nx
import pandas as pd

from ..model import BivariateScoring, Committee, Graph, ReductionInstance, pair_domain
from ..rules import abcs_score, committee_scores
from ..util import DomainError, check_cap
from .helpers import CheckReport, ProfileBuilder

logger = logging.getLogger(__name__)

# networkx's graph atlas covers every graph on up to 7 nodes
ATLAS_MAX_NODES = 7


def pad_graph(graph: Graph) -> Graph:
    """Adds pendant vertices until every original vertex has the maximum degree.

    Vertex v receives Δ - deg(v) new neighbours of degree 1. Original vertices keep their
    numbers, new ones are numbered from r upwards in order of the vertex they hang off.

    Raises:
        DomainError: If the maximum degree is below 2.
    """
    delta = graph.max_degree
    if delta < 2:  # noqa: PLR2004
        raise DomainError(f"Graphs of maximum degree {delta} < 2 are not supported")
    edges = set(graph.edges)
    following = graph.r
    for vertex, degree in enumerate(graph.degrees()):
        for _ in range(delta - degree):
            edges.add((vertex, following))
            following += 1
    return Graph(following, frozenset(edges))


def _padded(graph: Graph, k: int) -> tuple[Graph, int]:
    if k < 2:  # noqa: PLR2004
        raise DomainError(f"Committee size must be at least 2, got K={k}")
    padded = pad_graph(graph)
    if k > padded.r:
        raise DomainError(f"K={k} exceeds the {padded.r} vertices of the padded graph")
    return padded, graph.max_degree


def _edge_votes(builder: ProfileBuilder, padded: Graph, b: list[str]) -> None:
    builder.part("part1")
    for u, v in padded.sorted_edges():
        builder.vote(b[u], b[v])


def reduce_is_to_target_abcs(graph: Graph, k: int) -> ReductionInstance:
    """Builds the TargetABCS instance that has no solution iff the graph has an independent
    set of size k.

    Alternatives are a1..ar, b1..br (one pair per vertex of the padded graph), c and d. Part 1
    holds one vote per edge, part 2 holds kΔ-1 copies of each of {ai,bj}, {ai,c}, {bi,d},
    {a1,d} and {c,d}, part 3 holds one vote per pair of the rule's domain that is neither a
    row floor nor (1,2) or (2,2). The target committee is {a1..ak}.
    """
    padded, delta = _padded(graph, k)
    r = padded.r
    a = [f"a{i}" for i in range(1, r + 1)]
    b = [f"b{i}" for i in range(1, r + 1)]
    builder = ProfileBuilder([*a, *b, "c", "d"])
    copies = k * delta - 1

    _edge_votes(builder, padded, b)

    builder.part("part2")
    for a_i in a:
        for b_j in b:
            builder.vote(a_i, b_j, multiplicity=copies)
    for a_i in a:
        builder.vote(a_i, "c", multiplicity=copies)
    for b_i in b:
        builder.vote(b_i, "d", multiplicity=copies)
    builder.vote(a[0], "d", multiplicity=copies)
    builder.vote("c", "d", multiplicity=copies)

    # c closes the pool for rows where y - x reaches m - k - 1; it lies outside A and the rival
    builder.part("part3")
    pool = [*a[k:], *b, "c"]
    for x, y in pair_domain(len(builder.names), k).increment_pairs():
        if (x, y) in ((1, 2), (2, 2)):
            continue
        builder.vote("d", *a[: x - 1], *pool[: y - x])

    instance = builder.build(a[:k], k)
    logger.debug(
        "Independent set instance: m=%d, %d distinct votes",
        instance.profile.m,
        len(instance.profile),
    )
    return instance


def reduce_is_to_cc_verification(graph: Graph, k: int) -> ReductionInstance:
    """Builds a CC winner verification instance: {a1..ak} wins iff the graph has no
    independent set of size k.

    Alternatives are a1..ar, b1..br and c. Part 1 is the edge part, part 2 holds kΔ-1 copies
    of each {ai,bj} and of {a1,c}.
    """
    padded, delta = _padded(graph, k)
    r = padded.r
    a = [f"a{i}" for i in range(1, r + 1)]
    b = [f"b{i}" for i in range(1, r + 1)]
    builder = ProfileBuilder([*a, *b, "c"])
    copies = k * delta - 1

    _edge_votes(builder, padded, b)

    builder.part("part2")
    for a_i in a:
        for b_j in b:
            builder.vote(a_i, b_j, multiplicity=copies)
    builder.vote(a[0], "c", multiplicity=copies)

    return builder.build(a[:k], k)


def brute_independent_set(graph: Graph, k: int) -> bool:
    """Exhaustive check for an independent set of size k.

    Raises:
        CapacityError: If the graph has more vertices than ``ABCS_WORKBENCH_ORACLE_CAP``.
    """
    check_cap("ABCS_WORKBENCH_ORACLE_CAP", graph.r, "Independent set oracle")
    if k <= 0:
        return True
    return any(graph.is_independent(chosen) for chosen in combinations(range(graph.r), k))


def forced_rule(m: int, k: int) -> BivariateScoring:
    """The rule with f(1,2) = f(2,2) = 1 and every other value 0."""
    return BivariateScoring.from_increments(m, k, {(1, 2): 1})


def small_graphs(max_vertices: int) -> list[Graph]:
    """All graphs on 1..max_vertices vertices with maximum degree at least 2, one per
    isomorphism class."""
    if max_vertices > ATLAS_MAX_NODES:
        raise DomainError(f"The graph atlas only covers up to {ATLAS_MAX_NODES} vertices")
    graphs = []
    for graph in nx.graph_atlas_g():
        nodes = graph.number_of_nodes()
        if 1 <= nodes <= max_vertices and max((d for _, d in graph.degree), default=0) >= 2:  # noqa: PLR2004
            graphs.append(Graph.from_networkx(graph))
    return graphs


def _b_count(committee: Committee, r: int) -> int:
    return sum(1 for member in committee.members if r <= member < 2 * r)


def _all_b_scores(f: BivariateScoring, instance: ReductionInstance, label: str, r: int) -> list:
    return [
        score
        for committee, score in committee_scores(f, instance.part(label))
        if _b_count(committee, r) == instance.k
    ]


def _edge_part_rows(report: CheckReport, f, instance, graph, r: int, delta: int) -> None:
    k = instance.k
    best = max(_all_b_scores(f, instance, "part1", r))
    if brute_independent_set(graph, k):
        report.add("best part 1 score with t=k", k * delta, best)
    else:
        report.add("best part 1 score with t=k", f"<= {k * delta - 1}", best, best <= k * delta - 1)


def is_reduction_report(instance: ReductionInstance, graph: Graph) -> pd.DataFrame:
    """Checks the score identities and bounds of a :func:`reduce_is_to_target_abcs` instance.

    Committees are split by t, the number of b alternatives they hold. The scores of A, of the
    rival {a1..a(k-1), d} on parts 2 and 3, the best score with t < k and the part scores of
    committees with t = k are compared with their closed forms under the forced rule.
    """
    padded, delta = _padded(graph, instance.k)
    r, k, profile = padded.r, instance.k, instance.profile
    copies = k * delta - 1
    f = forced_rule(profile.m, k)
    committee_a = instance.committee
    rival = Committee((*range(k - 1), 2 * r + 1))
    report = CheckReport()

    bound = copies * (k * r + k + 1)
    report.add("score of A", bound, abcs_score(f, committee_a, profile))

    part_2, part_3 = instance.part("part2"), instance.part("part3")
    sizes = pair_domain(profile.m, k).sizes()
    for name, rule in (
        ("forced", f),
        ("cc", BivariateScoring.cc(profile.m, k)),
        ("av", BivariateScoring.av(profile.m, k)),
    ):
        report.add(
            f"part 3 gap A - rival ({name})",
            -sum(rule(min(k, y), y) for y in sizes if y != 2),  # noqa: PLR2004
            abcs_score(rule, committee_a, part_3) - abcs_score(rule, rival, part_3),
        )
        report.add(
            f"part 2 gap A - rival ({name})",
            copies * (rule(1, 2) - rule(2, 2)),
            abcs_score(rule, committee_a, part_2) - abcs_score(rule, rival, part_2),
        )

    best_low = max(
        score for committee, score in committee_scores(f, profile) if _b_count(committee, r) < k
    )
    report.add("best score with t<k", f"<= {bound}", best_low, best_low <= bound)

    part_2_scores = set(_all_b_scores(f, instance, "part2", r))
    expected = copies * (k * r + k)
    report.add("part 2 score with t=k", expected, min(part_2_scores), part_2_scores == {expected})

    _edge_part_rows(report, f, instance, graph, r, delta)
    return report.frame()


def check_is_reduction(instance: ReductionInstance, graph: Graph) -> bool:
    return bool(is_reduction_report(instance, graph)["holds"].all())


def cc_reduction_report(instance: ReductionInstance, graph: Graph) -> pd.DataFrame:
    """Checks the CC scores of a :func:`reduce_is_to_cc_verification` instance."""
    padded, delta = _padded(graph, instance.k)
    r, k, profile = padded.r, instance.k, instance.profile
    copies = k * delta - 1
    f = BivariateScoring.cc(profile.m, k)
    report = CheckReport()

    bound = copies * (k * r + 1)
    report.add("score of A", bound, abcs_score(f, instance.committee, profile))

    best_low = max(
        score for committee, score in committee_scores(f, profile) if _b_count(committee, r) < k
    )
    report.add("best score with t<k", f"<= {bound}", best_low, best_low <= bound)

    part_2_scores = set(_all_b_scores(f, instance, "part2", r))
    report.add(
        "part 2 score with t=k",
        copies * k * r,
        min(part_2_scores),
        part_2_scores == {copies * k * r},
    )

    _edge_part_rows(report, f, instance, graph, r, delta)
    return report.frame()


def check_cc_reduction(instance: ReductionInstance, graph: Graph) -> bool:
    return bool(cc_reduction_report(instance, graph)["holds"].all())
