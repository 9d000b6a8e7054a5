import pytest

from abcs_workbench.dimacs import CNF, COL
from abcs_workbench.model import Cnf2p2n, Graph
from abcs_workbench.reductions import emit_cnf, emit_graph, parse_cnf, parse_graph
from abcs_workbench.util import ParseError, WorkbenchError


def test_triangle(k3):
    assert k3 == Graph(3, frozenset({(0, 1), (1, 2), (0, 2)}))


@pytest.mark.parametrize(
    ("text", "line", "reason"),
    [
        ("p edge 3 1\ne 1 4\n", 2, "out of range"),
        ("p edge 3 1\ne 2 2\n", 2, "self-loop"),
        ("p edge 3 2\ne 1 2\ne 2 1\n", 3, "repeated edge"),
        ("p edge 3 2\ne 1 2\n", 1, "announces 2 edges"),
        ("p graph 3 2\n", 1, "expected 'p edge"),
        ("c comment\np edge 3 1\nx 1 2\n", 3, "expected 'e <u> <v>'"),
        ("p edge 3 1\ne 1 b\n", 2, "Vertex must be an integer"),
    ],
)
def test_graph_errors(text, line, reason):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.line == line
    assert reason in err.value.reason


def test_graph_missing_header():
    with pytest.raises(ParseError, match="missing 'p edge' header"):
        parse_graph("c nothing here\n")


def test_graph_text_is_stable(k3):
    assert emit_graph(k3) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
    assert parse_graph(emit_graph(k3)) == k3


def test_satisfiable_formula(sat_formula):
    assert sat_formula.r == 3
    assert sat_formula.t == 4
    assert sat_formula.clauses[2] == (-1, -2, -3)


def test_clause_spanning_lines():
    formula = parse_cnf("p cnf 3 4\n1 2\n3 0 1 2 3 0\n-1 -2 -3 0 -1 -2 -3 0\n")
    assert formula.clauses[0] == (1, 2, 3)


def test_two_p_two_n_violation(test_workspace):
    with pytest.raises(ParseError) as err:
        parse_cnf((test_workspace / "three_positive.cnf").read_text())
    assert "2P2N violation" in err.value.reason
    assert err.value.line == 2


def test_missing_occurrence():
    with pytest.raises(ParseError, match="2P2N violation: x4 occurs 0 times"):
        parse_cnf("p cnf 4 4\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n-1 -2 -3 0\n")


@pytest.mark.parametrize(
    ("text", "reason"),
    [
        ("p cnf 3 4\n1 2 0\n", "clause has 2 literals"),
        ("p cnf 3 1\n1 2 4 0\n", "outside 1..3"),
        ("p cnf 3 4\n1 2 3\n", "not terminated"),
        ("p cnf 3 3\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n-1 -2 -3 0\n", "announces 3 clauses"),
    ],
)
def test_cnf_errors(text, reason):
    with pytest.raises(ParseError, match=reason):
        parse_cnf(text)


def test_cnf_text_is_stable(sat_formula):
    assert parse_cnf(emit_cnf(sat_formula)) == sat_formula


def test_formula_assignment(sat_formula):
    assert sat_formula.is_satisfied_by((True, True, False))
    assert not sat_formula.is_satisfied_by((True, True, True))


def test_formula_domain():
    from abcs_workbench.util import DomainError

    with pytest.raises(DomainError, match="expected exactly 2"):
        Cnf2p2n(1, ((1, 1, -1),))


def test_col_and_cnf_files(test_workspace, tmp_path, k3, sat_formula):
    COL.from_graph(k3).save(tmp_path / "copy.col")
    assert COL(tmp_path / "copy.col") == COL(test_workspace / "k3.col")
    CNF.from_formula(sat_formula).save(tmp_path / "copy.cnf")
    assert CNF(tmp_path / "copy.cnf").formula == sat_formula


def test_cnf_file_wraps_parse_error(test_workspace):
    with pytest.raises(WorkbenchError) as err:
        CNF(test_workspace / "three_positive.cnf")
    assert isinstance(err.value.original_exception, ParseError)
    with pytest.raises(WorkbenchError) as err:
        COL(test_workspace / "sat_r3.cnf")
    assert isinstance(err.value.original_exception, TypeError)
