from fractions import Fraction

import pytest

from abcs_workbench import RUL, resolve_rule
from abcs_workbench.model import BivariateScoring, UnivariateScoring
from abcs_workbench.util import DomainError, ParseError, WorkbenchError


def test_bivariate_rule_file(test_workspace):
    rul = RUL(test_workspace / "pav_4_2.rul")
    assert rul.rule == BivariateScoring.pav(4, 2)
    assert rul.rule(2, 2) == Fraction(3, 2)


def test_univariate_rule_file(test_workspace):
    assert RUL(test_workspace / "seq_flat.rul").rule == UnivariateScoring(2, (0, 1, 1))


def test_rule_text_lists_every_increment_pair():
    text = RUL.from_rule(BivariateScoring.cc(4, 2))._write()
    lines = text.splitlines()
    assert lines[0] == "m 4 k 2"
    assert lines[1:] == ["bxy 1 1 1/1", "bxy 1 2 1/1", "bxy 2 2 1/1", "bxy 2 3 0/1"]
    assert RUL.from_text(text).rule == BivariateScoring.cc(4, 2)


def test_univariate_text():
    text = RUL.from_rule(UnivariateScoring.pav(3))._write()
    assert text == "k 3\nu 1 1/1\nu 2 3/2\nu 3 11/6\n"


@pytest.mark.parametrize(
    ("text", "line", "reason"),
    [
        ("m 4 k 2\nbxy 3 3 1\n", 2, "outside the pair domain"),
        ("m 4 k 2\nbxy 1 1 1\nbxy 1 1 2\n", 3, "repeated entry"),
        ("m 4 k 2\nbxy 1 1 x\n", 2, "not a rational"),
        ("m 4 k 2\nu 1 1\n", 2, "expected 'bxy"),
        ("m 4 k 4\n", 1, "1 < k < m"),
        ("k 2\nu 3 1\n", 2, "invalid or repeated"),
        ("rule cc\n", 1, "expected 'm <int> k <int>' or 'k <int>'"),
    ],
)
def test_rule_errors(text, line, reason):
    with pytest.raises(ParseError) as err:
        RUL.from_text(text)
    assert err.value.line == line
    assert reason in err.value.reason


@pytest.mark.parametrize(
    ("text", "reason"),
    [
        ("m 4 k 2\nbxy 0 1 1\n", "not normalized"),
        ("m 4 k 2\nbxy 1 2 2\nbxy 2 2 1\n", "decreases"),
        ("k 2\nu 1 2\nu 2 1\n", "decreases"),
        ("", "missing"),
    ],
)
def test_rule_value_errors(text, reason):
    with pytest.raises(ParseError, match=reason):
        RUL.from_text(text)


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("cc", BivariateScoring.cc(5, 3)),
        ("AV", BivariateScoring.av(5, 3)),
        ("pav", BivariateScoring.pav(5, 3)),
        ("trivial", BivariateScoring.trivial(5, 3)),
        ("seq-cc", UnivariateScoring.cc(3)),
        ("seq-pav", UnivariateScoring.pav(3)),
    ],
)
def test_named_rules(name, expected):
    assert resolve_rule(name, 5, 3) == expected


def test_rule_file_must_fit(test_workspace):
    assert resolve_rule(test_workspace / "pav_4_2.rul", 4, 2) == BivariateScoring.pav(4, 2)
    with pytest.raises(DomainError, match="does not fit"):
        resolve_rule(test_workspace / "pav_4_2.rul", 5, 2)
    assert resolve_rule(test_workspace / "seq_flat.rul", 7, 2) == UnivariateScoring(2, (0, 1, 1))


def test_unknown_rule_name():
    with pytest.raises(WorkbenchError):
        resolve_rule("borda", 4, 2)


def test_save_and_reload(tmp_path):
    RUL.from_rule(UnivariateScoring.av(4)).save(tmp_path / "rules" / "av.rul")
    assert RUL(tmp_path / "rules" / "av.rul").rule == UnivariateScoring.av(4)
