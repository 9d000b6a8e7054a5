from pathlib import Path

import pytest

from abcs_workbench import PRF, read_file
from abcs_workbench.model import Committee, Profile
from abcs_workbench.reductions import reduce_is_to_target_abcs
from abcs_workbench.solvers import LabeledSample
from abcs_workbench.util import DomainError, ParseError, WorkbenchError


@pytest.fixture()
def prf_fp(test_workspace: Path) -> Path:
    return Path(test_workspace, "small.prf")


@pytest.fixture()
def prf(prf_fp: Path) -> PRF:
    return PRF(prf_fp)


def test_prf_reads_profile(prf: PRF):
    assert prf.k == 2
    assert prf.profile.m == 3
    assert prf.profile.names == ("a", "b", "c")
    assert prf.profile.votes[0].alternatives == frozenset({0, 1})
    assert prf.committee is None
    assert prf.winners == []


def test_prf_write_is_stable(prf: PRF):
    text = prf._write()
    assert PRF.from_text(text)._write() == text
    assert "alts a b c" in text


def test_prf_without_names_or_k():
    prf = PRF.from_text("m 4\n2 a0 a3\n1 a1\n")
    assert prf.k is None
    assert prf.profile.names is None
    assert prf.profile.n == 3
    assert prf._write() == "m 4\n2 a0 a3\n1 a1\n"


def test_prf_unknown_alternative_line(test_workspace):
    with pytest.raises(WorkbenchError) as err:
        PRF(test_workspace / "bad_vote.prf")
    assert isinstance(err.value.original_exception, ParseError)
    assert err.value.original_exception.line == 4


@pytest.mark.parametrize(
    ("text", "line", "reason"),
    [
        ("k 2\n1 a0\n", 1, "expected 'm <int> k <int>'"),
        ("m 3 k 3\n1 a0\n", 1, "1 <= k < m"),
        ("m 3 k 2\n1 a0 a1 a2\n", 2, "approves all"),
        ("m 3 k 2\n0 a0\n", 2, "multiplicity must be positive"),
        ("m 3 k 2\n1 a0 a0\n", 2, "repeated alternative"),
        ("m 3 k 2\n1 a0\nalts a b c\n", 3, "'alts' must come once"),
        ("m 3 k 2\nalts a b\n", 2, "expected 3 distinct"),
        ("m 3 k 2\n1 a0\nk 1\n", 3, "contradicts"),
        ("m 3 k 2\n1 a0\nx a0\n", 3, "Vote multiplicity must be an integer"),
    ],
)
def test_prf_errors(text, line, reason):
    with pytest.raises(ParseError) as err:
        PRF.from_text(text)
    assert err.value.line == line
    assert reason in err.value.reason


@pytest.mark.parametrize(
    ("text", "reason"),
    [
        ("# empty\n", "missing"),
        ("m 3 k 2\n", "no votes"),
        ("m 3 k 2\n1 a0\npart p 0 2\n", "lies outside the votes"),
        ("m 3 k 2\n1 a0\ncommittee a0\n", "k=2 members"),
    ],
)
def test_prf_whole_file_errors(text, reason):
    with pytest.raises(ParseError, match=reason):
        PRF.from_text(text)


def test_prf_sample(test_workspace):
    prf = PRF(test_workspace / "cc_small.smp")
    sample = prf.sample
    assert sample.k == 2
    assert sample.winners == (prf.profile.committee(["a", "c"]),)


def test_prf_sample_needs_winners(prf: PRF):
    with pytest.raises(DomainError, match="winners"):
        prf.sample


def test_prf_instance_round_trip(tmp_path, k3):
    instance = reduce_is_to_target_abcs(k3, 2)
    PRF.from_instance(instance).save(tmp_path / "k3.prf")
    loaded = PRF(tmp_path / "k3.prf").instance
    assert loaded.committee == instance.committee
    assert loaded.k == 2
    assert loaded.parts == instance.parts
    assert loaded.profile == instance.profile


def test_prf_from_sample(tmp_path):
    profile = Profile.from_named_sets(["a", "b", "c"], [["a"], ["b"]])
    sample = LabeledSample(profile, (Committee((0, 1)),))
    PRF.from_sample(sample).save(tmp_path / "s.smp")
    assert PRF(tmp_path / "s.smp").sample == sample


def test_prf_update(tmp_path, prf_fp):
    copy = tmp_path / "copy.prf"
    copy.write_text(prf_fp.read_text())
    prf = PRF(copy)
    prf.k = None
    prf.update()
    assert PRF(copy).k is None
    assert PRF(copy).profile == prf.profile


def test_prf_needs_path_to_update():
    with pytest.raises(UserWarning):
        PRF.from_text("m 3\n1 a0\n").update()


def test_prf_suffix_checks(test_workspace, tmp_path):
    with pytest.raises(WorkbenchError):
        PRF(test_workspace / "k3.col")
    with pytest.raises(WorkbenchError):
        PRF(tmp_path / "missing.prf")
    with pytest.raises(TypeError):
        PRF.from_text("m 3\n1 a0\n").save(tmp_path / "wrong.rul")


def test_txt_profiles_are_read(tmp_path, prf_fp):
    path = tmp_path / "p.txt"
    path.write_text(prf_fp.read_text())
    assert isinstance(read_file(path), PRF)


def test_prf_equality_and_diff(prf: PRF, prf_fp, capsys):
    other = PRF(prf_fp)
    assert prf == other
    other.k = None
    assert prf != other
    prf._diff(other)
    assert "1 difference(s) found" in capsys.readouterr().out
