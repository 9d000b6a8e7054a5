import pytest

from abcs_workbench.model import BivariateScoring, Profile, UnivariateScoring
from abcs_workbench.rules import abcs_winners, seq_winners
from abcs_workbench.solvers import (
    LabeledSample,
    erm_abcs,
    erm_seq,
    label_samples,
    training_consistent,
    winners_under,
)
from abcs_workbench.util import CapacityError, DomainError, WitnessError

NAMES = ["a", "b", "c"]


@pytest.fixture()
def abc_profile():
    return Profile.from_named_sets(NAMES, [["a"], ["a", "b"], ["c"]])


@pytest.fixture()
def seq_profiles():
    return [
        Profile.from_named_sets(["a", "b", "c", "d"], votes)
        for votes in (
            [["a", "b"], ["a"], ["c"]],
            [["a"], ["b"], ["b", "c"], ["d"]],
            [["a", "b", "c"], ["c", "d"], ["d"]],
            [["b"], ["b"], ["a", "d"], ["c", "d"]],
        )
    ]


def test_labeled_sample_validation(abc_profile):
    with pytest.raises(DomainError, match="at least one"):
        LabeledSample(abc_profile, ())
    with pytest.raises(DomainError, match="same size"):
        LabeledSample(
            abc_profile,
            (abc_profile.committee(["a"]), abc_profile.committee(["a", "b"])),
        )


def test_winners_under_dispatches_on_rule_kind(abc_profile):
    f = BivariateScoring.cc(3, 2)
    assert winners_under(f, abc_profile) == abcs_winners(f, abc_profile)
    g = UnivariateScoring.cc(2)
    assert winners_under(g, abc_profile) == seq_winners(g, abc_profile)


def test_erm_abcs_reproduces_cc_labels(abc_profile):
    samples = label_samples(BivariateScoring.cc(3, 2), [abc_profile])
    assert samples[0].winners == (abc_profile.committee(["a", "c"]),)
    f = erm_abcs(samples)
    assert f is not None
    assert training_consistent(f, samples)


def test_erm_abcs_all_tie_labels():
    profile = Profile.from_named_sets(NAMES, [["a"]])
    samples = label_samples(BivariateScoring.trivial(3, 2), [profile])
    assert len(samples[0].winners) == 3
    f = erm_abcs(samples)
    assert f is not None
    assert not f.is_trivial
    assert f(1, 1) == 0


def test_erm_abcs_contradictory_labels():
    profile = Profile.from_named_sets(NAMES, [["a"], ["b"]])
    samples = [
        LabeledSample(profile, (profile.committee(["a", "b"]),)),
        LabeledSample(profile, (profile.committee(["a", "c"]),)),
    ]
    assert erm_abcs(samples) is None


def test_erm_abcs_without_samples():
    f = erm_abcs([], m=4, k=2)
    assert f is not None
    assert not f.is_trivial
    with pytest.raises(DomainError, match="required"):
        erm_abcs([])


def test_erm_abcs_mixed_shapes(abc_profile):
    other = Profile.from_sets(4, [{0}])
    samples = label_samples(BivariateScoring.cc(3, 2), [abc_profile]) + label_samples(
        BivariateScoring.cc(4, 2),
        [other],
    )
    with pytest.raises(DomainError, match="disagree"):
        erm_abcs(samples)


def test_erm_abcs_cap(abc_profile, low_caps):
    with pytest.raises(CapacityError):
        erm_abcs(label_samples(BivariateScoring.cc(3, 2), [abc_profile]))


@pytest.mark.parametrize("target", [UnivariateScoring.cc(2), UnivariateScoring(2, (0, 1, 3))])
def test_erm_seq_reproduces_labels(seq_profiles, target):
    samples = label_samples(target, seq_profiles)
    s = erm_seq(samples)
    assert s is not None
    assert training_consistent(s, samples)


def test_erm_seq_skips_trivial_function():
    profile = Profile.from_named_sets(NAMES, [["a"]])
    samples = label_samples(UnivariateScoring.trivial(2), [profile])
    s = erm_seq(samples)
    if s is not None:
        assert not s.is_trivial


def test_erm_seq_unlearnable_sample():
    # b and c are interchangeable, so no rule elects {a, b} without {a, c}
    profile = Profile.from_named_sets(NAMES, [["a"]])
    samples = [LabeledSample(profile, (profile.committee(["a", "b"]),))]
    assert erm_seq(samples) is None


def test_erm_seq_bounds():
    with pytest.raises(DomainError, match="at least 1"):
        erm_seq([], bound=0, k=2)
    with pytest.raises(DomainError, match="required"):
        erm_seq([])
    assert erm_seq([], bound=1, k=2) == UnivariateScoring(2, (0, 0, 1))


def test_erm_abcs_rejects_inconsistent_witness(abc_profile, mocker):
    samples = label_samples(BivariateScoring.cc(3, 2), [abc_profile])
    mocker.patch("abcs_workbench.solvers.erm.training_consistent", return_value=False)
    with pytest.raises(WitnessError, match="sample labels"):
        erm_abcs(samples)
