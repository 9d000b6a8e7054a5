import random

import pytest

from abcs_workbench.model import Profile
from abcs_workbench.reductions import reduce_is_to_target_abcs
from abcs_workbench.rules import verify_abcs_winner, verify_seq_winner
from abcs_workbench.solvers import find_seq_witness, target_abcs, target_seq_thiele
from abcs_workbench.util import CapacityError, DomainError, WitnessError

from .oracles import grid_abcs_rules, grid_thiele_functions


@pytest.fixture()
def two_singletons():
    return Profile.from_named_sets(["a", "b", "c"], [["a"], ["b"]])


@pytest.fixture()
def single_vote():
    return Profile.from_named_sets(["a", "b", "c"], [["a"]])


@pytest.fixture()
def pair_profile():
    return Profile.from_named_sets(["a", "b", "c"], [["a", "b"], ["a"]])


def _random_profile(rng: random.Random, m: int) -> Profile:
    votes = [rng.sample(range(m), rng.randint(1, m - 1)) for _ in range(rng.randint(1, 5))]
    return Profile.from_sets(m, votes)


def test_target_abcs_covering_committee(two_singletons):
    committee = two_singletons.committee(["a", "b"])
    f = target_abcs(two_singletons, committee, 2)
    assert f is not None
    assert not f.is_trivial
    assert verify_abcs_winner(f, two_singletons, committee)


def test_target_abcs_all_tie_witness(single_vote):
    committee = single_vote.committee(["b", "c"])
    f = target_abcs(single_vote, committee, 2)
    assert f is not None
    assert f(1, 1) == 0
    assert verify_abcs_winner(f, single_vote, committee)


def test_target_abcs_none_on_path_reduction(path3):
    profile, committee, k = reduce_is_to_target_abcs(path3, 2)
    assert target_abcs(profile, committee, k) is None


def test_target_abcs_some_on_triangle_reduction(k3):
    profile, committee, k = reduce_is_to_target_abcs(k3, 2)
    f = target_abcs(profile, committee, k)
    assert f is not None
    assert verify_abcs_winner(f, profile, committee)


def test_target_abcs_rejects_wrong_size(two_singletons):
    with pytest.raises(DomainError, match="expected 2"):
        target_abcs(two_singletons, two_singletons.committee(["a"]), 2)


def test_target_abcs_agrees_with_grid():
    rng = random.Random(3)
    for _ in range(100):
        m = rng.randint(3, 5)
        profile = _random_profile(rng, m)
        committee = profile.committee(rng.sample(range(m), 2))
        found = target_abcs(profile, committee, 2)
        if found is not None:
            assert verify_abcs_winner(found, profile, committee)
        grid = any(verify_abcs_winner(f, profile, committee) for f in grid_abcs_rules(m, 2, 2))
        if grid:
            assert found is not None


def test_target_seq_single_vote(single_vote):
    committee = single_vote.committee(["b", "c"])
    s = target_seq_thiele(single_vote, committee, 2)
    assert s is not None
    assert verify_seq_winner(s, single_vote, committee)


def test_target_seq_needs_rising_second_step(pair_profile):
    committee = pair_profile.committee(["b", "c"])
    result = find_seq_witness(pair_profile, committee, 2)
    assert result is not None
    assert result.rule(1) == 0
    assert result.order == (2, 1)
    assert verify_seq_winner(result.rule, pair_profile, committee)


def test_target_seq_none_with_flat_steps_ruled_out(pair_profile):
    committee = pair_profile.committee(["b", "c"])
    assert find_seq_witness(pair_profile, committee, 2, rising_steps=[1]) is None


def test_target_seq_two_level_profile(test_workspace):
    from abcs_workbench.prf import PRF

    prf = PRF(test_workspace / "p2.prf")
    s = target_seq_thiele(prf.profile, prf.committee, 2)
    assert s is not None
    assert verify_seq_winner(s, prf.profile, prf.committee)


def test_target_seq_agrees_with_grid():
    rng = random.Random(11)
    for _ in range(100):
        m = rng.randint(3, 6)
        k = rng.randint(2, min(3, m - 1))
        profile = _random_profile(rng, m)
        committee = profile.committee(rng.sample(range(m), k))
        found = target_seq_thiele(profile, committee, k)
        if found is not None:
            assert not found.is_trivial
            assert verify_seq_winner(found, profile, committee)
        grid = any(verify_seq_winner(s, profile, committee) for s in grid_thiele_functions(k, 3))
        if grid:
            assert found is not None


def test_target_seq_search_cap(pair_profile, monkeypatch):
    monkeypatch.setenv("ABCS_WORKBENCH_SEARCH_CAP", "1")
    with pytest.raises(CapacityError, match="Search exceeded"):
        target_seq_thiele(pair_profile, pair_profile.committee(["b", "c"]), 2)


def test_target_abcs_rejects_unchecked_witness(two_singletons, mocker):
    mocker.patch("abcs_workbench.solvers.target.verify_abcs_winner", return_value=False)
    with pytest.raises(WitnessError, match="does not elect"):
        target_abcs(two_singletons, two_singletons.committee(["a", "b"]), 2)


def test_target_seq_rejects_unchecked_witness(single_vote, mocker):
    mocker.patch("abcs_workbench.solvers.target.verify_seq_winner", return_value=False)
    with pytest.raises(WitnessError, match="does not elect"):
        target_seq_thiele(single_vote, single_vote.committee(["b", "c"]), 2)
