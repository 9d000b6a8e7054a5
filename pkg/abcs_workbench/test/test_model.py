from fractions import Fraction
from itertools import combinations

import pytest

from abcs_workbench.model import (
    ApprovalVote,
    BivariateScoring,
    Committee,
    Profile,
    UnivariateScoring,
    pair_domain,
)
from abcs_workbench.util import DomainError


def test_pair_domain_m4_k2():
    assert set(pair_domain(4, 2)) == {(0, 1), (1, 1), (0, 2), (1, 2), (2, 2), (1, 3), (2, 3)}


def test_pair_domain_m3_k2():
    domain = pair_domain(3, 2)
    assert set(domain) == {(0, 1), (1, 1), (1, 2), (2, 2)}
    assert len(domain) == 3 * 3 - 5


def test_pair_domain_boundary_rows():
    domain = pair_domain(5, 4)
    assert [x for x, y in domain if y == 1] == [0, 1]
    assert [x for x, y in domain if y == 4] == [3, 4]


@pytest.mark.parametrize("m", range(3, 12))
def test_pair_domain_k2_size(m):
    assert len(pair_domain(m, 2)) == 3 * m - 5


def _realizable_pairs(m: int, k: int) -> set[tuple[int, int]]:
    """(x, y) such that a k-committee meets some y-vote in exactly x alternatives."""
    return {
        (x, y)
        for y in range(1, m)
        for x in range(k + 1)
        if x <= y and y - x <= m - k
    }


@pytest.mark.parametrize("m", range(3, 31))
def test_pair_domain_size(m):
    for k in range(2, m):
        domain = pair_domain(m, k)
        assert set(domain) == _realizable_pairs(m, k), (m, k)
        assert len(domain) == (k + 1) * (m - k + 1) - 2


def test_pair_domain_realized_by_committees():
    m, k = 5, 2
    committee = set(range(k))
    seen = {
        (len(committee & set(vote)), y)
        for y in range(1, m)
        for vote in combinations(range(m), y)
    }
    assert set(pair_domain(m, k)) == seen


@pytest.mark.parametrize(("m", "k"), [(3, 1), (3, 3), (2, 2), (4, 0)])
def test_pair_domain_rejects_bad_k(m, k):
    with pytest.raises(DomainError):
        pair_domain(m, k)


def test_profile_rejects_out_of_range_vote():
    with pytest.raises(DomainError, match="refers to alternative"):
        Profile.from_sets(3, [{0, 3}])


def test_profile_rejects_full_and_empty_votes():
    with pytest.raises(DomainError, match="approves all"):
        Profile.from_sets(3, [{0, 1, 2}])
    with pytest.raises(DomainError):
        ApprovalVote(frozenset())


def test_profile_multiplicities_count_voters():
    profile = Profile.from_sets(3, [{0}, {1}], multiplicities=[3, 2])
    assert profile.n == 5
    assert len(profile) == 2


def test_profile_names():
    profile = Profile.from_named_sets(["a", "b", "c"], [["a", "b"], ["c"]])
    assert profile.index_of("c") == 2
    assert profile.committee(["c", "a"]).members == (0, 2)
    assert Profile.from_sets(3, [{0}]).all_names() == ("a0", "a1", "a2")
    with pytest.raises(DomainError, match="Unknown alternative"):
        profile.index_of("z")


def test_profile_restrict_and_concat():
    profile = Profile.from_sets(3, [{0}, {1}, {2}])
    expected = (ApprovalVote(frozenset({2})), ApprovalVote(frozenset({0})))
    assert profile.restrict([2, 0]).votes == expected
    assert profile.concat(profile).n == 6


def test_committee_is_sorted_and_unique():
    assert Committee.of([2, 0]).members == (0, 2)
    with pytest.raises(DomainError, match="repeated"):
        Committee.of([1, 1])


def test_univariate_validation():
    with pytest.raises(DomainError, match="map 0 to 0"):
        UnivariateScoring(2, (1, 1, 1))
    with pytest.raises(DomainError, match="decreases"):
        UnivariateScoring(2, (0, 2, 1))
    with pytest.raises(DomainError, match="Expected 3 values"):
        UnivariateScoring(2, (0, 1))


def test_named_univariate_rules():
    assert UnivariateScoring.cc(3).values == (0, 1, 1, 1)
    assert UnivariateScoring.av(3).values == (0, 1, 2, 3)
    assert UnivariateScoring.pav(3).values == (0, 1, Fraction(3, 2), Fraction(11, 6))
    assert UnivariateScoring.trivial(3).is_trivial
    assert UnivariateScoring.pav(3).increments() == (1, Fraction(1, 2), Fraction(1, 3))


def test_bivariate_normalization_is_enforced():
    domain = pair_domain(4, 2)
    with pytest.raises(DomainError, match="not normalized"):
        BivariateScoring(domain, {(0, 1): 1, (1, 1): 2})
    with pytest.raises(DomainError, match="decreases"):
        BivariateScoring(domain, {(1, 2): 2, (2, 2): 1})
    with pytest.raises(DomainError, match="negative"):
        BivariateScoring(domain, {(1, 2): -1})
    with pytest.raises(DomainError, match="outside the pair domain"):
        BivariateScoring(domain, {(3, 3): 1})


def test_bivariate_from_values_normalizes_rows():
    f = BivariateScoring.from_values(4, 2, {(1, 3): 5, (2, 3): 7}, normalize=True)
    assert f(1, 3) == 0
    assert f(2, 3) == 2


def test_bivariate_cc_lift():
    f = BivariateScoring.cc(4, 2)
    assert f(1, 1) == 1
    assert f(2, 2) == 1
    # every vote of size 3 meets a 2-committee, so the row collapses to 0
    assert f(1, 3) == 0
    assert f(2, 3) == 0


def test_bivariate_increments_round_trip():
    f = BivariateScoring.pav(5, 3)
    assert BivariateScoring.from_increments(5, 3, f.increments()) == f


def test_bivariate_table_shape():
    table = BivariateScoring.av(4, 2).table()
    assert list(table.index) == [1, 2, 3]
    assert table.loc[2, 2] == 2
