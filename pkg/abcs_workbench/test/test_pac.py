import numpy as np
import pandas as pd
import pytest

from abcs_workbench.model import BivariateScoring, UnivariateScoring
from abcs_workbench.solvers import PacConfig, VoteSizeLaw, pac_experiment, sample_profile
from abcs_workbench.util import DomainError


def test_constant_law_gives_singletons():
    config = PacConfig(
        m=3,
        k=2,
        n=20,
        target=BivariateScoring.cc(3, 2),
        distribution=VoteSizeLaw("constant", 1),
    )
    profile = sample_profile(config, 5)
    assert all(vote.size == 1 for vote in profile)
    assert profile.n == 20


def test_sampling_is_deterministic():
    config = PacConfig(m=5, k=2, n=6, target=BivariateScoring.cc(5, 2))
    assert sample_profile(config, 42) == sample_profile(config, 42)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("uniform", VoteSizeLaw()),
        ("constant:2", VoteSizeLaw("constant", 2)),
        ("binomial:0.3", VoteSizeLaw("binomial", 0.3)),
        ("binomial:0.3:independent", VoteSizeLaw("binomial", 0.3, uniform_subset=False)),
    ],
)
def test_vote_law_parse(text, expected):
    assert VoteSizeLaw.parse(text) == expected


def test_vote_law_rejects_nonsense():
    with pytest.raises(ValueError, match="Unrecognised"):
        VoteSizeLaw.parse("zipf")
    with pytest.raises(ValueError):
        VoteSizeLaw("binomial", 1.5)


def test_binomial_sizes_sum_to_one():
    probabilities = VoteSizeLaw("binomial", 0.4).size_probabilities(6)
    assert probabilities.shape == (5,)
    assert np.isclose(probabilities.sum(), 1.0)


def test_independent_votes_are_proper():
    law = VoteSizeLaw("binomial", 0.9, uniform_subset=False)
    rng = np.random.default_rng(0)
    assert all(1 <= len(law.draw(rng, 4)) <= 3 for _ in range(50))


def test_config_validation():
    with pytest.raises(ValueError, match="exceeds"):
        PacConfig(m=5, k=2, n=6, target=BivariateScoring.cc(5, 2), sample_count=10, budgets=(20,))
    with pytest.raises(DomainError, match="defined for m=4"):
        PacConfig(m=5, k=2, n=6, target=BivariateScoring.cc(4, 2))
    with pytest.raises(ValueError, match="invalid"):
        PacConfig(m=5, k=2, n=0, target=BivariateScoring.cc(5, 2))
    with pytest.raises(DomainError, match="trivial"):
        PacConfig(m=4, k=2, n=3, target=BivariateScoring.trivial(4, 2))
    with pytest.raises(DomainError, match="trivial"):
        PacConfig(m=4, k=2, n=3, target=UnivariateScoring.trivial(2))


def test_report_rows_per_budget():
    config = PacConfig(
        m=5,
        k=2,
        n=6,
        target=BivariateScoring.cc(5, 2),
        sample_count=40,
        test_count=20,
        budgets=(5, 10, 20, 40),
    )
    report = pac_experiment(config)
    assert list(report.frame.columns) == ["budget", "seed", "empirical_error", "train_consistent"]
    assert list(report.frame["budget"]) == [5, 10, 20, 40]
    assert report.frame["train_consistent"].all()


def test_zero_budget_row():
    config = PacConfig(
        m=4,
        k=2,
        n=4,
        target=BivariateScoring.cc(4, 2),
        sample_count=5,
        test_count=5,
        budgets=(0,),
    )
    frame = pac_experiment(config).frame
    assert len(frame) == 1
    assert 0 <= frame["empirical_error"][0] <= 1


def test_sequential_target():
    config = PacConfig(
        m=4,
        k=2,
        n=5,
        target=UnivariateScoring.cc(2),
        sample_count=10,
        test_count=10,
        runs=2,
    )
    frame = pac_experiment(config).frame
    assert list(frame["seed"]) == [0, 1]
    assert frame["train_consistent"].all()


def test_error_falls_with_more_samples():
    config = PacConfig(
        m=5,
        k=2,
        n=6,
        target=BivariateScoring.cc(5, 2),
        sample_count=40,
        budgets=(5, 40),
        runs=20,
    )
    report = pac_experiment(config)
    assert report.frame["train_consistent"].all()
    summary = report.summary()
    assert summary.loc[40, "mean_error"] <= summary.loc[5, "mean_error"]
    assert (summary["runs"] == 20).all()


def test_report_csv(tmp_path, capsys):
    config = PacConfig(
        m=4,
        k=2,
        n=4,
        target=BivariateScoring.av(4, 2),
        sample_count=4,
        test_count=4,
    )
    report = pac_experiment(config)
    text = report.to_csv(tmp_path / "out" / "pac.csv")
    assert "PAC report saved to:" in capsys.readouterr().out
    assert pd.read_csv(tmp_path / "out" / "pac.csv").shape == (1, 4)
    assert text.splitlines()[0] == "budget,seed,empirical_error,train_consistent"
