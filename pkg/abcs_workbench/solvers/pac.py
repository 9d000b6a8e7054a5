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
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd
from scipy.stats import binom
from tqdm import tqdm

from ..model import BivariateScoring, Profile, UnivariateScoring
from ..util import DomainError
from ..validation import _validate_config, _validate_vote_law
from .erm import erm_abcs, erm_seq, label_samples, training_consistent, winners_under

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["budget", "seed", "empirical_error", "train_consistent"]


@dataclass(frozen=True)
class VoteSizeLaw:
    """Distribution of a single approval vote over m alternatives.

    ``kind`` picks the law of the vote size on 1..m-1: ``uniform``, ``constant`` (size
    ``parameter``) or ``binomial`` (1 + Binomial(m-2, ``parameter``)). The approved set is then
    a uniform subset of that size. With ``uniform_subset=False`` a binomial vote instead approves
    each alternative independently with probability ``parameter``, redrawing empty and full votes.
    """

    kind: str = "uniform"
    parameter: float | int | None = None
    uniform_subset: bool = True

    def __post_init__(self):
        _validate_vote_law(self)
        object.__setattr__(self, "kind", self.kind.lower())
        if self.kind == "constant" and (not isinstance(self.parameter, int) or self.parameter < 1):
            raise ValueError(
                f"A constant vote size must be a positive integer, got {self.parameter}",
            )
        if self.kind == "binomial" and (self.parameter is None or not 0 < self.parameter < 1):
            raise ValueError(f"A binomial vote law needs 0 < p < 1, got {self.parameter}")
        if not self.uniform_subset and self.kind != "binomial":
            raise ValueError("Independent inclusion is only defined for the binomial law")

    @classmethod
    def parse(cls, text: str) -> VoteSizeLaw:
        """Reads ``uniform``, ``constant:<size>``, ``binomial:<p>`` or ``binomial:<p>:independent``."""
        kind, *rest = text.strip().split(":")
        if kind.lower() == "constant" and len(rest) == 1:
            return cls("constant", int(rest[0]))
        if kind.lower() == "binomial" and rest:
            independent = len(rest) > 1 and rest[1].lower() == "independent"
            return cls("binomial", float(rest[0]), uniform_subset=not independent)
        if kind.lower() == "uniform" and not rest:
            return cls("uniform")
        raise ValueError(f"Unrecognised vote law: '{text}'")

    def size_probabilities(self, m: int) -> np.ndarray:
        """Probability of each vote size 1..m-1 (entry i is size i+1)."""
        if self.kind == "uniform":
            return np.full(m - 1, 1 / (m - 1))
        if self.kind == "constant":
            if not 1 <= self.parameter <= m - 1:
                raise DomainError(f"Vote size {self.parameter} lies outside 1..{m - 1}")
            probabilities = np.zeros(m - 1)
            probabilities[self.parameter - 1] = 1.0
            return probabilities
        return binom.pmf(np.arange(m - 1), m - 2, self.parameter)

    def draw(self, rng: np.random.Generator, m: int) -> frozenset[int]:
        if not self.uniform_subset:
            while True:
                approved = np.flatnonzero(rng.random(m) < self.parameter)
                if 1 <= len(approved) <= m - 1:
                    return frozenset(int(a) for a in approved)
        size = int(rng.choice(np.arange(1, m), p=self.size_probabilities(m)))
        return frozenset(int(a) for a in rng.choice(m, size=size, replace=False))


@dataclass(frozen=True)
class PacConfig:
    """Settings of a PAC experiment.

    Args:
        m, k, n: Alternatives, committee size and voters per profile.
        target: Rule that labels every profile. Bivariate targets are learned with
            :func:`erm_abcs`, univariate targets with :func:`erm_seq`.
        sample_count: Size of the training pool drawn per run.
        test_count: Number of fresh profiles used to estimate the error.
        distribution: Law of a single vote.
        seed: Run i uses seed + i.
        budgets: Training set sizes to evaluate, each a prefix of the pool. Defaults to
            ``(sample_count,)``.
        runs: Number of independent runs.
    """

    m: int
    k: int
    n: int
    target: Union[BivariateScoring, UnivariateScoring]
    sample_count: int = 40
    test_count: int = 100
    distribution: VoteSizeLaw = field(default_factory=VoteSizeLaw)
    seed: int = 0
    budgets: tuple[int, ...] = ()
    runs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "budgets", tuple(self.budgets) or (self.sample_count,))
        _validate_config(self)
        if self.k >= self.m:
            raise ValueError(f"Committee size k={self.k} must be below m={self.m}")
        if max(self.budgets) > self.sample_count:
            raise ValueError(
                f"Budget {max(self.budgets)} exceeds the training pool of {self.sample_count}",
            )
        shape = (self.m, self.k)
        if isinstance(self.target, BivariateScoring) and (self.target.m, self.target.k) != shape:
            raise DomainError(f"Target rule is defined for m={self.target.m}, k={self.target.k}")
        if isinstance(self.target, UnivariateScoring) and self.target.k != self.k:
            raise DomainError(f"Target rule is defined for k={self.target.k}")
        if self.target.is_trivial:
            raise DomainError("Target rule is trivial: it ties every committee")


def sample_profile(config: PacConfig, rng_state: np.random.Generator | int | None) -> Profile:
    """Draws n votes i.i.d. from the configured law. Deterministic for a fixed seed."""
    rng = np.random.default_rng(rng_state)
    return Profile.from_sets(
        config.m,
        [config.distribution.draw(rng, config.m) for _ in range(config.n)],
    )


@dataclass
class PacReport:
    """One row per (run, budget) with the test error of the learned rule."""

    frame: pd.DataFrame

    def to_csv(self, path: str | Path | None = None) -> str:
        text = self.frame.to_csv(index=False, lineterminator="\n")
        if path is not None:
            path = Path(path).absolute()
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
            print(f"PAC report saved to: {path}")
        return text

    def summary(self) -> pd.DataFrame:
        """Mean error and share of training-consistent runs per budget."""
        return self.frame.groupby("budget").agg(
            mean_error=("empirical_error", "mean"),
            consistent_share=("train_consistent", "mean"),
            runs=("seed", "count"),
        )


def pac_experiment(config: PacConfig, progress: bool = False) -> PacReport:
    """Runs the learner on growing training budgets and measures its error on fresh profiles.

    Raises:
        RuntimeError: If the ABCS learner finds no rule for samples labeled by a bivariate target.
    """
    bivariate = isinstance(config.target, BivariateScoring)
    rows = []
    for run in tqdm(range(config.runs), desc="PAC runs", disable=not progress):
        seed = config.seed + run
        train_rng = np.random.default_rng([seed, 0])
        test_rng = np.random.default_rng([seed, 1])
        pool = label_samples(
            config.target,
            [sample_profile(config, train_rng) for _ in range(config.sample_count)],
        )
        tests = [sample_profile(config, test_rng) for _ in range(config.test_count)]
        expected = [winners_under(config.target, profile) for profile in tests]

        for budget in config.budgets:
            train = pool[:budget]
            if bivariate:
                learned = erm_abcs(train, config.m, config.k)
                if learned is None:
                    raise RuntimeError(
                        f"ABCS learner failed on realizable data (seed {seed}, budget {budget})",
                    )
            else:
                learned = erm_seq(train, k=config.k)
            if learned is None:
                logger.warning(
                    "Sequential learner found no grid rule (seed %d, budget %d)",
                    seed,
                    budget,
                )
                rows.append(
                    {
                        "budget": budget,
                        "seed": seed,
                        "empirical_error": 1.0,
                        "train_consistent": False,
                    },
                )
                continue
            mistakes = sum(
                winners_under(learned, profile) != labels
                for profile, labels in zip(tests, expected)
            )
            rows.append(
                {
                    "budget": budget,
                    "seed": seed,
                    "empirical_error": mistakes / config.test_count,
                    "train_consistent": training_consistent(learned, train),
                },
            )
            logger.debug("seed %d budget %d: error %.3f", seed, budget, rows[-1]["empirical_error"])

    return PacReport(pd.DataFrame(rows, columns=REPORT_COLUMNS))
