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

from abcs_workbench.rul import resolve_rule
from abcs_workbench.solvers import PacConfig, VoteSizeLaw, pac_experiment
from abcs_workbench.tool import Parameter, WBTool, int_list

from .common import show_progress


def run_pac(
    target: str,
    m: int = 5,
    k: int = 2,
    n: int = 6,
    sample_count: int = 40,
    test_count: int = 100,
    budgets: tuple[int, ...] = (),
    distribution: str = "uniform",
    seed: int = 0,
    runs: int = 1,
    output: str | None = None,
) -> int:
    config = PacConfig(
        m=m,
        k=k,
        n=n,
        target=resolve_rule(target, m, k),
        sample_count=sample_count,
        test_count=test_count,
        distribution=VoteSizeLaw.parse(distribution),
        seed=seed,
        budgets=budgets,
        runs=runs,
    )
    report = pac_experiment(config, progress=show_progress())
    if output is None:
        print(report.to_csv(), end="")
    else:
        report.to_csv(output)
        print(report.summary().to_string())
    return 0


class Pac(WBTool):
    """
    Learns a target rule from sampled profiles and reports the test error per training budget.

    The vote law is ``uniform``, ``constant:<size>``, ``binomial:<p>`` or
    ``binomial:<p>:independent``.

    .. code::

        abcs-workbench pac --target pav --m 5 --k 2 --budgets 5,10,20 --runs 3 --output pac.csv
    """

    name = "PAC experiment"
    command = "pac"
    description = "Measures how the learned rule's error falls with more samples"
    parameters = [
        Parameter("target", str, help_text="Rule name or path to a .rul file"),
        Parameter("m", int, help_text="Number of alternatives", required=False, default=5),
        Parameter("k", int, help_text="Committee size", required=False, default=2),
        Parameter("n", int, help_text="Voters per profile", required=False, default=6),
        Parameter(
            "sample_count",
            int,
            help_text="Training profiles per run",
            required=False,
            default=40,
        ),
        Parameter(
            "test_count",
            int,
            help_text="Test profiles per run",
            required=False,
            default=100,
        ),
        Parameter(
            "budgets",
            int_list,
            help_text="Comma separated training sizes",
            required=False,
            default=(),
        ),
        Parameter("distribution", str, help_text="Vote law", required=False, default="uniform"),
        Parameter("seed", int, help_text="Seed of the first run", required=False, default=0),
        Parameter("runs", int, help_text="Number of runs", required=False, default=1),
        Parameter("output", str, help_text="Save the report to this .csv file", required=False),
    ]
    tool_function = run_pac
