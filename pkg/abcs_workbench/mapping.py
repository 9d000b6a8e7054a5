"""
ABCS Workbench
Copyright (C) 2026 ABCS Workbench contributors

This program is free software: you can redistribute it and/or modify it under the terms of the GNU General Public License
as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty
of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public License for more details.

You should have received a copy of the GNU General Public License along with this program.  If not, see https://www.gnu.org/licenses/.
"""

from typing import Any

from . import CNF, COL, PRF, RUL
from .model import (
    ApprovalVote,
    BivariateScoring,
    Cnf2p2n,
    Committee,
    Graph,
    PairDomain,
    Profile,
    ReductionInstance,
    UnivariateScoring,
)
from .solvers import LabeledSample

api_class_mapping: dict[str, Any] = {
    "abcs_workbench.prf.PRF": PRF,
    "abcs_workbench.rul.RUL": RUL,
    "abcs_workbench.dimacs.COL": COL,
    "abcs_workbench.dimacs.CNF": CNF,
    "abcs_workbench.model.profile.ApprovalVote": ApprovalVote,
    "abcs_workbench.model.profile.Profile": Profile,
    "abcs_workbench.model.profile.Committee": Committee,
    "abcs_workbench.model.scoring.PairDomain": PairDomain,
    "abcs_workbench.model.scoring.BivariateScoring": BivariateScoring,
    "abcs_workbench.model.scoring.UnivariateScoring": UnivariateScoring,
    "abcs_workbench.model.instances.Graph": Graph,
    "abcs_workbench.model.instances.Cnf2p2n": Cnf2p2n,
    "abcs_workbench.model.instances.ReductionInstance": ReductionInstance,
    "abcs_workbench.solvers.erm.LabeledSample": LabeledSample,
}
