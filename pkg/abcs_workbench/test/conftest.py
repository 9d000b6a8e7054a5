import os
from pathlib import Path

import pytest

from abcs_workbench.dimacs import CNF, COL


@pytest.fixture(scope="session")
def test_workspace():
    return Path(os.path.dirname(__file__), "test_data")


@pytest.fixture()
def low_caps(monkeypatch):
    """Shrinks every capacity limit so refusals can be triggered with tiny inputs."""
    for name in (
        "ABCS_WORKBENCH_SHATTER_CAP",
        "ABCS_WORKBENCH_ORACLE_CAP",
        "ABCS_WORKBENCH_SEARCH_CAP",
        "ABCS_WORKBENCH_COMMITTEE_CAP",
    ):
        monkeypatch.setenv(name, "2")


@pytest.fixture()
def k3(test_workspace):
    return COL(test_workspace / "k3.col").graph


@pytest.fixture()
def path3(test_workspace):
    return COL(test_workspace / "path3.col").graph


@pytest.fixture()
def sat_formula(test_workspace):
    return CNF(test_workspace / "sat_r3.cnf").formula


@pytest.fixture()
def unsat_formula(test_workspace):
    return CNF(test_workspace / "unsat_r3.cnf").formula
