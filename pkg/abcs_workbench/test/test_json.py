import json

import pytest

from abcs_workbench import CNF, COL, PRF, RUL
from abcs_workbench.model import BivariateScoring, Profile, UnivariateScoring
from abcs_workbench.reductions import reduce_sat_to_seqcc_verification
from abcs_workbench.solvers import LabeledSample, label_samples
from abcs_workbench.to_from_json import is_jsonable, to_json


@pytest.fixture()
def profile():
    return Profile.from_named_sets(["a", "b", "c"], [["a"], ["a", "b"]], multiplicities=[2, 1])


def test_profile_json(profile):
    assert Profile.from_json(profile.to_json()) == profile


def test_rule_json_keeps_exact_values():
    f = BivariateScoring.pav(5, 3)
    data = json.loads(f.to_json())
    assert data["API Version"]
    assert BivariateScoring.from_json(f.to_json()) == f
    s = UnivariateScoring.pav(4)
    assert UnivariateScoring.from_json(s.to_json()) == s


def test_sample_json(profile):
    sample = label_samples(BivariateScoring.cc(3, 2), [profile])[0]
    assert LabeledSample.from_json(sample.to_json()) == sample


def test_instance_json(unsat_formula):
    instance = reduce_sat_to_seqcc_verification(unsat_formula)
    assert type(instance).from_json(instance.to_json()) == instance


def test_file_classes_json(test_workspace):
    for obj in (
        PRF(test_workspace / "small.prf"),
        RUL(test_workspace / "pav_4_2.rul"),
        COL(test_workspace / "k3.col"),
        CNF(test_workspace / "sat_r3.cnf"),
    ):
        assert is_jsonable(json.loads(obj.to_json()))
        assert type(obj).from_json(obj.to_json()) == obj


def test_module_level_to_json(profile):
    assert json.loads(to_json(profile))["API Class"] == "abcs_workbench.model.profile.Profile"
