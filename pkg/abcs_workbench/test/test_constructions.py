import dataclasses

import pytest

from abcs_workbench.constructions import (
    MANIFEST,
    abcs_shatter_family,
    export_family,
    load_family,
    margin_table,
    outcome_table,
    seq_shatter_family,
    seq_shatter_rule,
    t_set,
    verify_g_shattering,
    verify_n_shattering,
)
from abcs_workbench.model import pair_domain
from abcs_workbench.util import CapacityError, DomainError, ParseError, WorkbenchError


def test_t_set_m4_k2():
    assert t_set(4, 2) == [(1, 2), (2, 3)]


@pytest.mark.parametrize("m", range(4, 31))
def test_t_set_size(m):
    for k in range(2, m):
        tagged = len(t_set(m, k))
        full = len(pair_domain(m, k))
        assert tagged == full - m - 1
        # the 2/7 bound needs |X| >= 3m - 5, which fails only for k = m - 1
        if k <= m - 2:
            assert 7 * tagged >= 2 * full
        else:
            assert full == 2 * (m - 1)


def test_t_set_rejects_small_inputs():
    with pytest.raises(DomainError):
        t_set(2, 2)
    with pytest.raises(DomainError):
        t_set(5, 1)


@pytest.mark.parametrize(("m", "k"), [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (7, 2), (7, 3)])
def test_abcs_margins(m, k):
    margins = margin_table(abcs_shatter_family(m, k))
    expected = margins["in_subset"].map({True: 1, False: -1})
    assert (margins["a_minus_c"] == expected).all()
    assert (margins["a_minus_rival"] >= 1).all()
    assert len(margins) == 2 ** len(t_set(m, k)) * len(t_set(m, k))


@pytest.mark.parametrize("m", [4, 5, 6])
def test_abcs_family_is_shattered(m):
    assert verify_n_shattering(abcs_shatter_family(m, 2))


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_seq_family_is_shattered(k):
    family = seq_shatter_family(k)
    assert family.m == k + 1
    assert verify_n_shattering(family)
    assert outcome_table(family)["unique_expected"].all()


def test_seq_shatter_rule_steps():
    assert seq_shatter_rule(3, {3}).values == (0, 1, 3, 3)
    with pytest.raises(DomainError, match="not steps"):
        seq_shatter_rule(3, {1})


def test_equal_rules_do_not_shatter():
    family = abcs_shatter_family(4, 2)
    assert not verify_n_shattering(dataclasses.replace(family, g2=family.g1))


def test_g_shattering():
    family = abcs_shatter_family(4, 2)
    assert verify_g_shattering(family.profiles, family.rule_builder, family.g1, tags=family.tags)
    single = family.profiles[:1]
    assert not verify_g_shattering(single, lambda chosen: family.g1, family.g1)


def test_margins_are_abcs_only():
    with pytest.raises(DomainError):
        margin_table(seq_shatter_family(3))


def test_shatter_cap(low_caps):
    with pytest.raises(CapacityError):
        verify_n_shattering(abcs_shatter_family(5, 2))


def test_export_and_load(tmp_path):
    family = abcs_shatter_family(5, 2)
    manifest = export_family(family, tmp_path / "family")
    assert manifest.name == MANIFEST
    assert len(list((tmp_path / "family").glob("*.prf"))) == len(family)
    loaded = load_family(tmp_path / "family")
    assert loaded.tags == family.tags
    assert [p.votes for p in loaded.profiles] == [p.votes for p in family.profiles]
    assert verify_n_shattering(loaded)


def test_load_seq_family(tmp_path):
    export_family(seq_shatter_family(4), tmp_path)
    assert verify_n_shattering(load_family(tmp_path))


def test_load_rejects_bad_manifest(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_family(tmp_path)
    export_family(seq_shatter_family(3), tmp_path)
    (tmp_path / MANIFEST).write_text("kind seq\nm 4\nk 3\nprofile P_2.prf 2\n")
    with pytest.raises(ParseError, match="do not match"):
        load_family(tmp_path)
    (tmp_path / MANIFEST).write_text("kind seq\nm 4\n")
    with pytest.raises(ParseError, match="must name"):
        load_family(tmp_path)
    (tmp_path / MANIFEST).unlink()
    (tmp_path / "P_2.prf").write_text("m 4 k 3\n1 a9\n")
    (tmp_path / MANIFEST).write_text("kind seq\nm 4\nk 3\nprofile P_2.prf 2\nprofile P_3.prf 3\n")
    with pytest.raises(WorkbenchError):
        load_family(tmp_path)
