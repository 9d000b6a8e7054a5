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

from pathlib import Path

from abcs_workbench.constructions import (
    abcs_shatter_family,
    export_family,
    load_family,
    margin_table,
    outcome_table,
    seq_shatter_family,
    verify_n_shattering,
)
from abcs_workbench.dimacs import CNF, COL
from abcs_workbench.prf import PRF
from abcs_workbench.reductions import (
    cc_reduction_report,
    is_reduction_report,
    reduce_is_to_cc_verification,
    reduce_is_to_target_abcs,
    reduce_sat_to_seqcc_verification,
    reduce_sat_to_target_seq,
    sat_reduction_report,
)
from abcs_workbench.tool import Parameter, WBTool
from abcs_workbench.util import DomainError

from .common import show_progress

GRAPH_REDUCTIONS = {
    "is-abcs": (reduce_is_to_target_abcs, is_reduction_report),
    "is-cc": (reduce_is_to_cc_verification, cc_reduction_report),
}
FORMULA_REDUCTIONS = {
    "sat-seq": (reduce_sat_to_target_seq, sat_reduction_report),
    "sat-seqcc": (reduce_sat_to_seqcc_verification, None),
}


def _read_source(reduction: str, source: str):
    if reduction in GRAPH_REDUCTIONS:
        return COL(source).graph
    if reduction in FORMULA_REDUCTIONS:
        return CNF(source).formula
    known = ", ".join([*GRAPH_REDUCTIONS, *FORMULA_REDUCTIONS])
    raise DomainError(f"Unknown reduction '{reduction}', expected one of {known}")


def generate_reduction(source: str, reduction: str, output: str, k: int | None = None) -> int:
    problem = _read_source(reduction, source)
    if reduction in GRAPH_REDUCTIONS:
        if k is None:
            raise DomainError(f"Reduction '{reduction}' needs --k")
        instance = GRAPH_REDUCTIONS[reduction][0](problem, k)
    else:
        instance = FORMULA_REDUCTIONS[reduction][0](problem)
    PRF.from_instance(instance).save(output)
    print(f"m={instance.profile.m} k={instance.k} n={instance.profile.n}")
    return 0


def generate_shatter(kind: str, k: int, output: str, m: int | None = None) -> int:
    if kind == "abcs":
        if m is None:
            raise DomainError("ABCS families need --m")
        family = abcs_shatter_family(m, k)
    elif kind == "seq":
        family = seq_shatter_family(k)
    else:
        raise DomainError(f"Unknown family kind '{kind}', expected 'abcs' or 'seq'")
    manifest = export_family(family, output)
    print(f"{len(family)} profiles written, manifest {manifest}")
    return 0


def _family_checks(directory: Path) -> list[tuple[str, bool]]:
    family = load_family(directory)
    progress = show_progress()
    checks = [("shattered", verify_n_shattering(family, progress=progress))]
    if family.kind == "abcs":
        margins = margin_table(family, progress=progress)
        expected = margins["in_subset"].map({True: 1, False: -1})
        checks.append(("a_minus_c", bool((margins["a_minus_c"] == expected).all())))
        checks.append(("a_minus_rival", bool((margins["a_minus_rival"] >= 1).all())))
    else:
        outcomes = outcome_table(family, progress=progress)
        checks.append(("unique_expected", bool(outcomes["unique_expected"].all())))
    return checks


def _instance_checks(
    path: Path,
    reduction: str | None,
    source: str | None,
) -> list[tuple[str, bool]]:
    if reduction is None or source is None:
        raise DomainError("Checking a reduction instance needs --reduction and --source")
    problem = _read_source(reduction, source)
    report = {**GRAPH_REDUCTIONS, **FORMULA_REDUCTIONS}[reduction][1]
    if report is None:
        raise DomainError(f"Reduction '{reduction}' has no construction checks")
    frame = report(PRF(path).instance, problem)
    return [(row.check, bool(row.holds)) for row in frame.itertuples(index=False)]


def check_construction(  # noqa: A002
    input: str, reduction: str | None = None, source: str | None = None
) -> int:
    path = Path(input)
    checks = _family_checks(path) if path.is_dir() else _instance_checks(path, reduction, source)
    for check, holds in checks:
        print(f"{'PASS' if holds else 'FAIL'} {check}")
    return 0 if all(holds for _, holds in checks) else 1


class GenerateReduction(WBTool):
    """
    Builds a reduction instance from a DIMACS graph (``is-abcs``, ``is-cc``) or a 2P2N formula
    (``sat-seq``, ``sat-seqcc``) and writes it as a profile file with its committee and parts.

    .. code::

        abcs-workbench gen-reduction --source k3.col --reduction is-abcs --k 2 --output k3.prf
    """

    name = "Generate reduction"
    command = "gen-reduction"
    description = "Writes the profile built by a hardness reduction"
    parameters = [
        Parameter("source", str, help_text="Path to a .col graph or .cnf formula"),
        Parameter("reduction", str, help_text="is-abcs, is-cc, sat-seq or sat-seqcc"),
        Parameter("output", str, help_text="Path of the .prf file to write"),
        Parameter("k", int, help_text="Independent set size for graph reductions", required=False),
    ]
    tool_function = generate_reduction


class GenerateShatter(WBTool):
    """
    Writes a shattered family of profiles, one profile file per tag plus a manifest.

    .. code::

        abcs-workbench gen-shatter --kind abcs --m 5 --k 2 --output family/
    """

    name = "Generate shattered family"
    command = "gen-shatter"
    description = "Writes a family of profiles shattered by ABCS or sequential rules"
    parameters = [
        Parameter("kind", str, help_text="'abcs' or 'seq'"),
        Parameter("k", int, help_text="Committee size"),
        Parameter("output", str, help_text="Directory to write the family to"),
        Parameter("m", int, help_text="Number of alternatives, ABCS families only", required=False),
    ]
    tool_function = generate_shatter


class CheckConstruction(WBTool):
    """
    Re-checks a written construction. A directory is read as a shattered family, a profile file
    as a reduction instance that is checked against its ``--source``. Prints one PASS or FAIL
    line per check and exits with 1 if any check fails.
    """

    name = "Check construction"
    command = "check-construction"
    description = "Checks the properties a family or reduction instance must have"
    parameters = [
        Parameter("input", str, help_text="Family directory or reduction instance file"),
        Parameter(
            "reduction",
            str,
            help_text="Reduction the instance was built by",
            required=False,
        ),
        Parameter(
            "source",
            str,
            help_text="Graph or formula the instance was built from",
            required=False,
        ),
    ]
    tool_function = check_construction
