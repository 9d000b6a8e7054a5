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
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .model.helpers import data_lines, format_rational, parse_rational
from .util import ParseError, WitnessError

logger = logging.getLogger(__name__)

Coefficients = Mapping[str, "Fraction | int"] | Sequence["Fraction | int"]


class Relation(str, Enum):
    GE = ">="
    EQ = "="


@dataclass(frozen=True)
class Constraint:
    """``coefficients . x  (>= | =)  bound`` with one coefficient per system variable."""

    coefficients: tuple[Fraction, ...]
    relation: Relation
    bound: Fraction

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum((a * v for a, v in zip(self.coefficients, point) if a), Fraction(0))

    def holds(self, point: Sequence[Fraction]) -> bool:
        value = self.evaluate(point)
        return value >= self.bound if self.relation is Relation.GE else value == self.bound


class LinearConstraintSystem:
    """Exact rational linear constraints over named variables.

    Variables are free unless listed in ``nonnegative`` (pass ``True`` to make all of them
    nonnegative).

    Args:
        variables (Sequence[str]): Unique variable names, fixing the coefficient order.
        nonnegative (Iterable[str] | bool): Variables constrained to be >= 0.
    """

    def __init__(self, variables: Sequence[str], nonnegative: Iterable[str] | bool = ()):
        self.variables = tuple(variables)
        self._index = {name: idx for idx, name in enumerate(self.variables)}
        if len(self._index) != len(self.variables):
            raise ValueError("Variable names must be unique")
        if nonnegative is True:
            nonnegative = self.variables
        elif nonnegative is False:
            nonnegative = ()
        self.nonnegative = frozenset(nonnegative)
        unknown = self.nonnegative - set(self.variables)
        if unknown:
            raise ValueError(f"Unknown variables marked nonnegative: {sorted(unknown)}")
        self.constraints: list[Constraint] = []

    def __repr__(self):
        return (
            f"<abcs_workbench LinearConstraintSystem: {len(self.variables)} variables, "
            f"{len(self.constraints)} constraints>"
        )

    def __len__(self) -> int:
        return len(self.constraints)

    def _vector(self, coefficients: Coefficients) -> tuple[Fraction, ...]:
        if isinstance(coefficients, Mapping):
            vector = [Fraction(0)] * len(self.variables)
            for name, value in coefficients.items():
                if name not in self._index:
                    raise ValueError(f"Unknown variable: {name}")
                vector[self._index[name]] += Fraction(value)
            return tuple(vector)
        if len(coefficients) != len(self.variables):
            raise ValueError(
                f"Expected {len(self.variables)} coefficients, got {len(coefficients)}",
            )
        return tuple(Fraction(value) for value in coefficients)

    def add(
        self,
        coefficients: Coefficients,
        relation: Relation | str,
        bound: Fraction | int = 0,
    ) -> int:
        """Appends a constraint and returns its position."""
        self.constraints.append(
            Constraint(self._vector(coefficients), Relation(relation), Fraction(bound)),
        )
        return len(self.constraints) - 1

    def add_ge(self, coefficients: Coefficients, bound: Fraction | int = 0) -> int:
        return self.add(coefficients, Relation.GE, bound)

    def add_eq(self, coefficients: Coefficients, bound: Fraction | int = 0) -> int:
        return self.add(coefficients, Relation.EQ, bound)

    def is_satisfied_by(self, point: Sequence[Fraction] | Mapping[str, Fraction]) -> bool:
        if isinstance(point, Mapping):
            point = [Fraction(point.get(name, 0)) for name in self.variables]
        if len(point) != len(self.variables):
            return False
        if any(point[self._index[name]] < 0 for name in self.nonnegative):
            return False
        return all(constraint.holds(point) for constraint in self.constraints)

    def dump(self) -> str:
        """One constraint per line as ``c1 c2 ... rel b`` with rationals written ``num/den``."""
        lines = [
            f"# variables {' '.join(self.variables)}",
            f"# nonnegative {' '.join(name for name in self.variables if name in self.nonnegative)}",
        ]
        for constraint in self.constraints:
            tokens = [format_rational(a) for a in constraint.coefficients]
            tokens += [constraint.relation.value, format_rational(constraint.bound)]
            lines.append(" ".join(tokens))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse_dump(cls, text: str) -> LinearConstraintSystem:
        """Reads the output of :meth:`dump`. Without a variables line the names are x1..xn."""
        variables: list[str] | None = None
        nonnegative: list[str] = []
        for raw in text.splitlines():
            stripped = raw.strip()
            if stripped.startswith("# variables"):
                variables = stripped.split()[2:]
            elif stripped.startswith("# nonnegative"):
                nonnegative = stripped.split()[2:]

        rows: list[tuple[int, list[str]]] = list(data_lines(text))
        if variables is None:
            width = len(rows[0][1]) - 2 if rows else 0
            variables = [f"x{i}" for i in range(1, width + 1)]
        system = cls(variables, nonnegative)
        for line_no, tokens in rows:
            if len(tokens) != len(variables) + 2:
                raise ParseError(
                    f"expected {len(variables)} coefficients, a relation and a bound",
                    line_no,
                )
            coefficients = [parse_rational(token, line_no) for token in tokens[:-2]]
            relation, bound = tokens[-2], parse_rational(tokens[-1], line_no)
            if relation == "<=":
                system.add_ge([-a for a in coefficients], -bound)
            elif relation in (">=", "="):
                system.add(coefficients, relation, bound)
            else:
                raise ParseError(f"unknown relation '{relation}'", line_no)
        return system


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[Fraction, ...] | None
    variables: tuple[str, ...] = ()
    pivots: int = 0

    def values(self) -> dict[str, Fraction]:
        if self.witness is None:
            return {}
        return dict(zip(self.variables, self.witness))


class _PhaseOne:
    """Phase-one simplex on sparse rows with Bland's rule, in exact arithmetic.

    Free variables are split into two nonnegative columns. Every row gets either a slack that can
    start in the basis or an artificial column; the system is feasible iff the sum of
    artificials can be driven to 0.
    """

    def __init__(self, system: LinearConstraintSystem):
        self.system = system
        self.columns: list[tuple[int, int]] = []
        plus: list[int] = []
        minus: list[int | None] = []
        for idx, name in enumerate(system.variables):
            plus.append(len(self.columns))
            self.columns.append((idx, 1))
            if name in system.nonnegative:
                minus.append(None)
            else:
                minus.append(len(self.columns))
                self.columns.append((idx, -1))

        next_column = len(self.columns)
        self.rows: list[dict[int, Fraction]] = []
        self.rhs: list[Fraction] = []
        self.basis: list[int] = []
        self.artificial: set[int] = set()
        for constraint in system.constraints:
            row: dict[int, Fraction] = {}
            for idx, a in enumerate(constraint.coefficients):
                if a:
                    row[plus[idx]] = a
                    if minus[idx] is not None:
                        row[minus[idx]] = -a
            bound = constraint.bound
            needs_artificial = True
            if constraint.relation is Relation.GE:
                if bound > 0:
                    row[next_column] = Fraction(-1)
                else:
                    row = {col: -a for col, a in row.items()}
                    bound = -bound
                    row[next_column] = Fraction(1)
                    self.basis.append(next_column)
                    needs_artificial = False
                next_column += 1
            elif bound < 0:
                row = {col: -a for col, a in row.items()}
                bound = -bound
            if needs_artificial:
                row[next_column] = Fraction(1)
                self.basis.append(next_column)
                self.artificial.add(next_column)
                next_column += 1
            self.rows.append(row)
            self.rhs.append(bound)

        self.cost: dict[int, Fraction] = {}
        self.objective = Fraction(0)
        for row, rhs, basic in zip(self.rows, self.rhs, self.basis):
            if basic in self.artificial:
                self.objective += rhs
                for col, a in row.items():
                    if col != basic:
                        self.cost[col] = self.cost.get(col, Fraction(0)) - a
        self.cost = {col: c for col, c in self.cost.items() if c}
        self.pivots = 0

    def _entering(self) -> int | None:
        candidates = [col for col, c in self.cost.items() if c < 0 and col not in self.artificial]
        return min(candidates, default=None)

    def _leaving(self, entering: int) -> int | None:
        best: int | None = None
        best_ratio = Fraction(0)
        for idx, row in enumerate(self.rows):
            a = row.get(entering)
            if a is None or a <= 0:
                continue
            ratio = self.rhs[idx] / a
            if (
                best is None
                or ratio < best_ratio
                or (ratio == best_ratio and self.basis[idx] < self.basis[best])
            ):
                best, best_ratio = idx, ratio
        return best

    @staticmethod
    def _eliminate(
        target: dict[int, Fraction],
        factor: Fraction,
        source: dict[int, Fraction],
    ) -> None:
        for col, a in source.items():
            value = target.get(col, Fraction(0)) - factor * a
            if value:
                target[col] = value
            else:
                target.pop(col, None)

    def _pivot(self, r: int, entering: int) -> None:
        row = self.rows[r]
        a = row[entering]
        if a != 1:
            row = {col: v / a for col, v in row.items()}
            self.rows[r] = row
            self.rhs[r] /= a
        for idx, other in enumerate(self.rows):
            if idx == r:
                continue
            factor = other.get(entering)
            if factor:
                self._eliminate(other, factor, row)
                self.rhs[idx] -= factor * self.rhs[r]
        factor = self.cost.get(entering)
        if factor:
            self._eliminate(self.cost, factor, row)
            self.objective += factor * self.rhs[r]
        self.basis[r] = entering
        self.pivots += 1

    def solve(self) -> FeasibilityResult:
        while self.objective > 0:
            entering = self._entering()
            if entering is None:
                break
            leaving = self._leaving(entering)
            if leaving is None:
                raise RuntimeError("Phase-one objective is unbounded below")
            self._pivot(leaving, entering)

        if self.objective > 0:
            return FeasibilityResult(False, None, self.system.variables, self.pivots)

        witness = [Fraction(0)] * len(self.system.variables)
        for row_idx, basic in enumerate(self.basis):
            if basic < len(self.columns):
                variable, sign = self.columns[basic]
                witness[variable] += sign * self.rhs[row_idx]
        return FeasibilityResult(True, tuple(witness), self.system.variables, self.pivots)


def feasible(system: LinearConstraintSystem) -> FeasibilityResult:
    """Decides feasibility of ``system`` exactly.

    The returned witness is checked against every constraint before it is handed out.

    Raises:
        WitnessError: If the simplex witness fails the substitution check.
    """
    result = _PhaseOne(system).solve()
    logger.debug(
        "%d variables, %d constraints: %s after %d pivots",
        len(system.variables),
        len(system.constraints),
        "feasible" if result.feasible else "infeasible",
        result.pivots,
    )
    if result.feasible:
        if not check_witness(system, result.witness):
            raise WitnessError("Simplex witness fails the substitution check")
    return result


def check_witness(
    system: LinearConstraintSystem,
    witness: Sequence[Fraction] | Mapping[str, Fraction],
) -> bool:
    return system.is_satisfied_by(witness)


def farkas_certificate(system: LinearConstraintSystem) -> tuple[Fraction, ...] | None:
    """Multipliers proving ``system`` infeasible, one per constraint, or None if it is feasible.

    The multipliers y are nonnegative on >= rows, their combination of the constraint rows is
    <= 0 on nonnegative variables and 0 on free variables, and their combination of the bounds
    is at least 1.
    """
    names = [f"y{idx}" for idx in range(len(system.constraints))]
    dual = LinearConstraintSystem(
        names,
        [name for name, c in zip(names, system.constraints) if c.relation is Relation.GE],
    )
    for idx, variable in enumerate(system.variables):
        column = {name: c.coefficients[idx] for name, c in zip(names, system.constraints)}
        if variable in system.nonnegative:
            dual.add_ge({name: -a for name, a in column.items()}, 0)
        else:
            dual.add_eq(column, 0)
    dual.add_ge({name: c.bound for name, c in zip(names, system.constraints)}, 1)
    result = feasible(dual)
    return result.witness if result.feasible else None


def check_farkas_certificate(
    system: LinearConstraintSystem,
    multipliers: Sequence[Fraction],
) -> bool:
    if len(multipliers) != len(system.constraints):
        return False
    for y, constraint in zip(multipliers, system.constraints):
        if constraint.relation is Relation.GE and y < 0:
            return False
    for idx, variable in enumerate(system.variables):
        combined = sum(
            (y * c.coefficients[idx] for y, c in zip(multipliers, system.constraints)),
            Fraction(0),
        )
        if combined > 0 or (variable not in system.nonnegative and combined != 0):
            return False
    return sum((y * c.bound for y, c in zip(multipliers, system.constraints)), Fraction(0)) > 0
