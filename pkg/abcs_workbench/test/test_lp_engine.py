import random
from fractions import Fraction

import pytest

from abcs_workbench.lp_engine import (
    LinearConstraintSystem,
    check_farkas_certificate,
    check_witness,
    farkas_certificate,
    feasible,
)
from abcs_workbench.util import ParseError, WitnessError

from .oracles import fourier_motzkin_feasible


def test_contradictory_bounds_are_infeasible():
    system = LinearConstraintSystem(["x"])
    system.add_ge([1], 1)
    system.add_ge([-1], 0)
    assert not feasible(system).feasible


def test_equality_gives_witness():
    system = LinearConstraintSystem(["x"])
    system.add_ge([1], 0)
    system.add_eq([1], 2)
    result = feasible(system)
    assert result.feasible
    assert result.values() == {"x": 2}


def test_nonnegative_variables():
    system = LinearConstraintSystem(["x", "y"], nonnegative=True)
    system.add_ge({"x": -1, "y": -1}, 1)
    assert not feasible(system).feasible
    free = LinearConstraintSystem(["x", "y"])
    free.add_ge({"x": -1, "y": -1}, 1)
    assert feasible(free).feasible


def test_fractional_witness():
    system = LinearConstraintSystem(["x", "y"], nonnegative=True)
    system.add_eq([3, 0], 1)
    system.add_eq([1, -2], 0)
    result = feasible(system)
    assert result.witness == (Fraction(1, 3), Fraction(1, 6))


def test_unknown_nonnegative_variable():
    with pytest.raises(ValueError, match="Unknown variables"):
        LinearConstraintSystem(["x"], nonnegative=["y"])


def test_dump_and_parse():
    system = LinearConstraintSystem(["p", "q"], nonnegative=["q"])
    system.add_ge([1, Fraction(-1, 2)], 3)
    system.add_eq([0, 1], 1)
    parsed = LinearConstraintSystem.parse_dump(system.dump())
    assert parsed.variables == ("p", "q")
    assert parsed.nonnegative == frozenset({"q"})
    assert parsed.constraints == system.constraints


def test_parse_dump_rejects_bad_row():
    with pytest.raises(ParseError) as err:
        LinearConstraintSystem.parse_dump("1 2 >= 3\n1 >= 2\n")
    assert err.value.line == 2


def test_parse_dump_less_equal_rows():
    system = LinearConstraintSystem.parse_dump("1 <= 2\n")
    assert check_witness(system, [Fraction(-5)])
    assert not check_witness(system, [Fraction(3)])


def test_farkas_certificate_for_infeasible_system():
    system = LinearConstraintSystem(["x"], nonnegative=True)
    system.add_ge([-1], 1)
    multipliers = farkas_certificate(system)
    assert multipliers is not None
    assert check_farkas_certificate(system, multipliers)


def test_no_certificate_for_feasible_system():
    system = LinearConstraintSystem(["x"])
    system.add_ge([1], 1)
    assert farkas_certificate(system) is None


def _random_system(rng: random.Random) -> LinearConstraintSystem:
    width = rng.randint(1, 4)
    names = [f"v{i}" for i in range(width)]
    system = LinearConstraintSystem(names, rng.sample(names, rng.randint(0, width)))
    for _ in range(rng.randint(1, 6)):
        coefficients = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in names]
        bound = Fraction(rng.randint(-3, 3))
        if rng.random() < 0.2:
            system.add_eq(coefficients, bound)
        else:
            system.add_ge(coefficients, bound)
    return system


def test_simplex_agrees_with_fourier_motzkin():
    rng = random.Random(7)
    for _ in range(200):
        system = _random_system(rng)
        result = feasible(system)
        assert result.feasible == fourier_motzkin_feasible(system), system.dump()
        if result.feasible:
            assert check_witness(system, result.witness)
        else:
            assert check_farkas_certificate(system, farkas_certificate(system))


def test_witness_is_checked_before_it_is_returned(mocker):
    system = LinearConstraintSystem(["x"])
    system.add_ge([1], 1)
    mocker.patch.object(LinearConstraintSystem, "is_satisfied_by", return_value=False)
    with pytest.raises(WitnessError, match="substitution"):
        feasible(system)
