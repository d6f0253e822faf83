from fractions import Fraction as F

import pytest
from hypothesis import given

from crabmeet.core import CostModel, make_position_set
from crabmeet.errors import RangeTooLarge
from crabmeet.oracle import oracle_continuous_exact, oracle_continuous_linear, oracle_discrete_scan

from conftest import brute_fuel, position_lists

AOC = [16, 1, 2, 0, 4, 2, 7, 1, 2, 14]


@pytest.mark.parametrize(
    "values, x_star, fuel",
    [([0, 1, 1], F(5, 6), F(23, 24)), ([0, F(1, 3), F(1, 2)], F(1, 3), F(23, 72)), ([5], 5, 0)],
)
def test_continuous(values, x_star, fuel):
    res = oracle_continuous_exact(make_position_set(values))
    assert (res.x_star, res.fuel) == (x_star, fuel)


@pytest.mark.parametrize(
    "values, model, k, fuel",
    [(AOC, CostModel.TRIANGULAR, 5, 168), (AOC, CostModel.LINEAR, 2, 37), ([3, 3, 3], "triangular", 3, 0)],
)
def test_discrete_scan(values, model, k, fuel):
    res = oracle_discrete_scan(make_position_set(values), model)
    assert (res.x_star, res.fuel) == (k, fuel)


def test_scan_cap():
    ps = make_position_set([0, 10**8])
    with pytest.raises(RangeTooLarge):
        oracle_discrete_scan(ps)
    with pytest.raises(RangeTooLarge):
        oracle_discrete_scan(make_position_set([0, 100]), cap=50)


def test_scan_returns_smallest_argmin():
    assert oracle_discrete_scan(make_position_set([0, 1])).x_star == 0
    assert oracle_discrete_scan(make_position_set([0, 10]), "linear").x_star == 0


@given(position_lists)
def test_fuel_is_recomputed_directly(values):
    ps = make_position_set(values)
    res = oracle_continuous_exact(ps)
    assert res.fuel == brute_fuel(values, res.x_star)
    lin = oracle_continuous_linear(ps)
    assert lin.fuel == brute_fuel(values, lin.x_star, "linear")
