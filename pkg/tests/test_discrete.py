import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crabmeet.core import CostModel, make_position_set, total_fuel
from crabmeet.discrete import solve_discrete, solve_discrete_linear
from crabmeet.errors import NonIntegerInput

from conftest import brute_integer_argmin, position_lists

AOC = [16, 1, 2, 0, 4, 2, 7, 1, 2, 14]


@pytest.mark.parametrize(
    "values, k_star, fuel, tie",
    [
        ([0, 1, 1], 1, 1, False),
        (AOC, 5, 168, False),
        ([7], 7, 0, False),
        ([0, 1], 0, 1, True),
    ],
)
def test_triangular_goldens(values, k_star, fuel, tie):
    rep = solve_discrete(make_position_set(values))
    assert (rep.k_star, rep.fuel_star, rep.tie) == (k_star, fuel, tie)


def test_report_fields_for_example3():
    rep = solve_discrete(make_position_set([0, 1, 1]))
    assert (rep.k_minus, rep.k_plus) == (0, 1)
    assert (rep.fuel_minus, rep.fuel_plus) == (2, 1)
    assert rep.continuous.x_star == F(5, 6)


@pytest.mark.parametrize(
    "values, k_star, fuel, tie",
    [(AOC, 2, 37, False), ([7], 7, 0, False), ([0, 10], 0, 10, True)],
)
def test_linear_goldens(values, k_star, fuel, tie):
    rep = solve_discrete_linear(make_position_set(values))
    assert (rep.k_star, rep.fuel_star, rep.tie) == (k_star, fuel, tie)


def test_linear_rejects_fractions():
    with pytest.raises(NonIntegerInput):
        solve_discrete_linear(make_position_set([0, F(1, 2)]))


@given(position_lists)
def test_matches_brute_force(values):
    ps = make_position_set(values)
    rep = solve_discrete(ps)
    k, fuel = brute_integer_argmin(values)
    assert rep.fuel_star == fuel
    assert rep.k_star == k or rep.tie


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=25))
def test_linear_matches_brute_force(ints):
    rep = solve_discrete_linear(make_position_set(ints))
    k, fuel = brute_integer_argmin(ints, "linear")
    assert (rep.k_star, rep.fuel_star) == (k, fuel)


@given(position_lists)
def test_relaxation_bound(values):
    ps = make_position_set(values)
    rep = solve_discrete(ps)
    x = rep.continuous.x_star
    cont = total_fuel(ps, x)
    assert rep.fuel_star >= cont
    assert (rep.fuel_star == cont) == (x.denominator == 1)


@given(position_lists)
def test_monotone_flanks(values):
    ps = make_position_set(values)
    rep = solve_discrete(ps)
    right = [total_fuel(ps, rep.k_plus + j) for j in range(6)]
    left = [total_fuel(ps, rep.k_minus - j) for j in range(6)]
    assert right == sorted(right)
    assert left == sorted(left)


@given(position_lists, st.sampled_from(["scan", "bisection"]))
def test_strategy_does_not_matter(values, strategy):
    ps = make_position_set(values)
    assert solve_discrete(ps, strategy).k_star == solve_discrete(ps).k_star


def test_integral_optimum_has_single_candidate():
    rep = solve_discrete(make_position_set([3, 3, 3]))
    assert rep.k_minus == rep.k_plus == rep.k_star == 3
    assert not rep.tie
    assert math.isclose(rep.fuel_star, 0)
