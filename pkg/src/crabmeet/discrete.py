"""Integer meeting point: round the continuous optimum both ways, keep the cheaper."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .continuous import ContinuousReport, Strategy, solve_continuous
from .core import CostModel, PositionSet, median_interval, total_fuel
from .errors import NonIntegerInput


@dataclass(frozen=True)
class DiscreteReport:
    k_minus: int
    k_plus: int
    k_star: int
    fuel_minus: Fraction
    fuel_plus: Fraction
    fuel_star: Fraction
    tie: bool
    continuous: Optional[ContinuousReport] = None

    def __post_init__(self):
        assert self.k_star in (self.k_minus, self.k_plus)
        assert self.fuel_star == min(self.fuel_minus, self.fuel_plus)
        assert not (self.k_minus == self.k_plus and self.tie)


def _pick(k_minus: int, k_plus: int, fuel_minus: Fraction, fuel_plus: Fraction, tie: bool, continuous=None):
    if fuel_plus < fuel_minus:
        return DiscreteReport(k_minus, k_plus, k_plus, fuel_minus, fuel_plus, fuel_plus, tie, continuous)
    return DiscreteReport(k_minus, k_plus, k_minus, fuel_minus, fuel_plus, fuel_minus, tie, continuous)


def solve_discrete(
    ps: PositionSet,
    strategy: Strategy | str = Strategy.LINEAR_SCAN,
    backend: Optional[str] = None,
) -> DiscreteReport:
    """Best integer meeting point under triangular cost.

    Non-integer starting positions are allowed. On an exact tie between
    floor and ceiling the floor is returned and ``tie`` is set.
    """
    cont = solve_continuous(ps, strategy, backend)
    k_minus = math.floor(cont.x_star)
    k_plus = math.ceil(cont.x_star)
    fuel_minus = total_fuel(ps, k_minus, CostModel.TRIANGULAR)
    fuel_plus = fuel_minus if k_plus == k_minus else total_fuel(ps, k_plus, CostModel.TRIANGULAR)
    tie = k_minus != k_plus and fuel_minus == fuel_plus
    return _pick(k_minus, k_plus, fuel_minus, fuel_plus, tie, cont)


def solve_discrete_linear(ps: PositionSet) -> DiscreteReport:
    """Integer median under linear cost.

    ``k_minus``/``k_plus`` are the ends of the median interval. Every integer
    between them is optimal; the smaller one is returned and ``tie`` flags
    that the choice was not unique.
    """
    if ps.denominator != 1:
        bad = next(p for p in ps.positions if p.denominator != 1)
        raise NonIntegerInput(f"linear-cost integer solver needs integer positions, got {bad}")
    med = median_interval(ps)
    k_minus, k_plus = int(med.lo), int(med.hi)
    fuel_minus = total_fuel(ps, k_minus, CostModel.LINEAR)
    fuel_plus = total_fuel(ps, k_plus, CostModel.LINEAR)
    return _pick(k_minus, k_plus, fuel_minus, fuel_plus, k_minus != k_plus)
