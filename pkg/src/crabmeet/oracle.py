"""Brute-force reference solvers.

Nothing here touches the prefix sums, the imbalance helpers or the cost
model of :mod:`crabmeet.core`; means, imbalances and fuels are recomputed by
direct summation so a bug in the fast path cannot hide in its own check.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import RangeTooLarge

DEFAULT_SCAN_CAP = 10**7


@dataclass(frozen=True)
class OracleResult:
    x_star: Fraction
    fuel: Fraction


class _Grouped:
    """Distinct positions as integers over one denominator, with multiplicities."""

    def __init__(self, values):
        self.counts = counts = Counter(values)
        self.denominator = math.lcm(*(v.denominator for v in counts))
        self.items = [(v.numerator * (self.denominator // v.denominator), c) for v, c in counts.items()]
        self.distinct = sorted(counts)

    def fuel(self, x: Fraction, model: str) -> Fraction:
        # distance to position i is |a*D - p_i*b| / (b*D) for x = a/b
        a, b = x.numerator, x.denominator
        scale = b * self.denominator
        aD = a * self.denominator
        if model == "linear":
            return Fraction(sum(c * abs(aD - p * b) for p, c in self.items), scale)
        acc = 0
        for p, c in self.items:
            e = abs(aD - p * b)
            acc += c * (e * e + e * scale)
        return Fraction(acc, 2 * scale * scale)


def _model_name(model) -> str:
    return getattr(model, "value", model)


def oracle_continuous_exact(ps) -> OracleResult:
    """Minimize triangular fuel over every piece of the piecewise-quadratic objective.

    Candidates are the distinct positions plus, for each gap between
    neighbours, the vertex of the gap's quadratic clamped into the gap.
    """
    values = list(ps.positions)
    n = len(values)
    group = _Grouped(values)
    xbar = sum(values, Fraction(0)) / n
    distinct = group.distinct
    candidates = list(distinct)
    for a, b in zip(distinct, distinct[1:]):
        inside = (a + b) / 2
        left = sum(c for v, c in group.counts.items() if v < inside)
        right = sum(c for v, c in group.counts.items() if v > inside)
        imbalance = left - right
        vertex = xbar - Fraction(imbalance, 2 * n)
        candidates.append(min(max(vertex, a), b))
    best_x, best_fuel = None, None
    for x in candidates:
        fuel = group.fuel(x, "triangular")
        if best_fuel is None or fuel < best_fuel or (fuel == best_fuel and x < best_x):
            best_x, best_fuel = x, fuel
    return OracleResult(best_x, best_fuel)


def oracle_continuous_linear(ps) -> OracleResult:
    """Smallest minimizer of linear fuel; some starting position always attains it."""
    group = _Grouped(ps.positions)
    best_x, best_fuel = None, None
    for x in group.distinct:
        fuel = group.fuel(x, "linear")
        if best_fuel is None or fuel < best_fuel:
            best_x, best_fuel = x, fuel
    return OracleResult(best_x, best_fuel)


def oracle_discrete_scan(ps, model="triangular", cap: int = DEFAULT_SCAN_CAP) -> OracleResult:
    """Evaluate fuel at every integer between the extreme positions.

    Returns the smallest integer attaining the minimum.
    """
    model = _model_name(model)
    values = list(ps.positions)
    lo = math.floor(min(values))
    hi = math.ceil(max(values))
    if hi - lo + 1 > cap:
        raise RangeTooLarge(f"{hi - lo + 1} integer candidates exceed the cap of {cap}")
    group = _Grouped(values)
    best_k, best_fuel = None, None
    for k in range(lo, hi + 1):
        fuel = group.fuel(Fraction(k), model)
        if best_fuel is None or fuel < best_fuel:
            best_k, best_fuel = k, fuel
    return OracleResult(Fraction(best_k), best_fuel)
