"""Cross-checks of the fast solvers against each other and the oracles."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from . import oracle
from .continuous import (
    corollary_mean_fast_path,
    corollary_median_fast_path,
    solve_bisection,
    solve_linear_scan,
)
from .core import CostModel, PositionSet, subgradient, total_fuel
from .discrete import solve_discrete


def check_instance(ps: PositionSet, shifts: Iterable[Fraction] = (), backend=None) -> list[str]:
    """Return a description of every failed check (empty when all pass)."""
    failures = []
    scan = solve_linear_scan(ps, backend)
    bis = solve_bisection(ps)
    ref = oracle.oracle_continuous_exact(ps)
    x = scan.x_star
    if bis.x_star != x:
        failures.append(f"bisection {bis.x_star} != scan {x}")
    if bis.case != scan.case:
        failures.append(f"bisection case {bis.case} != scan case {scan.case}")
    if ref.x_star != x:
        failures.append(f"oracle {ref.x_star} != scan {x}")
    if ref.fuel != total_fuel(ps, x):
        failures.append(f"oracle fuel {ref.fuel} != {total_fuel(ps, x)}")
    if 0 not in subgradient(ps, x):
        failures.append(f"0 not in subgradient at {x}")
    if abs(x - ps.stats.mean) > Fraction(1, 2):
        failures.append(f"x* {x} farther than 1/2 from mean {ps.stats.mean}")
    for name, fast in (("mean", corollary_mean_fast_path), ("median", corollary_median_fast_path)):
        y = fast(ps)
        if y is not None and y != x:
            failures.append(f"{name} fast path {y} != {x}")
    for c in shifts:
        moved = solve_linear_scan(ps.shifted(c), backend).x_star
        if moved != x + c:
            failures.append(f"shift by {c}: {moved} != {x + c}")
    disc = solve_discrete(ps, backend=backend)
    dref = oracle.oracle_discrete_scan(ps, CostModel.TRIANGULAR)
    if disc.fuel_star != dref.fuel:
        failures.append(f"discrete fuel {disc.fuel_star} != oracle {dref.fuel}")
    elif disc.k_star != dref.x_star and not disc.tie:
        failures.append(f"discrete k* {disc.k_star} != oracle {dref.x_star} without a tie")
    return failures
