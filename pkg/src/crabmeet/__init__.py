"""Exact fuel-optimal meeting points for agents on a line.

Each agent pays ``d*(d+1)/2`` fuel to travel distance ``d`` (or ``d`` under
the linear model). All arithmetic is done on :class:`fractions.Fraction`.
"""
from .continuous import (
    AtStartingPoint,
    BetweenPoints,
    ContinuousReport,
    LeftOfAll,
    RightOfAll,
    Strategy,
    condition_at_point,
    corollary_mean_fast_path,
    corollary_median_fast_path,
    solve_bisection,
    solve_continuous,
    solve_linear_scan,
)
from .core import (
    CostModel,
    Interval,
    PositionSet,
    ProblemStats,
    count_imbalance,
    make_position_set,
    mean,
    median_interval,
    normalized_cost,
    problem_stats,
    subgradient,
    total_fuel,
    total_fuel_direct,
)
from .discrete import DiscreteReport, solve_discrete, solve_discrete_linear
from .errors import (
    CrabMeetError,
    EmptyInput,
    IndexOutOfRange,
    NonIntegerInput,
    ParseError,
    RangeTooLarge,
    SolverDefect,
)
from .oracle import OracleResult, oracle_continuous_exact, oracle_discrete_scan

__version__ = "0.1.0"
