"""Exact minimizer of the triangular-cost meeting problem on the real line.

Indices in reports are 1-based positions in the sorted :class:`PositionSet`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import _kernels
from .core import (
    Interval,
    PositionSet,
    ProblemStats,
    count_imbalance,
    median_interval,
    multiplicity,
    subgradient,
)
from .errors import IndexOutOfRange, SolverDefect


@dataclass(frozen=True)
class AtStartingPoint:
    index: int


@dataclass(frozen=True)
class BetweenPoints:
    left: int
    right: int


@dataclass(frozen=True)
class LeftOfAll:
    pass


@dataclass(frozen=True)
class RightOfAll:
    pass


Case = Union[AtStartingPoint, BetweenPoints, LeftOfAll, RightOfAll]


class Strategy(enum.Enum):
    LINEAR_SCAN = "scan"
    BISECTION = "bisection"
    COROLLARY_MEAN = "corollary-mean"
    COROLLARY_MEDIAN = "corollary-median"


@dataclass(frozen=True)
class ContinuousReport:
    x_star: Fraction
    case: Case
    certificate: Interval
    strategy: Strategy


def _report(ps: PositionSet, x: Fraction, case: Case, strategy: Strategy) -> ContinuousReport:
    cert = subgradient(ps, x)
    if 0 not in cert:
        raise SolverDefect(f"{strategy.value} returned {x} but its subgradient {cert} excludes 0")
    if abs(x - ps.stats.mean) > Fraction(1, 2):
        raise SolverDefect(f"{strategy.value} returned {x}, farther than 1/2 from the mean")
    return ContinuousReport(x, case, cert, strategy)


def condition_at_point(ps: PositionSet, stats: ProblemStats, t: int) -> bool:
    """Whether the starting point with 1-based index ``t`` is certified optimal.

    The imbalance term is the scan's running value at index ``t``, which
    counts earlier duplicates as left of ``x_t`` and later ones as right.
    """
    if not 1 <= t <= ps.n:
        raise IndexOutOfRange(f"index {t} outside 1..{ps.n}")
    two_n = 2 * ps.n
    d = Fraction(2 * t - 1 - ps.n, two_n)
    return abs(ps.positions[t - 1] - stats.mean + d) <= Fraction(1, two_n)


def _scan_fractions(ps: PositionSet) -> tuple[Fraction, Case]:
    xs = ps.positions
    n = ps.n
    xbar = ps.stats.mean
    step = Fraction(1, 2 * n)
    d = Fraction(-1, 2)
    x = xbar - d
    if x < xs[0]:
        raise SolverDefect("leading guard fired: candidate left of all positions")
    for i in range(n):
        d += step
        if abs(xs[i] - xbar + d) <= step:
            return xs[i], AtStartingPoint(i + 1)
        d += step
        x = xbar - d
        if xs[i] <= x:
            if i == n - 1:
                return x, RightOfAll()
            if x <= xs[i + 1]:
                return x, BetweenPoints(i + 1, i + 2)
    raise SolverDefect(f"linear scan found no certified point for {n} positions")


def _scan_scaled(ps: PositionSet, backend: str) -> Optional[tuple[Fraction, Case]]:
    arr = ps.scaled_array
    if arr is None:
        return None
    max_abs = max(-ps.scaled[0], ps.scaled[-1])
    if not _kernels.fits_int64(ps.n, max_abs, ps.denominator):
        return None
    total = ps.stats.scaled_prefix[-1]
    kind, i, scaled_x = _kernels.scan(arr, ps.denominator, total, backend)
    x = Fraction(scaled_x, 2 * ps.n * ps.denominator)
    if kind == _kernels.AT_POINT:
        return x, AtStartingPoint(i + 1)
    if kind == _kernels.IN_GAP:
        return x, BetweenPoints(i + 1, i + 2)
    if kind == _kernels.RIGHT_OF_ALL:
        return x, RightOfAll()
    if kind == _kernels.LEFT_OF_ALL:
        raise SolverDefect("leading guard fired: candidate left of all positions")
    raise SolverDefect(f"linear scan found no certified point for {ps.n} positions")


def solve_linear_scan(ps: PositionSet, backend: Optional[str] = None) -> ContinuousReport:
    """Walk the sorted positions and return the first certified optimum.

    ``backend`` is ``"numba"``, ``"numpy"`` or ``"fraction"``; the integer
    backends are used only when the scaled positions fit int64, otherwise the
    Fraction loop runs.
    """
    backend = backend or _kernels.default_backend()
    found = None
    if backend != "fraction":
        found = _scan_scaled(ps, backend)
    if found is None:
        found = _scan_fractions(ps)
    return _report(ps, *found, Strategy.LINEAR_SCAN)


def solve_bisection(ps: PositionSet) -> ContinuousReport:
    """Binary search for the optimum using the monotone subgradient.

    ``h(t) = x_t - mean + (2t - N)/(2N)`` is the right end of the scan's
    interval at index ``t``; it grows by at least 1/N per index. The optimum
    sits at the first ``t`` with ``h(t) >= 0`` or in the gap just before it.
    """
    xs = ps.positions
    n = ps.n
    xbar = ps.stats.mean
    two_n = 2 * n

    def h(t: int) -> Fraction:
        return xs[t - 1] - xbar + Fraction(2 * t - n, two_n)

    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi) // 2
        if h(mid) >= 0:
            hi = mid
        else:
            lo = mid + 1
    t = lo
    slack = h(t) - Fraction(1, n)
    if slack < 0 or (slack == 0 and t == 1):
        return _report(ps, xs[t - 1], AtStartingPoint(t), Strategy.BISECTION)
    if t == 1:
        raise SolverDefect("bisection landed left of all positions")
    x = xbar - Fraction(2 * (t - 1) - n, two_n)
    return _report(ps, x, BetweenPoints(t - 1, t), Strategy.BISECTION)


def corollary_mean_fast_path(ps: PositionSet) -> Optional[Fraction]:
    """The mean, if it is a median that no agent starts at."""
    xbar = ps.stats.mean
    if xbar in median_interval(ps) and multiplicity(ps, xbar) == 0:
        return xbar
    return None


def corollary_median_fast_path(ps: PositionSet) -> Optional[Fraction]:
    """A starting position with zero count imbalance lying within 1/(2N) of the mean.

    Only positions with balanced counts qualify. For even N the lower and
    upper order statistics are not balanced, and accepting them here would
    certify non-optimal points (e.g. 0 for ``[0, 2/5]``).
    """
    xbar = ps.stats.mean
    med = median_interval(ps)
    for candidate in dict.fromkeys((med.lo, med.hi)):
        if count_imbalance(ps, candidate) == 0 and abs(candidate - xbar) <= Fraction(1, 2 * ps.n):
            return candidate
    return None


def solve_continuous(
    ps: PositionSet,
    strategy: Union[Strategy, str] = Strategy.LINEAR_SCAN,
    backend: Optional[str] = None,
    use_fast_paths: bool = False,
) -> ContinuousReport:
    """Dispatch to a solver; fast paths, when requested, are cross-checked."""
    strategy = Strategy(strategy)
    if strategy is Strategy.BISECTION:
        report = solve_bisection(ps)
    elif strategy is Strategy.LINEAR_SCAN:
        report = solve_linear_scan(ps, backend)
    else:
        raise ValueError(f"{strategy} is not a standalone strategy")
    if not use_fast_paths:
        return report
    for fast, tag in (
        (corollary_mean_fast_path, Strategy.COROLLARY_MEAN),
        (corollary_median_fast_path, Strategy.COROLLARY_MEDIAN),
    ):
        x = fast(ps)
        if x is None:
            continue
        if x != report.x_star:
            raise SolverDefect(f"{tag.value} gave {x}, full solver gave {report.x_star}")
        return _report(ps, x, report.case, tag)
    return report
