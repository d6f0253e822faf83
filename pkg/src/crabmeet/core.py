"""Exact problem representation, fuel evaluation and the statistics the solvers share.

Every real-valued quantity is a :class:`fractions.Fraction`. Positions are also
kept as integer numerators over a common denominator so that prefix sums stay in
plain ``int`` arithmetic and the scan kernels can run on ``int64`` arrays.
"""
from __future__ import annotations

import enum
import math
import numbers
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from functools import cached_property
from itertools import accumulate
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import EmptyInput

Rational = Fraction
RationalLike = Union[Fraction, int, str, Decimal]

# numerators beyond this are never packed into int64 arrays
_INT64_SAFE = 2**62


def to_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Integers, Fractions, finite Decimals and strings such as ``"-3"``, ``"0.25"``
    or ``"1/3"`` are accepted. Floats are rejected: most decimal literals have
    no exact binary representation, so silently converting them would change the
    problem being solved.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not positions")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"non-finite position {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


@dataclass(frozen=True)
class Interval:
    """Closed rational interval ``[lo, hi]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


class CostModel(enum.Enum):
    """Per-agent fuel as a function of distance travelled."""

    TRIANGULAR = "triangular"
    LINEAR = "linear"

    def fuel(self, distance: Fraction) -> Fraction:
        if self is CostModel.TRIANGULAR:
            return distance * (distance + 1) / 2
        return distance


@dataclass(frozen=True)
class ProblemStats:
    """Sums over the sorted positions, stored as integers over ``denominator``.

    ``scaled_prefix[k]`` is ``denominator * (x_1 + ... + x_k)``; the sum of
    squares is scaled by ``denominator**2``.
    """

    mean: Fraction
    n: int
    denominator: int
    scaled_prefix: Sequence[int] = field(repr=False)
    scaled_sum_squares: int = field(repr=False)

    def __post_init__(self):
        if self.mean * self.n != self.prefix_sum(self.n):
            raise ValueError("mean is inconsistent with the prefix sums")

    def prefix_sum(self, k: int) -> Fraction:
        return Fraction(self.scaled_prefix[k], self.denominator)

    @property
    def prefix_sums(self) -> list[Fraction]:
        """Cumulative sums ``[x_1, x_1 + x_2, ..., x_1 + ... + x_N]``."""
        return [Fraction(s, self.denominator) for s in self.scaled_prefix[1:]]

    @property
    def total(self) -> Fraction:
        return self.prefix_sum(self.n)

    @property
    def sum_squares(self) -> Fraction:
        return Fraction(self.scaled_sum_squares, self.denominator**2)


@dataclass(frozen=True)
class PositionSet:
    """Sorted multiset of starting positions.

    Build one with :func:`make_position_set` when the input is unsorted; the
    constructor itself only validates.
    """

    positions: tuple[Fraction, ...]
    n: int = field(init=False)
    denominator: int = field(init=False, repr=False, compare=False)
    scaled: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        positions = tuple(to_rational(p) for p in self.positions)
        if not positions:
            raise EmptyInput("at least one starting position is required")
        denominator, scaled = _common_denominator(positions)
        if any(a > b for a, b in zip(scaled, scaled[1:])):
            raise ValueError("positions must be sorted ascending; use make_position_set")
        self._fill(positions, denominator, scaled)

    def _fill(self, positions, denominator, scaled):
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "n", len(positions))
        object.__setattr__(self, "denominator", denominator)
        object.__setattr__(self, "scaled", scaled)

    @classmethod
    def _trusted(cls, positions, denominator, scaled) -> "PositionSet":
        ps = object.__new__(cls)
        ps._fill(positions, denominator, scaled)
        return ps

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.positions)

    def __getitem__(self, i):
        return self.positions[i]

    @property
    def min(self) -> Fraction:
        return self.positions[0]

    @property
    def max(self) -> Fraction:
        return self.positions[-1]

    @cached_property
    def stats(self) -> ProblemStats:
        prefix = list(accumulate(self.scaled, initial=0))
        return ProblemStats(
            mean=Fraction(prefix[-1], self.denominator * self.n),
            n=self.n,
            denominator=self.denominator,
            scaled_prefix=prefix,
            scaled_sum_squares=sum(s * s for s in self.scaled),
        )

    @cached_property
    def scaled_array(self) -> np.ndarray | None:
        """``int64`` copy of the scaled numerators, or None if they do not fit."""
        if max(-self.scaled[0], self.scaled[-1]) >= _INT64_SAFE:
            return None
        arr = np.array(self.scaled, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    def shifted(self, offset: RationalLike) -> "PositionSet":
        c = to_rational(offset)
        return PositionSet(tuple(p + c for p in self.positions))


def _common_denominator(positions: Sequence[Fraction]) -> tuple[int, tuple[int, ...]]:
    denominator = math.lcm(*{p.denominator for p in positions})
    if denominator == 1:
        return 1, tuple(p.numerator for p in positions)
    return denominator, tuple(p.numerator * (denominator // p.denominator) for p in positions)


def make_position_set(values: Iterable[RationalLike]) -> PositionSet:
    """Validate and sort ``values`` (ascending; duplicates kept)."""
    fracs = [to_rational(v) for v in values]
    if not fracs:
        raise EmptyInput("at least one starting position is required")
    denominator, scaled = _common_denominator(fracs)
    if max(map(abs, (min(scaled), max(scaled)))) < _INT64_SAFE:
        order = np.argsort(np.array(scaled, dtype=np.int64), kind="stable").tolist()
    else:
        order = sorted(range(len(scaled)), key=scaled.__getitem__)
    return PositionSet._trusted(
        tuple(fracs[i] for i in order), denominator, tuple(scaled[i] for i in order)
    )


def problem_stats(ps: PositionSet) -> ProblemStats:
    return ps.stats


def mean(ps: PositionSet) -> Fraction:
    return ps.stats.mean


def count_imbalance(ps: PositionSet, x: RationalLike) -> int:
    """Number of positions strictly left of ``x`` minus the number strictly right."""
    x = to_rational(x)
    left = bisect_left(ps.positions, x)
    right = ps.n - bisect_right(ps.positions, x)
    return left - right


def multiplicity(ps: PositionSet, x: RationalLike) -> int:
    x = to_rational(x)
    return bisect_right(ps.positions, x) - bisect_left(ps.positions, x)


def total_fuel(ps: PositionSet, x: RationalLike, cm: CostModel = CostModel.TRIANGULAR) -> Fraction:
    """Total fuel of all agents meeting at ``x``, in O(log N) via prefix sums."""
    x = to_rational(x)
    st = ps.stats
    k = bisect_left(ps.positions, x)
    left_sum = st.prefix_sum(k)
    abs_sum = (k * x - left_sum) + (st.total - left_sum) - (ps.n - k) * x
    if cm is CostModel.LINEAR:
        return abs_sum
    square_sum = ps.n * x * x - 2 * x * st.total + st.sum_squares
    return (square_sum + abs_sum) / 2


def total_fuel_direct(ps: PositionSet, x: RationalLike, cm: CostModel = CostModel.TRIANGULAR) -> Fraction:
    """Same as :func:`total_fuel` by plain O(N) summation."""
    x = to_rational(x)
    return sum((cm.fuel(abs(x - p)) for p in ps.positions), Fraction(0))


def normalized_cost(ps: PositionSet, x: RationalLike) -> Fraction:
    """Triangular total fuel divided by N (the objective whose minimizer is sought)."""
    return total_fuel(ps, x, CostModel.TRIANGULAR) / ps.n


def subgradient(ps: PositionSet, x: RationalLike) -> Interval:
    """Subdifferential of :func:`normalized_cost` at ``x``.

    At a position of multiplicity m the interval has width m/N; elsewhere it is
    a single point.
    """
    x = to_rational(x)
    lo_idx = bisect_left(ps.positions, x)
    hi_idx = bisect_right(ps.positions, x)
    m = hi_idx - lo_idx
    imbalance = lo_idx - (ps.n - hi_idx)
    base = x - ps.stats.mean
    two_n = 2 * ps.n
    return Interval(base + Fraction(imbalance - m, two_n), base + Fraction(imbalance + m, two_n))


def linear_subgradient(ps: PositionSet, x: RationalLike) -> Interval:
    """Subdifferential of the linear-cost total fuel divided by N."""
    x = to_rational(x)
    lo_idx = bisect_left(ps.positions, x)
    hi_idx = bisect_right(ps.positions, x)
    m = hi_idx - lo_idx
    imbalance = lo_idx - (ps.n - hi_idx)
    return Interval(Fraction(imbalance - m, ps.n), Fraction(imbalance + m, ps.n))


def median_interval(ps: PositionSet) -> Interval:
    """Closed interval of medians, taken from the middle order statistics."""
    n = ps.n
    if n % 2:
        mid = ps.positions[n // 2]
        return Interval(mid, mid)
    return Interval(ps.positions[n // 2 - 1], ps.positions[n // 2])
