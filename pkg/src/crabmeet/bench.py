"""Instance generators and a timing harness.

    crabmeet-bench --kind uniform --sizes 65536,131072,262144 --reps 5
    crabmeet-bench --compare-backends --sizes 1048576

Rows go to stdout as CSV with header ``generator,n,phase,median_ns``.
"""
from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from . import _kernels, oracle
from .continuous import solve_bisection, solve_linear_scan
from .core import PositionSet, make_position_set
from .discrete import solve_discrete

KINDS = ("uniform", "two_cluster", "all_equal", "presorted_ramp")
HEADER = ("generator", "n", "phase", "median_ns")


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    value_range: tuple[int, int] = (0, 1000)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.n < 1:
            raise ValueError("n must be positive")
        lo, hi = self.value_range
        if lo > hi:
            raise ValueError("value_range must satisfy lo <= hi")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def generate_values(spec: GenSpec) -> list[int]:
    lo, hi = spec.value_range
    n = spec.n
    rng = np.random.default_rng(spec.seed)
    if spec.kind == "uniform":
        vals = rng.integers(lo, hi, size=n, endpoint=True)
    elif spec.kind == "two_cluster":
        width = (hi - lo) // 10
        left = (n + 1) // 2
        vals = np.concatenate([
            lo + rng.integers(0, width, size=left, endpoint=True),
            hi - rng.integers(0, width, size=n - left, endpoint=True),
        ])
        rng.shuffle(vals)
    elif spec.kind == "all_equal":
        vals = np.full(n, lo, dtype=np.int64)
    else:
        vals = np.linspace(lo, hi, n).round().astype(np.int64)
    return vals.tolist()


def generate(spec: GenSpec) -> PositionSet:
    return make_position_set(generate_values(spec))


def _median_ns(fn: Callable[[], object], repetitions: int) -> int:
    samples = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples))


def _construct(values: list[int]) -> PositionSet:
    ps = make_position_set(values)
    ps.stats, ps.scaled_array  # prefix sums and the int64 copy are part of setup
    return ps


def time_solvers(
    spec: GenSpec,
    repetitions: int = 5,
    oracle_max_n: int = 10**4,
    backend: Optional[str] = None,
) -> list[dict]:
    """Median wall time of each phase on one generated instance.

    Construction (sorting plus prefix sums) is timed apart from the solves.
    Oracle phases only run when ``n <= oracle_max_n``.
    """
    if repetitions < 3:
        raise ValueError("repetitions must be at least 3")
    values = generate_values(spec)
    ps = _construct(values)
    _kernels.warm_up()
    phases = [
        ("construct", lambda: _construct(values)),
        ("linear_scan", lambda: solve_linear_scan(ps, backend)),
        ("bisection", lambda: solve_bisection(ps)),
        ("discrete", lambda: solve_discrete(ps, backend=backend)),
    ]
    if spec.n <= oracle_max_n:
        phases += [
            ("oracle_continuous", lambda: oracle.oracle_continuous_exact(ps)),
            ("oracle_discrete", lambda: oracle.oracle_discrete_scan(ps)),
        ]
    return [
        {"generator": spec.kind, "n": spec.n, "phase": name, "median_ns": _median_ns(fn, repetitions)}
        for name, fn in phases
    ]


def compare_backends(spec: GenSpec, repetitions: int = 5, fraction_max_n: int = 2**16) -> list[dict]:
    """Time the linear scan under each backend on the same instance."""
    ps = _construct(generate_values(spec))
    _kernels.warm_up()
    backends = [b for b in _kernels.BACKENDS if b != "numba" or _kernels.NUMBA_AVAILABLE]
    if spec.n <= fraction_max_n:
        backends.append("fraction")
    rows = []
    for b in backends:
        solve_linear_scan(ps, b)
        rows.append({
            "generator": spec.kind,
            "n": spec.n,
            "phase": f"linear_scan[{b}]",
            "median_ns": _median_ns(lambda: solve_linear_scan(ps, b), repetitions),
        })
    return rows


def doubling_ratios(rows: Iterable[dict], phase: str) -> list[float]:
    """Consecutive time ratios for ``phase`` ordered by n."""
    pts = sorted((r["n"], r["median_ns"]) for r in rows if r["phase"] == phase)
    return [b[1] / max(a[1], 1) for a, b in zip(pts, pts[1:])]


def write_csv(rows: Iterable[dict], sink) -> None:
    writer = csv.DictWriter(sink, fieldnames=HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="crabmeet-bench", description=__doc__.split("\n")[0])
    p.add_argument("--kind", choices=KINDS, default="uniform")
    p.add_argument("--sizes", default=",".join(str(2**k) for k in range(16, 21)),
                   help="comma-separated instance sizes (default 2^16..2^20)")
    p.add_argument("--range", nargs=2, type=int, default=(0, 1000), metavar=("LO", "HI"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--oracle-max-n", type=int, default=10**4)
    p.add_argument("--compare-backends", action="store_true",
                   help="time the linear scan under numba, numpy and Fraction backends")
    args = p.parse_args(argv)

    rows = []
    for n in (int(s) for s in args.sizes.split(",") if s):
        spec = GenSpec(args.kind, n, tuple(args.range), args.seed)
        if args.compare_backends:
            rows += compare_backends(spec, args.reps)
        else:
            rows += time_solvers(spec, args.reps, args.oracle_max_n)
    write_csv(rows, sys.stdout)
    if not args.compare_backends:
        ratios = doubling_ratios(rows, "linear_scan")
        if ratios:
            print("# linear_scan doubling ratios: " + " ".join(f"{r:.2f}" for r in ratios), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
