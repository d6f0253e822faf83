"""Command-line front end.

    crabmeet input.txt --mode both --verify --format json
    echo 16,1,2,0,4,2,7,1,2,14 | crabmeet - --mode discrete

Exit status: 0 on success, 1 on parse or usage errors, 2 when ``--verify``
finds a disagreement with the brute-force oracle.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, TextIO

from . import oracle
from .continuous import AtStartingPoint, BetweenPoints, Case, LeftOfAll, RightOfAll, solve_continuous
from .core import (
    CostModel,
    PositionSet,
    linear_subgradient,
    make_position_set,
    median_interval,
    total_fuel,
)
from .discrete import solve_discrete, solve_discrete_linear
from .errors import CrabMeetError, EmptyInput, ParseError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2

_SEPARATORS = re.compile(r"\s*,\s*|\s+")
_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)")


@dataclass
class RunConfig:
    mode: str = "both"
    cost: str = "triangular"
    strategy: str = "scan"
    verify: bool = False
    curve_output: Optional[str] = None
    curve_samples: int = 400
    output_format: str = "text"
    input_source: str = "-"
    backend: Optional[str] = None
    fast_paths: bool = False

    def __post_init__(self):
        if self.mode not in ("continuous", "discrete", "both"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.cost not in ("triangular", "linear"):
            raise ValueError(f"unknown cost {self.cost!r}")
        if self.strategy not in ("scan", "bisection"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown format {self.output_format!r}")
        if self.curve_output is not None and self.curve_samples < 2:
            raise ValueError("--samples must be at least 2")


def parse_positions(raw: str) -> PositionSet:
    """Parse comma and/or whitespace separated integers and decimals exactly."""
    text = raw.strip()
    if not text:
        raise EmptyInput("no positions in input")
    values = []
    for i, token in enumerate(_SEPARATORS.split(text), start=1):
        if not _NUMBER.fullmatch(token):
            raise ParseError(token, i)
        values.append(Fraction(token))
    return make_position_set(values)


def format_decimal(q: Fraction) -> str:
    # shortest repr of the nearest double; the exact value travels as p/q
    return repr(float(q))


def emit_curve(ps: PositionSet, model: CostModel, samples: int, sink: TextIO) -> None:
    """Write total fuel sampled on a uniform grid around the positions as ``x,y`` CSV."""
    if samples < 2:
        raise ValueError("samples must be at least 2")
    span = ps.max - ps.min
    margin = span / 4 if span else Fraction(1)
    start = ps.min - margin
    step = (ps.max + margin - start) / (samples - 1)
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["x", "y"])
    for j in range(samples):
        x = start + j * step
        writer.writerow([format_decimal(x), format_decimal(total_fuel(ps, x, model))])


def _case_json(case: Case) -> dict:
    if isinstance(case, AtStartingPoint):
        return {"kind": "AtStartingPoint", "index": case.index}
    if isinstance(case, BetweenPoints):
        return {"kind": "BetweenPoints", "left": case.left, "right": case.right}
    if isinstance(case, LeftOfAll):
        return {"kind": "LeftOfAll"}
    if isinstance(case, RightOfAll):
        return {"kind": "RightOfAll"}
    raise TypeError(case)


def _case_text(case: Case) -> str:
    fields = _case_json(case)
    kind = fields.pop("kind")
    return f"{kind}({', '.join(str(v) for v in fields.values())})" if fields else kind


def _put(out: dict, key: str, q: Optional[Fraction]) -> None:
    out[key] = None if q is None else str(q)
    out[f"{key}_decimal"] = None if q is None else float(q)


def solve_for_config(ps: PositionSet, config: RunConfig) -> dict:
    """Run the requested solvers and collect every reported quantity.

    Rationals are kept as Fractions here; rendering happens in the emitters.
    """
    model = CostModel(config.cost)
    result = {
        "n": ps.n,
        "mean": ps.stats.mean,
        "x_star": None,
        "case": None,
        "certificate": None,
        "continuous_fuel": None,
        "k_minus": None,
        "k_plus": None,
        "k_star": None,
        "fuel_star": None,
        "tie": None,
        "verified": None,
    }
    if config.mode in ("continuous", "both"):
        if model is CostModel.TRIANGULAR:
            rep = solve_continuous(ps, config.strategy, config.backend, config.fast_paths)
            x, case, cert = rep.x_star, rep.case, rep.certificate
        else:
            x = median_interval(ps).lo
            case = AtStartingPoint(bisect_left(ps.positions, x) + 1)
            cert = linear_subgradient(ps, x)
        result.update(x_star=x, case=case, certificate=cert, continuous_fuel=total_fuel(ps, x, model))
    if config.mode in ("discrete", "both"):
        if model is CostModel.TRIANGULAR:
            d = solve_discrete(ps, config.strategy, config.backend)
        else:
            d = solve_discrete_linear(ps)
        result.update(k_minus=d.k_minus, k_plus=d.k_plus, k_star=d.k_star, fuel_star=d.fuel_star, tie=d.tie)
    if config.verify:
        result["verified"] = verify(ps, result, model)
    return result


def verify(ps: PositionSet, result: dict, model: CostModel) -> bool:
    ok = True
    if result["x_star"] is not None:
        ref = (oracle.oracle_continuous_exact if model is CostModel.TRIANGULAR else oracle.oracle_continuous_linear)(ps)
        ok &= ref.x_star == result["x_star"] and ref.fuel == result["continuous_fuel"]
        ok &= 0 in result["certificate"]
    if result["k_star"] is not None:
        ref = oracle.oracle_discrete_scan(ps, model)
        ok &= ref.fuel == result["fuel_star"]
        ok &= result["tie"] or ref.x_star == result["k_star"]
    return bool(ok)


def render_json(result: dict, config: RunConfig) -> str:
    out: dict = {"mode": config.mode, "cost": config.cost, "n": result["n"]}
    _put(out, "mean", result["mean"])
    _put(out, "x_star", result["x_star"])
    out["case"] = None if result["case"] is None else _case_json(result["case"])
    cert = result["certificate"]
    if cert is None:
        out["certificate"] = None
    else:
        out["certificate"] = {}
        _put(out["certificate"], "lo", cert.lo)
        _put(out["certificate"], "hi", cert.hi)
    _put(out, "continuous_fuel", result["continuous_fuel"])
    for key in ("k_minus", "k_plus", "k_star"):
        out[key] = result[key]
    _put(out, "fuel_star", result["fuel_star"])
    out["tie"] = result["tie"]
    out["verified"] = result["verified"]
    return json.dumps(out, indent=2) + "\n"


def _exact_and_decimal(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q)
    return f"{q} ({format_decimal(q)})"


def render_text(result: dict) -> str:
    lines = [f"n           {result['n']}", f"mean        {_exact_and_decimal(result['mean'])}"]
    if result["x_star"] is not None:
        lines += [
            f"x*          {_exact_and_decimal(result['x_star'])}",
            f"case        {_case_text(result['case'])}",
            f"certificate {result['certificate']}",
            f"fuel(x*)    {_exact_and_decimal(result['continuous_fuel'])}",
        ]
    if result["k_star"] is not None:
        lines += [
            f"k-, k+      {result['k_minus']}, {result['k_plus']}",
            f"k*          {result['k_star']}",
            f"fuel(k*)    {_exact_and_decimal(result['fuel_star'])}",
            f"tie         {'yes' if result['tie'] else 'no'}",
        ]
    if result["verified"] is not None:
        lines.append(f"verified    {'yes' if result['verified'] else 'NO'}")
    return "\n".join(lines) + "\n"


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def run(config: RunConfig, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        ps = parse_positions(_read_input(config.input_source))
        result = solve_for_config(ps, config)
        if config.curve_output:
            with open(config.curve_output, "w", encoding="utf-8", newline="") as sink:
                emit_curve(ps, CostModel(config.cost), config.curve_samples, sink)
    except (CrabMeetError, OSError, ValueError) as exc:
        print(f"crabmeet: error: {exc}", file=stderr)
        return EXIT_USAGE
    if config.output_format == "json":
        stdout.write(render_json(result, config))
    else:
        stdout.write(render_text(result))
    if result["verified"] is False:
        print("crabmeet: verification against the oracle failed", file=stderr)
        return EXIT_MISMATCH
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crabmeet", description="Fuel-optimal meeting point of agents on a line.")
    p.add_argument("input", nargs="?", default="-", help='positions file, or "-" for stdin (default)')
    p.add_argument("--mode", choices=("continuous", "discrete", "both"), default="both")
    p.add_argument("--cost", choices=("triangular", "linear"), default="triangular")
    p.add_argument("--strategy", choices=("scan", "bisection"), default="scan")
    p.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--curve", metavar="FILE", help="write the fuel curve as x,y CSV")
    p.add_argument("--samples", metavar="K", type=int, default=400, help="curve sample count (default 400)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--backend", choices=("numba", "numpy", "fraction"),
                   help="linear-scan backend (default from CRABMEET_BACKEND)")
    p.add_argument("--fast-paths", action="store_true", help="try the mean/median shortcuts first")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            mode=args.mode,
            cost=args.cost,
            strategy=args.strategy,
            verify=args.verify,
            curve_output=args.curve,
            curve_samples=args.samples,
            output_format=args.format,
            input_source=args.input,
            backend=args.backend,
            fast_paths=args.fast_paths,
        )
    except ValueError as exc:
        print(f"crabmeet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
