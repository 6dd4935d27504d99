"""Command-line interface.

Subcommands
-----------
solve     solve a preset for one or more epsilon values, emit profiles
table     render a multi-epsilon solution table (4-decimal fixed point)
converge  run a mesh-refinement study and report observed orders
presets   list the bundled example problems and their variants

Exit codes: 0 success, 2 bad arguments, 3 solver breakdown, 4 output
I/O failure.  Output is deterministic: identical configurations produce
byte-identical artifacts (UTF-8, LF line endings, no timestamps), and
CSV floats carry 17 significant digits so profiles round-trip exactly.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

import numpy as np

from .manufactured import FAMILIES, family
from .mesh import (
    DEFAULT_N_INNER,
    DEFAULT_N_OUTER,
    InvalidGrid,
    InvalidSplit,
    UniformGrid,
    build_decomposition,
    default_split_point,
)
from .model import GaitProblem, PresetId, Variant, ZeroStiffness, preset
from .reference_tables import CANONICAL_EPSILONS
from .solver import (
    ConvergenceReport,
    SolutionProfile,
    convergence_study,
    solve,
    solve_monolithic,
)
from .tridiag import PivotBreakdown

__all__ = ["RunConfig", "main", "parse_solution_csv", "run"]


@dataclass
class RunConfig:
    """Validated CLI invocation."""

    command: str
    preset_id: PresetId | None = None
    variant: Variant = Variant.TABLE_CONSISTENT
    epsilons: tuple[float, ...] = ()
    t_p: float | None = None
    n_inner: int = DEFAULT_N_INNER
    n_outer: int = DEFAULT_N_OUTER
    mode: str = "decomposed"
    fmt: str = "csv"
    out: str | None = None
    manufactured: str | None = None
    base_n: int = 32
    levels: int = 4


def _float17(x: float) -> str:
    return format(float(x), ".17g")


def _solve_one(config: RunConfig, epsilon: float) -> SolutionProfile:
    problem = preset(config.preset_id, config.variant, epsilon=epsilon)
    if config.mode == "monolithic":
        return solve_monolithic(
            problem, UniformGrid(0.0, problem.t_f, config.n_outer)
        )
    t_p = config.t_p if config.t_p is not None else default_split_point(problem)
    plan = build_decomposition(problem, t_p, config.n_inner, config.n_outer)
    return solve(problem, plan)


def _render_csv(
    profiles: list[SolutionProfile], epsilons: tuple[float, ...]
) -> str:
    lines = ["t,z,region,epsilon"]
    for eps, profile in zip(epsilons, profiles):
        lines.append(f"# epsilon={eps!r}")
        for t, z, region in profile.samples:
            lines.append(f"{_float17(t)},{_float17(z)},{region},{eps!r}")
    return "\n".join(lines) + "\n"


def parse_solution_csv(text: str) -> list[tuple[float, float, str, float]]:
    """Parse solve CSV output back into (t, z, region, epsilon) rows."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line == "t,z,region,epsilon":
            continue
        t, z, region, eps = line.split(",")
        rows.append((float(t), float(z), region, float(eps)))
    return rows


def _render_gnuplot(
    profiles: list[SolutionProfile], epsilons: tuple[float, ...]
) -> str:
    blocks = []
    for eps, profile in zip(epsilons, profiles):
        lines = [f"# epsilon={eps!r}"]
        lines += [
            f"{_float17(t)} {_float17(z)}" for t, z, _ in profile.samples
        ]
        blocks.append("\n".join(lines))
    # two blank lines between blocks so gnuplot's `index` can address them
    return "\n\n\n".join(blocks) + "\n"


def _table_column_order(epsilons: tuple[float, ...]) -> tuple[float, ...]:
    if sorted(epsilons) == sorted(CANONICAL_EPSILONS):
        return CANONICAL_EPSILONS
    return tuple(sorted(epsilons))


def _render_table(
    profiles: list[SolutionProfile], epsilons: tuple[float, ...]
) -> str:
    order = _table_column_order(epsilons)
    by_eps = dict(zip(epsilons, profiles))
    profiles = [by_eps[e] for e in order]
    times = profiles[0].t
    for p in profiles[1:]:
        if len(p.t) != len(times) or not np.allclose(p.t, times, rtol=1e-9):
            raise ValueError("profiles sample different times; cannot tabulate")
    header = f"{'Time':>8}" + "".join(f"{e!r:>12}" for e in order)
    lines = [header]
    for i, t in enumerate(times):
        row = f"{t:8.4f}" + "".join(f"{p.z[i]:12.4f}" for p in profiles)
        lines.append(row)
    return "\n".join(lines) + "\n"


def _render_convergence(
    reports: list[ConvergenceReport], epsilons: tuple[float, ...]
) -> str:
    lines = []
    for eps, report in zip(epsilons, reports):
        lines.append(
            f"# epsilon={eps!r} mode={report.mode} reference={report.reference}"
        )
        lines.append("k,max_error,observed_order")
        for row in report.rows:
            order = "" if row.observed_order is None else f"{row.observed_order:.4f}"
            lines.append(f"{_float17(row.k)},{_float17(row.max_error)},{order}")
    return "\n".join(lines) + "\n"


_PRESET_NOTES = """\
available presets
-----------------
1  exponential damping and stiffness
   e^2 Z'' + e^2 exp(T) Z' - 2 exp(-T) Z = -9.8,  Z(0) = 4, Z(1) = 2
   as-written: the reduced solution 4.9 exp(+T) grows, contradicting the
   decaying reference table; table-consistent flips the stiffness
   exponent to -2 exp(+T), whose reduced solution is 4.9 exp(-T).
   default split point: 0.02
2  linear damping and stiffness
   e^2 Z'' + e^2 T Z' - 1000 T Z = -10,  Z(0) = 1, Z(1) = 0.1
   as-written: ends at 0.1; the reference table ends at 0.0100, which is
   also the reduced solution 0.01/T at T = 1, so table-consistent uses
   f2 = 0.01.
   default split point: 0.01
3  pure stiffness
   e^2 Z'' - exp(T) Z = -10,  Z(0) = 9.6, Z(1) = 3
   internally consistent; both variants coincide.
   default split point: 0.01

variants: as-written | table-consistent (default)
The stiffness is stored with the sign it carries on the left-hand side,
so all three presets have negative stiffness and fail the textbook
stability margin; the assembled systems are diagonally dominant anyway.
(e stands for the perturbation parameter epsilon.)
"""


def run(config: RunConfig) -> str:
    """Execute a validated configuration and return the artifact text."""
    if config.command == "presets":
        return _PRESET_NOTES

    if config.command == "converge":
        reports = []
        for eps in config.epsilons:
            if config.manufactured is not None:
                case = family(config.manufactured)
                problem = case.problem(eps)
                # The exact solution is only a usable error reference on
                # whole-domain solves; the decomposed method's interface
                # seed keeps a fixed O(eps) offset, so it is measured
                # against its own finest grid instead.
                exact = case.exact if config.mode == "monolithic" else None
            else:
                problem = preset(config.preset_id, config.variant, epsilon=eps)
                exact = None
            reports.append(
                convergence_study(
                    problem,
                    exact=exact,
                    base_n=config.base_n,
                    levels=config.levels,
                    mode=config.mode,
                )
            )
        return _render_convergence(reports, config.epsilons)

    profiles = [_solve_one(config, eps) for eps in config.epsilons]
    if config.command == "table" or config.fmt == "table":
        return _render_table(profiles, config.epsilons)
    if config.fmt == "gnuplot":
        return _render_gnuplot(profiles, config.epsilons)
    return _render_csv(profiles, config.epsilons)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaitbvp",
        description="Finite-difference solver for singularly perturbed "
        "two-point boundary-value problems from a gait model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mesh_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--tp", type=float, default=None,
                       help="inner/outer split point (default: preset-specific)")
        p.add_argument("--n-inner", type=int, default=DEFAULT_N_INNER,
                       help="inner-region intervals (default %(default)s)")
        p.add_argument("--n-outer", type=int, default=DEFAULT_N_OUTER,
                       help="outer-region intervals (default %(default)s)")

    def add_preset_flags(p: argparse.ArgumentParser, required: bool) -> None:
        p.add_argument("--preset", type=int, choices=(1, 2, 3),
                       required=required, help="example problem number")
        p.add_argument("--variant",
                       choices=[v.value for v in Variant],
                       default=Variant.TABLE_CONSISTENT.value,
                       help="problem reading (default %(default)s)")

    def add_epsilon_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--epsilon", type=float, action="append",
                       required=True, metavar="EPS",
                       help="perturbation parameter (repeatable)")

    p_solve = sub.add_parser("solve", help="solve a preset problem")
    add_preset_flags(p_solve, required=True)
    add_epsilon_flag(p_solve)
    add_mesh_flags(p_solve)
    p_solve.add_argument("--mode", choices=("decomposed", "monolithic"),
                         default="decomposed")
    p_solve.add_argument("--format", dest="fmt",
                         choices=("csv", "table", "gnuplot"), default="csv")
    p_solve.add_argument("--out", default=None, help="output path (default stdout)")

    p_table = sub.add_parser("table", help="render a multi-epsilon table")
    add_preset_flags(p_table, required=True)
    add_epsilon_flag(p_table)
    add_mesh_flags(p_table)
    p_table.add_argument("--out", default=None)

    p_conv = sub.add_parser("converge", help="mesh-refinement study")
    add_preset_flags(p_conv, required=False)
    p_conv.add_argument("--manufactured", choices=sorted(FAMILIES),
                        default=None, help="manufactured-solution family")
    add_epsilon_flag(p_conv)
    p_conv.add_argument("--base-n", type=int, default=32)
    p_conv.add_argument("--levels", type=int, default=4)
    p_conv.add_argument("--mode", choices=("decomposed", "monolithic"),
                        default="decomposed")
    p_conv.add_argument("--out", default=None)

    sub.add_parser("presets", help="list the bundled example problems")
    return parser


def _config_from_args(
    parser: argparse.ArgumentParser, args: argparse.Namespace
) -> RunConfig:
    config = RunConfig(command=args.command)
    if args.command == "presets":
        return config

    epsilons = tuple(args.epsilon)
    for eps in epsilons:
        if not (eps > 0.0):
            parser.error(f"--epsilon must be positive, got {eps!r}")
    config.epsilons = epsilons

    if args.preset is not None:
        config.preset_id = PresetId(args.preset)
    config.variant = Variant(args.variant)
    config.out = args.out

    if args.command == "converge":
        if (args.preset is None) == (args.manufactured is None):
            parser.error("converge needs exactly one of --preset / --manufactured")
        config.manufactured = args.manufactured
        if args.base_n < 2:
            parser.error(f"--base-n must be at least 2, got {args.base_n}")
        if args.levels < 2:
            parser.error(f"--levels must be at least 2, got {args.levels}")
        config.base_n = args.base_n
        config.levels = args.levels
        config.mode = args.mode
        return config

    config.t_p = args.tp
    if args.n_inner < 2 or args.n_outer < 2:
        parser.error("--n-inner and --n-outer must be at least 2")
    config.n_inner = args.n_inner
    config.n_outer = args.n_outer
    if args.command == "solve":
        config.mode = args.mode
        config.fmt = args.fmt
    else:
        config.fmt = "table"
    return config


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(parser, args)
    try:
        text = run(config)
    except (PivotBreakdown, ZeroStiffness) as err:
        print(f"gaitbvp: solver breakdown: {err}", file=sys.stderr)
        return 3
    except (InvalidSplit, InvalidGrid, ValueError) as err:
        print(f"gaitbvp: invalid arguments: {err}", file=sys.stderr)
        return 2
    try:
        _write(text, config.out)
    except OSError as err:
        print(f"gaitbvp: cannot write output: {err}", file=sys.stderr)
        return 4
    return 0
