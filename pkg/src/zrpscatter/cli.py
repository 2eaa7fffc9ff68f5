"""Command-line front end emitting CSV data and the validation table.

Subcommands
-----------
phases     eigenphases and root residuals over a momentum grid
xsec       averaged cross sections, channel route vs closed-form route
angular    the two-center angular functions and their spherical limits
amplitude  the three amplitude constructions over a direction grid
figures    canned CSV datasets: partial cross sections and basis shapes
validate   the full cross-check suite with machine-readable PASS/FAIL

All numeric fields are serialized with 17 significant digits so values
round-trip exactly; separators are commas, line endings LF, decimal
points '.' regardless of locale.  Grid rows may be computed by a thread
pool capped by the ZRP_THREADS environment variable (default 1); output
order and bytes are identical for every setting.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 numerical
error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .angular import AngularBasis, eval_Z, limit_Y
from .errors import TargetFormatError, ZrpError
from .model import Direction, TwoCenterTarget, eval_phase, load_target, preset
from .phases import sin_sq_from_cot, solve_phases, solve_phases_identical
from .scattering import (
    oracle_amplitude,
    oracle_sigma_bar,
    oracle_solve,
    partial_amplitude_exact,
    partial_amplitude_fixed,
    sigma_bar,
)
from .validation import DEFAULT_C2_R, run_checks

__all__ = ["RunConfig", "run", "main"]

# Default z values for the angular-function tables; chosen to span the
# near-spherical limit up to strongly two-center shapes.
DEFAULT_Z_VALUES = (0.001, 1.0, 2.0, 4.0)
# Internal consistency bound for the two-route figure data (relative to
# the unitarity ceiling 4*pi/k**2 of each partial cross section).
FIGURE_ROUTE_TOL = 1e-10


class _UsageError(Exception):
    """Bad invocation detected after argparse (reported with exit code 2)."""


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by the grid-emitting subcommands."""

    subcommand: str
    target_source: str
    k_min: float
    k_max: float
    k_steps: int
    nodes: int
    out_path: str | None
    tolerance: float

    def __post_init__(self):
        if not (0.0 < self.k_min <= self.k_max):
            raise ValueError(
                f"need 0 < k_min <= k_max, got k_min={self.k_min!r} k_max={self.k_max!r}"
            )
        if self.k_steps < 1:
            raise ValueError(f"k_steps must be >= 1, got {self.k_steps!r}")
        if self.nodes < 2:
            raise ValueError(f"nodes must be >= 2, got {self.nodes!r}")
        if not self.tolerance > 0.0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance!r}")

    @property
    def k_grid(self) -> list[float]:
        return [float(k) for k in np.linspace(self.k_min, self.k_max, self.k_steps)]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _thread_count() -> int:
    raw = os.environ.get("ZRP_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise _UsageError(f"ZRP_THREADS must be an integer >= 1, got {raw!r}") from None
    if n < 1:
        raise _UsageError(f"ZRP_THREADS must be an integer >= 1, got {raw!r}")
    return n


def _map_rows(fn: Callable, items: Sequence) -> list:
    """Order-preserving map, threaded when ZRP_THREADS > 1.

    Each item is independent pure computation, so the result (and hence
    the emitted bytes) cannot depend on the worker count.
    """
    n = _thread_count()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _emit(lines: Iterable[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
        return
    with open(out_path, "w", newline="\n") as fh:
        fh.write(text)
    print(f"wrote {out_path}", file=sys.stderr)


def _resolve_target(source: str, R: float | None) -> TwoCenterTarget:
    if source not in ("CH", "C2") and Path(source).exists():
        if R is not None:
            raise _UsageError("--R applies to the built-in presets; edit the target file instead")
        return load_target(source)
    provenance = "--R command-line flag" if R is not None else None
    return preset(source, R=R, r_provenance=provenance)


def _cmd_phases(config: RunConfig, target: TwoCenterTarget) -> int:
    def row(k: float) -> str:
        ph = solve_phases(target, k)
        return ",".join(
            _fmt(v)
            for v in (
                k,
                k * target.R,
                ph.eta0,
                ph.eta1,
                ph.cot_eta0,
                ph.cot_eta1,
                ph.residual0,
                ph.residual1,
            )
        )

    header = "k,z,eta0,eta1,cot_eta0,cot_eta1,residual0,residual1"
    _emit([header, *_map_rows(row, config.k_grid)], config.out_path)
    return 0


def _cmd_xsec(config: RunConfig, target: TwoCenterTarget) -> int:
    def row(k: float) -> str:
        cs = sigma_bar(target, k)
        averaged = oracle_sigma_bar(target, k, nodes=config.nodes)
        return ",".join(
            _fmt(v)
            for v in (
                k,
                cs.sigma0,
                cs.sigma1,
                cs.sigma_total,
                averaged,
                abs(averaged - cs.sigma_total),
            )
        )

    header = "k,sigma0,sigma1,sigma_total,oracle_sigma,abs_diff"
    _emit([header, *_map_rows(row, config.k_grid)], config.out_path)
    return 0


def _angular_table(z: float, theta_steps: int) -> list[str]:
    basis = AngularBasis(k=z, R=1.0)
    lines = ["theta_deg,Z0,Z1,Y00,Y10"]
    for theta in np.linspace(0.0, 180.0, theta_steps):
        u = math.cos(math.radians(float(theta)))
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    float(theta),
                    eval_Z(0, basis, u),
                    eval_Z(1, basis, u),
                    limit_Y(0, u),
                    limit_Y(1, u),
                )
            )
        )
    return lines


def _cmd_angular(args: argparse.Namespace) -> int:
    z_values = args.z if args.z else list(DEFAULT_Z_VALUES)
    if any(z <= 0 for z in z_values):
        raise _UsageError("--z values must be > 0")
    if args.theta_steps < 2:
        raise _UsageError("--theta-steps must be >= 2")
    if args.out is None:
        sections = []
        for z in z_values:
            sections.append(f"# z = {z:g}")
            sections.extend(_angular_table(z, args.theta_steps))
        _emit(sections, None)
        return 0
    if len(z_values) == 1:
        _emit(_angular_table(z_values[0], args.theta_steps), args.out)
        return 0
    out = Path(args.out)
    for z in z_values:
        path = out.with_name(f"{out.stem}_z{z:g}{out.suffix}")
        _emit(_angular_table(z, args.theta_steps), str(path))
    return 0


def _cmd_amplitude(args: argparse.Namespace, target: TwoCenterTarget) -> int:
    if args.k <= 0:
        raise _UsageError(f"--k must be > 0, got {args.k!r}")
    if args.u_steps < 2:
        raise _UsageError("--u-steps must be >= 2")
    k = args.k
    grid = [float(u) for u in np.linspace(-1.0, 1.0, args.u_steps)]

    def block(u_in: float) -> list[str]:
        sol = oracle_solve(target, k, Direction(u_in))
        rows = []
        for u_out in grid:
            fo = oracle_amplitude(sol, Direction(u_out)).value
            fe = partial_amplitude_exact(target, k, Direction(u_in), Direction(u_out)).value
            ff = partial_amplitude_fixed(target, k, Direction(u_in), Direction(u_out)).value
            rows.append(
                ",".join(
                    _fmt(v)
                    for v in (u_in, u_out, fo.real, fo.imag, fe.real, fe.imag, ff.real, ff.imag)
                )
            )
        return rows

    header = "u_in,u_out,re_oracle,im_oracle,re_exact,im_exact,re_fixed,im_fixed"
    lines = [header]
    for rows in _map_rows(block, grid):
        lines.extend(rows)
    _emit(lines, args.out)
    return 0


def _figure1_row(k: float, ch: TwoCenterTarget, c2: TwoCenterTarget) -> tuple[str, float]:
    """One figure1 CSV row plus the worst two-route deviation at this k.

    The symmetric-target cross sections are computed from the general
    quadratic solver and re-derived from the identical-center closed
    forms; their disagreement is measured relative to the unitarity
    ceiling 4*pi/k**2 and must stay below FIGURE_ROUTE_TOL.
    """
    ch_cs = sigma_bar(ch, k)
    c2_cs = sigma_bar(c2, k)
    closed = solve_phases_identical(eval_phase(c2.center1, k), c2.R, k)
    ceiling = 4.0 * math.pi / (k * k)
    deviation = max(
        abs(c2_cs.sigma0 - ceiling * sin_sq_from_cot(closed.cot_eta0)),
        abs(c2_cs.sigma1 - ceiling * sin_sq_from_cot(closed.cot_eta1)),
    ) / ceiling
    for cs in (ch_cs, c2_cs):
        if max(cs.sigma0, cs.sigma1) > ceiling * (1.0 + 1e-12):
            raise ZrpError(
                f"partial cross section exceeds the unitarity ceiling at k={k!r}"
            )
    row = ",".join(
        _fmt(v)
        for v in (
            k,
            ch_cs.sigma0,
            ch_cs.sigma1,
            ch_cs.sigma_total,
            c2_cs.sigma0,
            c2_cs.sigma1,
            c2_cs.sigma_total,
        )
    )
    return row, deviation


def _cmd_figures(config: RunConfig, args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ch = preset("CH")
    c2 = preset("C2", R=args.c2_R, r_provenance="--c2-R command-line flag")

    results = _map_rows(lambda k: _figure1_row(k, ch, c2), config.k_grid)
    worst = max(dev for _, dev in results)
    if worst > FIGURE_ROUTE_TOL:
        raise ZrpError(
            f"two-route cross-section disagreement {worst:.3e} exceeds "
            f"{FIGURE_ROUTE_TOL:g} for the symmetric target (R={args.c2_R!r})"
        )
    header = "k,ch_sigma0,ch_sigma1,ch_sigma_total,c2_sigma0,c2_sigma1,c2_sigma_total"
    _emit([header, *(row for row, _ in results)], str(out_dir / "figure1.csv"))

    for lam, name in ((0, "figure2.csv"), (1, "figure3.csv")):
        columns = [f"Z{lam}_z{z:g}" for z in DEFAULT_Z_VALUES]
        lines = [",".join(["theta_deg", f"Y{lam}0", *columns])]
        bases = [AngularBasis(k=z, R=1.0) for z in DEFAULT_Z_VALUES]
        for theta in np.linspace(0.0, 180.0, 181):
            u = math.cos(math.radians(float(theta)))
            values = [float(theta), limit_Y(lam, u)]
            values.extend(eval_Z(lam, basis, u) for basis in bases)
            lines.append(",".join(_fmt(v) for v in values))
        _emit(lines, str(out_dir / name))
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    if not args.tol > 0:
        raise _UsageError(f"--tol must be > 0, got {args.tol!r}")
    rows = run_checks(tolerance=args.tol, c2_R=args.c2_R, nodes=args.nodes)
    lines = ["check,target,k,residual,tolerance,status"]
    for r in rows:
        lines.append(
            f"{r.check},{r.target},{_fmt(r.k)},{_fmt(r.residual)},{_fmt(r.tolerance)},{r.status}"
        )
    _emit(lines, None)
    return 1 if any(r.failed for r in rows) else 0


def _add_target_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--target",
        required=True,
        help="'CH', 'C2' (requires --R), or a path to a target JSON file",
    )
    sub.add_argument(
        "--R",
        type=float,
        default=None,
        help="internuclear distance in bohr (required for C2, optional for CH)",
    )


def _add_grid_flags(sub: argparse.ArgumentParser, k_steps: int) -> None:
    sub.add_argument("--k-min", type=float, default=0.01, help="grid start, 1/bohr")
    sub.add_argument("--k-max", type=float, default=2.0, help="grid end, 1/bohr")
    sub.add_argument("--k-steps", type=int, default=k_steps, help="number of grid rows")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zrpscatter",
        description="Eigenphases, cross sections, and amplitudes for two-center "
        "zero-range scattering, emitted as CSV.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("phases", help="eigenphases over a momentum grid")
    _add_target_flags(p)
    _add_grid_flags(p, 200)
    p.add_argument("--out", default=None, help="output CSV path (default: stdout)")

    p = subs.add_parser("xsec", help="averaged cross sections over a momentum grid")
    _add_target_flags(p)
    _add_grid_flags(p, 200)
    p.add_argument("--nodes", type=int, default=64, help="quadrature nodes for the average")
    p.add_argument("--out", default=None, help="output CSV path (default: stdout)")

    p = subs.add_parser("angular", help="angular basis functions vs polar angle")
    p.add_argument(
        "--z",
        type=float,
        action="append",
        default=None,
        help="z = k*R value; repeatable (default: 0.001 1 2 4)",
    )
    p.add_argument("--theta-steps", type=int, default=181, help="rows per table")
    p.add_argument(
        "--out",
        default=None,
        help="output CSV path; multiple z values write <stem>_z<value><suffix>",
    )

    p = subs.add_parser("amplitude", help="the three amplitude constructions on a direction grid")
    _add_target_flags(p)
    p.add_argument("--k", type=float, default=1.0, help="momentum, 1/bohr")
    p.add_argument("--u-steps", type=int, default=21, help="direction-cosine grid size per axis")
    p.add_argument("--out", default=None, help="output CSV path (default: stdout)")

    p = subs.add_parser("figures", help="write figure1.csv, figure2.csv, figure3.csv")
    p.add_argument("--c2-R", type=float, default=DEFAULT_C2_R,
                   help="internuclear distance for the symmetric target, bohr")
    _add_grid_flags(p, 400)
    p.add_argument("--out-dir", default=".", help="directory for the CSV files")

    p = subs.add_parser("validate", help="run the cross-check suite")
    p.add_argument("--tol", type=float, default=1e-9, help="identity-check tolerance")
    p.add_argument("--c2-R", type=float, default=DEFAULT_C2_R,
                   help="internuclear distance for the symmetric target, bohr")
    p.add_argument("--nodes", type=int, default=64, help="quadrature nodes for averages")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    config = RunConfig(
        subcommand=args.subcommand,
        target_source=getattr(args, "target", "-"),
        k_min=getattr(args, "k_min", 0.01),
        k_max=getattr(args, "k_max", 2.0),
        k_steps=getattr(args, "k_steps", 1),
        nodes=getattr(args, "nodes", 64),
        out_path=getattr(args, "out", None),
        tolerance=getattr(args, "tol", 1e-9),
    )
    if args.subcommand == "phases":
        return _cmd_phases(config, _resolve_target(args.target, args.R))
    if args.subcommand == "xsec":
        return _cmd_xsec(config, _resolve_target(args.target, args.R))
    if args.subcommand == "angular":
        return _cmd_angular(args)
    if args.subcommand == "amplitude":
        return _cmd_amplitude(args, _resolve_target(args.target, args.R))
    if args.subcommand == "figures":
        return _cmd_figures(config, args)
    if args.subcommand == "validate":
        return _cmd_validate(args)
    raise _UsageError(f"unknown subcommand {args.subcommand!r}")


def run(argv: Sequence[str]) -> int:
    """Parse argv, execute one subcommand, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _dispatch(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (TargetFormatError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ZrpError as exc:
        print(f"numerical error in '{args.subcommand}': {exc}", file=sys.stderr)
        return 3


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
